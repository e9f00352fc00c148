#![allow(dead_code)]

use std::collections::BTreeMap;

use hessenberg::analysis::{enumerate_cells, jordan_types, EnumerationOptions};
use hessenberg::combinatorics::{
    cell_dimension_bundle, cell_dimension_tableau, is_valid_filling, CellRecord,
    HessenbergFunction, JordanData, MatrixIndexData, MultiTableau, Permutation,
};
use hessenberg::matrixforms::{cell_dimension_rank_oracle, point_count_oracle};
use hessenberg::roots::{cell_dimension_root, is_nonempty_root, RootSets};

/// Every `(jordan, h)` on `n` letters.
pub fn cases(n: usize) -> Vec<(JordanData, HessenbergFunction)> {
    let hs = HessenbergFunction::all(n);
    jordan_types(n)
        .into_iter()
        .flat_map(|j| hs.iter().map(move |h| (j.clone(), h.clone())))
        .collect()
}

pub fn cells(mt: &MultiTableau, h: &HessenbergFunction) -> Vec<CellRecord> {
    enumerate_cells(mt, h, EnumerationOptions::default()).unwrap()
}

/// Checks nonemptiness and the three dimension formulas on every `w`.
pub fn triple_agreement(jordan: &JordanData, h: &HessenbergFunction) -> Result<usize, String> {
    let mt = MultiTableau::from_jordan(jordan);
    let index = MatrixIndexData::for_tableau(&mt);
    let roots = RootSets::for_tableau(&mt, h).map_err(|e| e.to_string())?;
    let mut checked = 0;
    for w in Permutation::all(mt.n()) {
        let f = mt.filling(w.clone()).unwrap();
        let valid = is_valid_filling(&f, h).unwrap();
        if valid != index.is_nonempty(&w, h) || valid != is_nonempty_root(&w, &roots) {
            return Err(format!("nonemptiness differs at w = {w}, h = {h}"));
        }
        if !valid {
            continue;
        }
        let t = cell_dimension_tableau(&f, h).unwrap();
        let b = cell_dimension_bundle(&w, &index, h).unwrap();
        let r = cell_dimension_root(&w, &roots).unwrap();
        if t != b || t != r {
            return Err(format!(
                "w = {w}, h = {h}, jordan = {jordan:?}: tableau {t}, bundle {b}, root {r}"
            ));
        }
        checked += 1;
    }
    Ok(checked)
}

pub fn rank_agreement(
    jordan: &JordanData,
    h: &HessenbergFunction,
    seed: u64,
) -> Result<usize, String> {
    let mt = MultiTableau::from_jordan(jordan);
    let cs = cells(&mt, h);
    for (idx, c) in cs.iter().enumerate() {
        let r = cell_dimension_rank_oracle(&c.permutation, &mt, h, seed + idx as u64)
            .map_err(|e| format!("w = {}: {e}", c.permutation))?;
        if r != c.dimension {
            return Err(format!(
                "w = {}, h = {h}: tableau {}, rank oracle {r}",
                c.permutation, c.dimension
            ));
        }
    }
    Ok(cs.len())
}

pub fn point_count_agreement(
    jordan: &JordanData,
    h: &HessenbergFunction,
    q: u64,
) -> Result<(), String> {
    let mt = MultiTableau::from_jordan(jordan);
    let dims: BTreeMap<Permutation, usize> = cells(&mt, h)
        .into_iter()
        .map(|c| (c.permutation, c.dimension))
        .collect();
    let counts = point_count_oracle(&mt, h, q, false).map_err(|e| e.to_string())?;
    let mut poincare = 0;
    for (w, &count) in &counts.per_cell {
        let expected = dims.get(w).map_or(0, |&d| q.pow(d as u32));
        if count != expected {
            return Err(format!(
                "w = {w}, h = {h}, q = {q}: {count} points, expected {expected}"
            ));
        }
        poincare += expected;
    }
    if counts.total != poincare {
        return Err(format!(
            "h = {h}, q = {q}: total {} != P(q) = {poincare}",
            counts.total
        ));
    }
    Ok(())
}

/// Coefficients of `Π_{i=1}^n [i]_q`.
pub fn q_factorial(n: usize) -> Vec<u64> {
    let mut poly = vec![1u64];
    for i in 1..=n {
        let mut next = vec![0u64; poly.len() + i - 1];
        for (d, &c) in poly.iter().enumerate() {
            for k in 0..i {
                next[d + k] += c;
            }
        }
        poly = next;
    }
    poly
}

/// Eulerian row by tallying descents of every permutation.
pub fn descent_tally(n: usize) -> Vec<u64> {
    let mut row = vec![0u64; n.max(1)];
    for w in Permutation::all(n) {
        let d = (0..n.saturating_sub(1))
            .filter(|&i| w.apply(i) > w.apply(i + 1))
            .count();
        row[d] += 1;
    }
    row
}

/// Hook length formula.
pub fn hook_length_count(shape: &[usize]) -> u64 {
    let n: usize = shape.iter().sum();
    let mut hooks: u128 = 1;
    for (r, &len) in shape.iter().enumerate() {
        for c in 0..len {
            let arm = len - c - 1;
            let leg = shape[r + 1..].iter().filter(|&&l| l > c).count();
            hooks *= (arm + leg + 1) as u128;
        }
    }
    ((1..=n as u128).product::<u128>() / hooks) as u64
}
