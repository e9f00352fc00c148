use std::collections::BTreeMap;

use crate::combinatorics::{HessenbergFunction, MultiTableau, Permutation};
use crate::matrixforms::field::{Field, PrimeField};
use crate::matrixforms::forms::{permutation_matrix, permuted_jordan_form, prime_field_scalars};
use crate::matrixforms::matrix::ExactMatrix;
use crate::{Error, Result};

/// Largest `n` counted without an explicit override; the work is `Σ_w q^{inv(w)}`.
pub const POINT_COUNT_GUARD: usize = 4;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointCount {
    pub q: u64,
    /// `|C_w ∩ H(X, h)(F_q)|` for every `w`, including empty cells.
    pub per_cell: BTreeMap<Permutation, u64>,
    pub total: u64,
}

/// Counts the `F_q`-points of every Bruhat cell of `H(X, h)` by brute force.
///
/// For each `w` it runs through all `q^{inv(w)}` matrices `u ∈ U_w`
/// (free entries exactly at `i < k` with `w(i) > w(k)`) and keeps those
/// with `(uw)^{-1} X (uw)` vanishing at every `(a, b)` with `a > h(b)`.
pub fn point_count_oracle(
    mt: &MultiTableau,
    h: &HessenbergFunction,
    q: u64,
    force: bool,
) -> Result<PointCount> {
    let n = mt.n();
    if h.n() != n {
        return Err(Error::SizeMismatch {
            expected: n,
            actual: h.n(),
        });
    }
    if n > POINT_COUNT_GUARD && !force {
        return Err(Error::GuardExceeded {
            what: "point count",
            n,
            limit: POINT_COUNT_GUARD,
        });
    }
    let field = PrimeField::new(q)?;
    let form = permuted_jordan_form(&field, mt, &prime_field_scalars(mt, &field)?)?;
    let x = form.operator(&field);

    let mut per_cell = BTreeMap::new();
    let mut total = 0;
    for w in Permutation::all(n) {
        let count = count_cell(&field, &x, &w, h)?;
        total += count;
        per_cell.insert(w, count);
    }
    Ok(PointCount { q, per_cell, total })
}

fn count_cell(
    field: &PrimeField,
    x: &ExactMatrix<u64>,
    w: &Permutation,
    h: &HessenbergFunction,
) -> Result<u64> {
    let n = x.n();
    let q = field.order();
    let free: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (i + 1..n).map(move |k| (i, k)))
        .filter(|&(i, k)| w.apply(i) > w.apply(k))
        .collect();
    let p = permutation_matrix(field, w);
    let p_inv = p.transpose();

    let mut digits = vec![0u64; free.len()];
    let mut count = 0;
    loop {
        let mut u = ExactMatrix::identity(field, n);
        for (&(i, k), &d) in free.iter().zip(&digits) {
            u.set(i, k, d);
        }
        let g = u.mul(field, &p);
        let g_inv = p_inv.mul(field, &u.unipotent_inverse(field)?);
        let m = g_inv.mul(field, x).mul(field, &g);
        let in_h =
            (0..n).all(|a| (0..n).all(|b| h.contains_entry(a, b) || field.is_zero(m.get(a, b))));
        count += in_h as u64;

        // Next u in base-q order.
        let Some(pos) = digits.iter().position(|&d| d + 1 < q) else {
            break;
        };
        digits[pos] += 1;
        digits[..pos].iter_mut().for_each(|d| *d = 0);
    }
    Ok(count)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::JordanData;

    fn mt(j: JordanData) -> MultiTableau {
        MultiTableau::from_jordan(&j)
    }

    #[test]
    fn regular_nilpotent_2x2_springer_fiber() {
        let t = mt(JordanData::nilpotent(vec![2]).unwrap());
        let pc = point_count_oracle(&t, &HessenbergFunction::identity(2), 2, false).unwrap();
        assert_eq!(pc.total, 1);
        assert_eq!(pc.per_cell[&Permutation::identity(2)], 1);
        assert_eq!(pc.per_cell[&Permutation::longest(2)], 0);
    }

    #[test]
    fn flag_variety_of_plane() {
        let t = mt(JordanData::regular_semisimple(2));
        let pc = point_count_oracle(&t, &HessenbergFunction::full(2), 2, false).unwrap();
        assert_eq!(pc.total, 3);
    }

    #[test]
    fn full_flags_of_three_space() {
        for j in [
            JordanData::nilpotent(vec![3]).unwrap(),
            JordanData::nilpotent(vec![2, 1]).unwrap(),
            JordanData::from_shapes(vec![vec![1, 1], vec![1]]).unwrap(),
        ] {
            let pc = point_count_oracle(&mt(j), &HessenbergFunction::full(3), 2, false).unwrap();
            assert_eq!(pc.total, 21);
        }
    }

    #[test]
    fn guards_and_field_size() {
        let t = mt(JordanData::nilpotent(vec![5]).unwrap());
        assert!(matches!(
            point_count_oracle(&t, &HessenbergFunction::full(5), 2, false),
            Err(Error::GuardExceeded { .. })
        ));
        let t = mt(JordanData::regular_semisimple(3));
        assert!(point_count_oracle(&t, &HessenbergFunction::full(3), 2, false).is_err());
        assert!(point_count_oracle(&t, &HessenbergFunction::full(3), 4, false).is_err());
        assert!(point_count_oracle(&t, &HessenbergFunction::full(3), 3, false).is_ok());
    }
}
