//! Enumeration of the nonempty cells and the topology they determine.

use rayon::prelude::*;
use serde::Serialize;

use crate::combinatorics::{
    tableau_dimension_unchecked, BlockOrder, CellRecord, HessenbergFunction, JordanData,
    MultiTableau, Permutation,
};
use crate::{Error, Result};

/// Largest `n` enumerated without an explicit override.
pub const ENUMERATION_GUARD: usize = 10;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EnumerationOptions {
    pub force: bool,
    /// Worker threads; `0` lets rayon decide, `1` runs inline.
    pub jobs: usize,
}

impl Default for EnumerationOptions {
    fn default() -> Self {
        EnumerationOptions {
            force: false,
            jobs: 1,
        }
    }
}

/// Every valid filling of `mt` with its cell dimension, in lexicographic
/// order of the label sequence.
///
/// Boxes are filled in position order. The left neighbour of a box always
/// precedes it, so a partial filling is abandoned as soon as an adjacent
/// pair `[k | j]` breaks `k ≤ h(j)`. The search splits on the label of the
/// first box when running on several threads.
pub fn enumerate_cells(
    mt: &MultiTableau,
    h: &HessenbergFunction,
    opts: EnumerationOptions,
) -> Result<Vec<CellRecord>> {
    let n = mt.n();
    if h.n() != n {
        return Err(Error::SizeMismatch {
            expected: n,
            actual: h.n(),
        });
    }
    if n > ENUMERATION_GUARD && !opts.force {
        return Err(Error::GuardExceeded {
            what: "enumeration",
            n,
            limit: ENUMERATION_GUARD,
        });
    }
    if n == 0 {
        return Ok(Vec::new());
    }

    let branch = |first: usize| {
        let mut out = Vec::new();
        let mut labels = Vec::with_capacity(n);
        labels.push(first);
        search(mt, h, &mut labels, 1u128 << first, &mut out);
        out
    };

    let parts: Vec<Vec<CellRecord>> = if opts.jobs == 1 {
        (0..n).map(branch).collect()
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(opts.jobs)
            .build()
            .map_err(|e| Error::Internal(format!("thread pool: {e}")))?;
        pool.install(|| (0..n).into_par_iter().map(branch).collect())
    };
    Ok(parts.into_iter().flatten().collect())
}

fn search(
    mt: &MultiTableau,
    h: &HessenbergFunction,
    labels: &mut Vec<usize>,
    used: u128,
    out: &mut Vec<CellRecord>,
) {
    let n = mt.n();
    let p = labels.len();
    if p == n {
        let w = Permutation::from_images_unchecked(labels.clone());
        out.push(CellRecord {
            dimension: tableau_dimension_unchecked(mt, &w, h),
            schubert_dimension: w.inversions(),
            permutation: w,
        });
        return;
    }
    let left = mt.left_neighbor(p).map(|lp| labels[lp]);
    for v in 0..n {
        if used & (1 << v) != 0 {
            continue;
        }
        if left.is_some_and(|k| k > h.at(v)) {
            continue;
        }
        labels.push(v);
        search(mt, h, labels, used | (1 << v), out);
        labels.pop();
    }
}

/// Betti numbers and derived invariants of `H(X, h)`.
#[derive(Clone, Debug, Serialize)]
pub struct PavingReport {
    pub n: usize,
    #[serde(skip)]
    pub jordan: JordanData,
    #[serde(skip)]
    pub h: HessenbergFunction,
    pub cells: Vec<CellRecord>,
    /// `betti[d] = b_{2d}`, the number of cells of dimension `d`.
    pub betti: Vec<u64>,
    pub euler: u64,
    /// Largest cell dimension.
    pub variety_dimension: usize,
    /// Number of cells of the largest dimension.
    pub top_cell_count: u64,
    pub min_nonzero_dimension: Option<usize>,
    pub symmetric: bool,
    pub unimodal: bool,
}

impl PavingReport {
    pub fn from_cells(jordan: JordanData, h: HessenbergFunction, cells: Vec<CellRecord>) -> Self {
        let variety_dimension = cells.iter().map(|c| c.dimension).max().unwrap_or(0);
        let mut betti = vec![0u64; variety_dimension + 1];
        for c in &cells {
            betti[c.dimension] += 1;
        }
        PavingReport {
            n: jordan.n(),
            euler: betti.iter().sum(),
            top_cell_count: betti[variety_dimension],
            min_nonzero_dimension: cells.iter().map(|c| c.dimension).filter(|&d| d > 0).min(),
            symmetric: is_symmetric(&betti),
            unimodal: is_unimodal(&betti),
            variety_dimension,
            betti,
            jordan,
            h,
            cells,
        }
    }

    /// Coefficients of `P(q) = Σ_w q^{d_w}`.
    pub fn poincare(&self) -> &[u64] {
        &self.betti
    }

    /// `P(q)` at an integer.
    pub fn poincare_at(&self, q: u64) -> u64 {
        self.betti.iter().rev().fold(0, |acc, &b| acc * q + b)
    }

    /// Betti numbers in every degree `0..=2·dim`; odd degrees are zero.
    pub fn betti_by_degree(&self) -> Vec<u64> {
        let mut out = vec![0; 2 * self.variety_dimension + 1];
        for (d, &b) in self.betti.iter().enumerate() {
            out[2 * d] = b;
        }
        out
    }
}

pub fn is_symmetric(seq: &[u64]) -> bool {
    seq.iter().eq(seq.iter().rev())
}

/// Weakly increasing up to a peak, weakly decreasing after it.
pub fn is_unimodal(seq: &[u64]) -> bool {
    let up = seq.windows(2).take_while(|p| p[0] <= p[1]).count();
    seq[up..].windows(2).all(|p| p[0] >= p[1])
}

/// Cells and Betti numbers for `jordan` with the default block order.
pub fn betti_numbers(
    jordan: &JordanData,
    h: &HessenbergFunction,
    opts: EnumerationOptions,
) -> Result<PavingReport> {
    paving_report(jordan, &BlockOrder::default(), h, opts)
}

pub fn paving_report(
    jordan: &JordanData,
    order: &BlockOrder,
    h: &HessenbergFunction,
    opts: EnumerationOptions,
) -> Result<PavingReport> {
    let mt = MultiTableau::new(jordan, order)?;
    let cells = enumerate_cells(&mt, h, opts)?;
    Ok(PavingReport::from_cells(jordan.clone(), h.clone(), cells))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClosedFormCheck {
    pub name: &'static str,
    pub expected: u64,
    pub actual: u64,
    pub passed: bool,
}

impl ClosedFormCheck {
    fn new(name: &'static str, expected: u64, actual: u64) -> Self {
        ClosedFormCheck {
            name,
            expected,
            actual,
            passed: expected == actual,
        }
    }
}

/// Known closed forms that apply to `(jordan, h)`:
///
/// * Springer fibers (`h(i) = i`, one eigenvalue): dimension `Σ (i-1) d_i`
///   and as many top cells as standard tableaux of the shape.
/// * Regular nilpotent (one block of size `n`): dimension `Σ (h(i) - i)`.
/// * Diagonalizable (all shapes single columns): Euler characteristic `n!`.
pub fn closed_form_checks(
    jordan: &JordanData,
    h: &HessenbergFunction,
    report: &PavingReport,
) -> Vec<ClosedFormCheck> {
    let mut checks = Vec::new();
    if h.is_identity() && jordan.blocks().len() == 1 {
        let shape = jordan.blocks()[0].shape();
        let springer: usize = shape.iter().enumerate().map(|(i, d)| i * d).sum();
        checks.push(ClosedFormCheck::new(
            "springer_dimension",
            springer as u64,
            report.variety_dimension as u64,
        ));
        checks.push(ClosedFormCheck::new(
            "springer_top_cells",
            standard_tableaux_count(shape),
            report.top_cell_count,
        ));
    }
    if jordan.is_regular_nilpotent() {
        let expected: usize = (0..h.n()).map(|i| h.at(i) - i).sum();
        checks.push(ClosedFormCheck::new(
            "regular_nilpotent_dimension",
            expected as u64,
            report.variety_dimension as u64,
        ));
    }
    if jordan.is_semisimple() {
        checks.push(ClosedFormCheck::new(
            "semisimple_euler",
            (1..=jordan.n() as u64).product(),
            report.euler,
        ));
    }
    checks
}

/// Number of standard fillings of a Young diagram, counted by adding the
/// labels `1, 2, …` one at a time at every admissible corner.
pub fn standard_tableaux_count(shape: &[usize]) -> u64 {
    fn rec(shape: &[usize], filled: &mut Vec<usize>, remaining: usize) -> u64 {
        if remaining == 0 {
            return 1;
        }
        let mut total = 0;
        for r in 0..shape.len() {
            let fits_row = filled[r] < shape[r];
            let fits_col = r == 0 || filled[r - 1] > filled[r];
            if fits_row && fits_col {
                filled[r] += 1;
                total += rec(shape, filled, remaining - 1);
                filled[r] -= 1;
            }
        }
        total
    }
    rec(shape, &mut vec![0; shape.len()], shape.iter().sum())
}

/// Partitions of `n` as weakly decreasing part lists, largest first.
pub fn partitions(n: usize) -> Vec<Vec<usize>> {
    fn rec(rest: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest == 0 {
            out.push(prefix.clone());
            return;
        }
        for part in (1..=rest.min(max)).rev() {
            prefix.push(part);
            rec(rest - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if n > 0 {
        rec(n, n, &mut Vec::new(), &mut out);
    }
    out
}

/// Every Jordan type of size `n`: multisets of nonempty partitions with
/// total size `n`, one per conjugacy class of operators up to relabelling
/// eigenvalues. Labels are `0, 1, …` in listing order.
pub fn jordan_types(n: usize) -> Vec<JordanData> {
    let catalogue: Vec<Vec<usize>> = (1..=n).flat_map(partitions).collect();
    fn rec(
        catalogue: &[Vec<usize>],
        start: usize,
        rest: usize,
        chosen: &mut Vec<usize>,
        out: &mut Vec<JordanData>,
    ) {
        if rest == 0 {
            let shapes = chosen.iter().map(|&c| catalogue[c].clone()).collect();
            out.push(JordanData::from_shapes(shapes).expect("catalogue shapes are valid"));
            return;
        }
        for c in start..catalogue.len() {
            let size: usize = catalogue[c].iter().sum();
            if size <= rest {
                chosen.push(c);
                rec(catalogue, c, rest - size, chosen, out);
                chosen.pop();
            }
        }
    }
    let mut out = Vec::new();
    rec(&catalogue, 0, n, &mut Vec::new(), &mut out);
    out
}
