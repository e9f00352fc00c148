use std::ops::Range;

use num_rational::BigRational;
use rand::Rng;

use crate::combinatorics::{HessenbergFunction, MatrixIndexData, MultiTableau, Permutation};
use crate::matrixforms::field::{small_integer, Field, PrimeField, Rationals};
use crate::matrixforms::matrix::ExactMatrix;
use crate::{Error, Result};

/// `S + N` with `S` diagonal and `N` strictly upper triangular.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PermutedJordanForm<E> {
    pub s: ExactMatrix<E>,
    pub n: ExactMatrix<E>,
}

impl<E: Clone + PartialEq> PermutedJordanForm<E> {
    pub fn operator<F: Field<Elem = E>>(&self, field: &F) -> ExactMatrix<E> {
        self.s.add(field, &self.n)
    }
}

/// Eigenvalues over `Q`, one per tableau from the bottom. Labels that are
/// all distinct integers are used as written; otherwise `0, 1, 2, …`.
pub fn rational_scalars(mt: &MultiTableau) -> Vec<BigRational> {
    let q = Rationals;
    let parsed: Option<Vec<i64>> = mt.tableaux().iter().map(|t| t.label.parse().ok()).collect();
    if let Some(values) = parsed {
        let mut sorted = values.clone();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.len() == values.len() {
            return values.into_iter().map(|v| q.integer(v)).collect();
        }
    }
    (0..mt.tableaux().len())
        .map(|i| q.integer(i as i64))
        .collect()
}

/// Eigenvalues over `F_q`: the residues `0, 1, 2, …` from the bottom tableau.
pub fn prime_field_scalars(mt: &MultiTableau, field: &PrimeField) -> Result<Vec<u64>> {
    let k = mt.tableaux().len() as u64;
    if field.order() < k {
        return Err(Error::Contract(format!(
            "F_{} has fewer than {k} distinct eigenvalues",
            field.order()
        )));
    }
    Ok((0..k).collect())
}

/// The permuted Jordan form of the operator whose multitableau is `mt`,
/// with `scalars[t]` the eigenvalue of tableau `t` (bottom first).
///
/// `S_ii` is the eigenvalue of the tableau holding box `i`, and `N` has a 1
/// at `(p, q)` exactly when box `p` is immediately left of box `q`.
pub fn permuted_jordan_form<F: Field>(
    field: &F,
    mt: &MultiTableau,
    scalars: &[F::Elem],
) -> Result<PermutedJordanForm<F::Elem>> {
    if scalars.len() != mt.tableaux().len() {
        return Err(Error::Contract(format!(
            "{} eigenvalues supplied for {} tableaux",
            scalars.len(),
            mt.tableaux().len()
        )));
    }
    for (a, x) in scalars.iter().enumerate() {
        if scalars[..a].contains(x) {
            return Err(Error::Contract(format!(
                "eigenvalue {x} assigned to two tableaux"
            )));
        }
    }
    let n = mt.n();
    let diag = (0..n).map(|p| scalars[mt.tableau_of(p)].clone()).collect();
    let s = ExactMatrix::diagonal(field, diag);
    let mut nil = ExactMatrix::zeros(field, n);
    for (p, q) in mt.adjacent_pairs() {
        nil.set(p, q, field.one());
    }
    Ok(PermutedJordanForm { s, n: nil })
}

/// Permuted Jordan form over `Q` with the default eigenvalues.
pub fn rational_form(mt: &MultiTableau) -> PermutedJordanForm<BigRational> {
    permuted_jordan_form(&Rationals, mt, &rational_scalars(mt))
        .expect("default eigenvalues are distinct")
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Pivot<E> {
    pub row: usize,
    pub col: usize,
    pub value: E,
}

/// Pivots of the eigenvalue blocks `N_c`, in global coordinates, sorted by
/// column.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PivotSet<E> {
    pub pivots: Vec<Pivot<E>>,
}

impl<E> PivotSet<E> {
    pub fn positions(&self) -> Vec<(usize, usize)> {
        self.pivots.iter().map(|p| (p.row, p.col)).collect()
    }

    pub fn is_empty(&self) -> bool {
        self.pivots.is_empty()
    }
}

/// Maximal runs of equal diagonal entries. Fails if some eigenvalue occurs
/// in two separate runs.
pub fn eigen_blocks<E: Clone + PartialEq + std::fmt::Display>(
    x: &ExactMatrix<E>,
) -> Result<Vec<Range<usize>>> {
    let n = x.n();
    let mut blocks: Vec<Range<usize>> = Vec::new();
    for i in 0..n {
        match blocks.last_mut() {
            Some(b) if x.get(b.start, b.start) == x.get(i, i) => b.end = i + 1,
            _ => {
                if blocks
                    .iter()
                    .any(|b| x.get(b.start, b.start) == x.get(i, i))
                {
                    return Err(Error::Contract(format!(
                        "eigenvalue {} is not contiguous on the diagonal",
                        x.get(i, i)
                    )));
                }
                blocks.push(i..i + 1);
            }
        }
    }
    Ok(blocks)
}

/// The minor `X_c` on the indices `j` with `X_jj = c`, together with those
/// indices. Works for any diagonal pattern.
pub fn eigen_submatrix<F: Field>(
    field: &F,
    x: &ExactMatrix<F::Elem>,
    c: &F::Elem,
) -> (Vec<usize>, ExactMatrix<F::Elem>) {
    let idx: Vec<usize> = (0..x.n()).filter(|&i| x.get(i, i) == c).collect();
    let mut m = ExactMatrix::zeros(field, idx.len());
    for (a, &i) in idx.iter().enumerate() {
        for (b, &j) in idx.iter().enumerate() {
            m.set(a, b, x.get(i, j).clone());
        }
    }
    (idx, m)
}

/// Pivots of an arbitrary matrix: nonzero entries with everything to their
/// left in the same row and everything below in the same column zero.
pub fn matrix_pivots<F: Field>(field: &F, m: &ExactMatrix<F::Elem>) -> Vec<(usize, usize)> {
    let n = m.n();
    let mut out = Vec::new();
    for col in 0..n {
        for row in 0..n {
            if field.is_zero(m.get(row, col)) {
                continue;
            }
            let left_clear = (0..col).all(|j| field.is_zero(m.get(row, j)));
            let below_clear = (row + 1..n).all(|i| field.is_zero(m.get(i, col)));
            if left_clear && below_clear {
                out.push((row, col));
            }
        }
    }
    out
}

/// Strictly upper part of a minor.
fn strict_upper<F: Field>(field: &F, m: &ExactMatrix<F::Elem>) -> ExactMatrix<F::Elem> {
    let mut out = m.clone();
    for i in 0..m.n() {
        for j in 0..=i {
            out.set(i, j, field.zero());
        }
    }
    out
}

/// Pivots of each block `N_c` of an upper-triangular `S + N`, reported in
/// global coordinates.
pub fn pivots<F: Field>(
    field: &F,
    n: &ExactMatrix<F::Elem>,
    s: &ExactMatrix<F::Elem>,
) -> Result<PivotSet<F::Elem>> {
    let x = s.add(field, n);
    if !x.is_upper_triangular(field) {
        return Err(Error::Contract("S + N is not upper triangular".into()));
    }
    let mut pivots = Vec::new();
    for block in eigen_blocks(&x)? {
        let (idx, minor) = eigen_submatrix(field, &x, x.get(block.start, block.start));
        for (r, c) in matrix_pivots(field, &strict_upper(field, &minor)) {
            let (row, col) = (idx[r], idx[c]);
            pivots.push(Pivot {
                row,
                col,
                value: x.get(row, col).clone(),
            });
        }
    }
    pivots.sort_by_key(|p| (p.col, p.row));
    Ok(PivotSet { pivots })
}

/// Upper triangular, equal eigenvalues contiguous, and every `N_c` has
/// nondecreasing pivot rows (columns without a pivot count as row 0).
pub fn is_highest_form<F: Field>(field: &F, x: &ExactMatrix<F::Elem>) -> bool {
    if !x.is_upper_triangular(field) {
        return false;
    }
    let Ok(blocks) = eigen_blocks(x) else {
        return false;
    };
    blocks.into_iter().all(|block| {
        let (_, minor) = eigen_submatrix(field, x, x.get(block.start, block.start));
        let nc = strict_upper(field, &minor);
        let mut r = vec![0usize; nc.n()];
        for (row, col) in matrix_pivots(field, &nc) {
            r[col] = row + 1;
        }
        r.windows(2).all(|p| p[0] <= p[1])
    })
}

/// Whether `E_{jk} ∈ wHw^{-1}`, i.e. `w(j) ≤ h(w(k))`.
pub fn entry_in_whw(j: usize, k: usize, w: &Permutation, h: &HessenbergFunction) -> bool {
    w.apply(j) <= h.at(w.apply(k))
}

/// `u^{-1} X u` for unipotent upper-triangular `u`.
pub fn conjugate<F: Field>(
    field: &F,
    u: &ExactMatrix<F::Elem>,
    x: &ExactMatrix<F::Elem>,
) -> Result<ExactMatrix<F::Elem>> {
    let inv = u.unipotent_inverse(field)?;
    Ok(inv.mul(field, x).mul(field, u))
}

/// The permutation matrix with `e_i w = e_{w(i)}`, so that
/// `w^{-1} E_{jk} w = E_{w(j), w(k)}`.
pub fn permutation_matrix<F: Field>(field: &F, w: &Permutation) -> ExactMatrix<F::Elem> {
    let n = w.len();
    let mut m = ExactMatrix::zeros(field, n);
    for i in 0..n {
        m.set(i, w.apply(i), field.one());
    }
    m
}

/// Splits unipotent `u` into row factors: `factors[i]` lies in the row
/// group `U_i` (identity off row `i`), and
/// `u = factors[n-1] · factors[n-2] ⋯ factors[0]`.
pub fn row_factors<F: Field>(
    field: &F,
    u: &ExactMatrix<F::Elem>,
) -> Result<Vec<ExactMatrix<F::Elem>>> {
    if !u.is_unipotent_upper(field) {
        return Err(Error::Contract("not unipotent upper triangular".into()));
    }
    let n = u.n();
    Ok((0..n)
        .map(|i| {
            let mut f = ExactMatrix::identity(field, n);
            for k in i + 1..n {
                f.set(i, k, u.get(i, k).clone());
            }
            f
        })
        .collect())
}

/// Pseudorandom unipotent upper-triangular matrix with off-diagonal entries
/// in `[-bound, bound]`.
pub fn random_unipotent<F: Field, R: Rng>(
    field: &F,
    n: usize,
    rng: &mut R,
    bound: i64,
) -> ExactMatrix<F::Elem> {
    let mut u = ExactMatrix::identity(field, n);
    for i in 0..n {
        for k in i + 1..n {
            u.set(i, k, small_integer(field, rng, bound));
        }
    }
    u
}

/// Pseudorandom element of the row group `U_i`.
pub fn random_row_element<F: Field, R: Rng>(
    field: &F,
    n: usize,
    i: usize,
    rng: &mut R,
    bound: i64,
) -> ExactMatrix<F::Elem> {
    let mut u = ExactMatrix::identity(field, n);
    for k in i + 1..n {
        u.set(i, k, small_integer(field, rng, bound));
    }
    u
}

impl MatrixIndexData {
    /// Reads eigenvalue classes and block pivots off an operator in
    /// permuted Jordan form.
    pub fn from_form<F: Field>(field: &F, form: &PermutedJordanForm<F::Elem>) -> Result<Self> {
        let n = form.s.n();
        let mut class_reps: Vec<F::Elem> = Vec::new();
        let mut classes = Vec::with_capacity(n);
        for i in 0..n {
            let v = form.s.get(i, i);
            let c = match class_reps.iter().position(|r| r == v) {
                Some(c) => c,
                None => {
                    class_reps.push(v.clone());
                    class_reps.len() - 1
                }
            };
            classes.push(c);
        }
        let mut pivot_col = vec![None; n];
        for p in pivots(field, &form.n, &form.s)?.pivots {
            if pivot_col[p.row].replace(p.col).is_some() {
                return Err(Error::Internal(format!("two pivots in row {}", p.row + 1)));
            }
        }
        Ok(MatrixIndexData { classes, pivot_col })
    }

    pub fn for_tableau(mt: &MultiTableau) -> Self {
        MatrixIndexData::from_form(&Rationals, &rational_form(mt))
            .expect("permuted Jordan form has contiguous eigenvalues")
    }
}
