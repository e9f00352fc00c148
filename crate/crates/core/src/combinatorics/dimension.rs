use serde::Serialize;

use crate::combinatorics::hessenberg::HessenbergFunction;
use crate::combinatorics::permutation::Permutation;
use crate::combinatorics::tableau::{Filling, MultiTableau};
use crate::{Error, Result};

/// One nonempty cell `C_w ∩ H(X, h)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct CellRecord {
    pub permutation: Permutation,
    pub dimension: usize,
    pub schubert_dimension: usize,
}

fn check_size(n: usize, h: &HessenbergFunction) -> Result<()> {
    if h.n() != n {
        return Err(Error::Contract(format!(
            "filling has n = {n} but h has n = {}",
            h.n()
        )));
    }
    Ok(())
}

/// A filling indexes a nonempty cell iff every horizontally adjacent pair
/// `[k | j]` has `k ≤ h(j)`.
pub fn is_valid_filling(f: &Filling<'_>, h: &HessenbergFunction) -> Result<bool> {
    check_size(f.tableau().n(), h)?;
    Ok(valid_unchecked(f.tableau(), f.permutation(), h))
}

pub(crate) fn valid_unchecked(mt: &MultiTableau, w: &Permutation, h: &HessenbergFunction) -> bool {
    mt.adjacent_pairs()
        .all(|(p, q)| w.apply(p) <= h.at(w.apply(q)))
}

/// Cell dimension read off the filling.
///
/// Counts pairs of labels `k < i` with `i` in an earlier box than `k`.
/// Same-tableau pairs need `i ≤ h(j)` when `j` sits immediately right of
/// `k` (and always count otherwise); pairs in different tableaux need
/// `i ≤ h(k)`.
pub fn cell_dimension_tableau(f: &Filling<'_>, h: &HessenbergFunction) -> Result<usize> {
    if !is_valid_filling(f, h)? {
        return Err(Error::Contract(format!(
            "filling {} is not valid for h = {h}",
            f.permutation()
        )));
    }
    Ok(tableau_dimension_unchecked(f.tableau(), f.permutation(), h))
}

pub(crate) fn tableau_dimension_unchecked(
    mt: &MultiTableau,
    w: &Permutation,
    h: &HessenbergFunction,
) -> usize {
    let n = mt.n();
    let mut d = 0;
    for pi in 0..n {
        let i = w.apply(pi);
        for pk in pi + 1..n {
            let k = w.apply(pk);
            if k >= i {
                continue;
            }
            let counted = if mt.same_tableau(pi, pk) {
                mt.right_neighbor(pk)
                    .is_none_or(|pj| i <= h.at(w.apply(pj)))
            } else {
                i <= h.at(k)
            };
            d += counted as usize;
        }
    }
    d
}

/// Matrix-index view of an operator in permuted Jordan form: which
/// diagonal entries of `S` coincide, and where the pivots of the
/// eigenvalue blocks `N_c` sit.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatrixIndexData {
    /// Eigenvalue class of each diagonal index.
    pub classes: Vec<usize>,
    /// `pivot_col[k] = Some(j)` when `N_{kj}` is a pivot of its block.
    pub pivot_col: Vec<Option<usize>>,
}

impl MatrixIndexData {
    pub fn n(&self) -> usize {
        self.classes.len()
    }

    /// `C_w` meets the variety iff `N ∈ wHw^{-1}`, i.e. every pivot `(k, j)`
    /// has `w(k) ≤ h(w(j))`.
    pub fn is_nonempty(&self, w: &Permutation, h: &HessenbergFunction) -> bool {
        self.pivot_col
            .iter()
            .enumerate()
            .all(|(k, pc)| pc.is_none_or(|j| w.apply(k) <= h.at(w.apply(j))))
    }
}

/// Cell dimension from the matrix-index formula: pairs `i < k` with
/// `w(i) > w(k)` such that, if `S_ii = S_kk`, `h(w(j)) ≥ w(i)` whenever
/// `N_{kj}` is a pivot; and if `S_ii ≠ S_kk`, `h(w(k)) ≥ w(i)`.
pub fn cell_dimension_bundle(
    w: &Permutation,
    data: &MatrixIndexData,
    h: &HessenbergFunction,
) -> Result<usize> {
    let n = data.n();
    if w.len() != n {
        return Err(Error::SizeMismatch {
            expected: n,
            actual: w.len(),
        });
    }
    check_size(n, h)?;
    if !data.is_nonempty(w, h) {
        return Err(Error::Contract(format!(
            "cell C_w is empty for w = {w}, h = {h}"
        )));
    }
    let mut d = 0;
    for i in 0..n {
        for k in i + 1..n {
            if w.apply(i) <= w.apply(k) {
                continue;
            }
            let counted = if data.classes[i] == data.classes[k] {
                data.pivot_col[k].is_none_or(|j| h.at(w.apply(j)) >= w.apply(i))
            } else {
                h.at(w.apply(k)) >= w.apply(i)
            };
            d += counted as usize;
        }
    }
    Ok(d)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::jordan::JordanData;

    fn h(v: &[usize]) -> HessenbergFunction {
        HessenbergFunction::new(v).unwrap()
    }

    fn perm(v: &[usize]) -> Permutation {
        Permutation::from_one_based(v).unwrap()
    }

    #[test]
    fn valid_fillings_of_21_brute_force() {
        let mt = MultiTableau::from_jordan(&JordanData::nilpotent(vec![2, 1]).unwrap());
        let h = h(&[1, 2, 3]);
        // Oracle: the only adjacency is box 2 | box 3, so validity is label2 ≤ h(label3).
        let mut valid = Vec::new();
        for w in Permutation::all(3) {
            let labels = w.one_based();
            let oracle = labels[1] <= h.one_based()[labels[2] - 1];
            let f = mt.filling(w.clone()).unwrap();
            assert_eq!(is_valid_filling(&f, &h).unwrap(), oracle);
            if oracle {
                valid.push(labels);
            }
        }
        assert_eq!(valid, vec![vec![1, 2, 3], vec![2, 1, 3], vec![3, 1, 2]]);
    }

    #[test]
    fn full_h_accepts_everything() {
        let mt = MultiTableau::from_jordan(&JordanData::nilpotent(vec![2, 2]).unwrap());
        let h = HessenbergFunction::full(4);
        for w in Permutation::all(4) {
            assert!(is_valid_filling(&mt.filling(w).unwrap(), &h).unwrap());
        }
    }

    #[test]
    fn base_filling_is_valid_with_dimension_zero() {
        for shape in [vec![3, 2, 1], vec![4], vec![2, 2, 1]] {
            let mt = MultiTableau::from_jordan(&JordanData::nilpotent(shape).unwrap());
            let n = mt.n();
            for h in HessenbergFunction::all(n) {
                let f = mt.base_filling();
                assert!(is_valid_filling(&f, &h).unwrap());
                assert_eq!(cell_dimension_tableau(&f, &h).unwrap(), 0);
            }
        }
    }

    #[test]
    fn dimension_examples() {
        let mt = MultiTableau::from_jordan(&JordanData::nilpotent(vec![2, 1]).unwrap());
        let f = mt.filling(perm(&[3, 1, 2])).unwrap();
        assert_eq!(cell_dimension_tableau(&f, &h(&[1, 2, 3])).unwrap(), 1);

        let mt = MultiTableau::from_jordan(&JordanData::regular_semisimple(3));
        let f = mt.filling(perm(&[3, 2, 1])).unwrap();
        assert_eq!(cell_dimension_tableau(&f, &h(&[2, 3, 3])).unwrap(), 2);
    }

    #[test]
    fn invalid_filling_and_size_mismatch_are_contract_violations() {
        let mt = MultiTableau::from_jordan(&JordanData::nilpotent(vec![2, 1]).unwrap());
        let f = mt.filling(perm(&[1, 3, 2])).unwrap();
        assert!(matches!(
            cell_dimension_tableau(&f, &h(&[1, 2, 3])),
            Err(Error::Contract(_))
        ));
        assert!(matches!(
            is_valid_filling(&f, &h(&[2, 2])),
            Err(Error::Contract(_))
        ));
    }

    #[test]
    fn bundle_on_two_point_semisimple() {
        let data = MatrixIndexData {
            classes: vec![0, 1],
            pivot_col: vec![None, None],
        };
        let d = cell_dimension_bundle(&perm(&[2, 1]), &data, &h(&[2, 2])).unwrap();
        assert_eq!(d, 1);
        assert_eq!(
            cell_dimension_bundle(&perm(&[1, 2]), &data, &h(&[2, 2])).unwrap(),
            0
        );
    }
}
