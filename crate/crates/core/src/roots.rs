//! Type `A_{n-1}` roots and the root-system form of the cell dimension.
//!
//! The root `α = α_i + … + α_{j-1}` is identified with the matrix slot
//! `(i, j)`; it is positive when `i < j`. A permutation acts by
//! `w^{-1} E_{ij} w = E_{w(i), w(j)}`.

use std::collections::BTreeSet;

use num_rational::BigRational;

use crate::combinatorics::{HessenbergFunction, MultiTableau, Permutation};
use crate::matrixforms::{pivots, rational_form, Field, PermutedJordanForm, Rationals};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Root {
    i: usize,
    j: usize,
}

impl Root {
    pub fn new(i: usize, j: usize) -> Result<Self> {
        if i == j {
            return Err(Error::Contract(format!("({i}, {j}) is not a root slot")));
        }
        Ok(Root { i, j })
    }

    pub fn slot(&self) -> (usize, usize) {
        (self.i, self.j)
    }

    pub fn is_positive(&self) -> bool {
        self.i < self.j
    }

    pub fn negate(&self) -> Root {
        Root {
            i: self.j,
            j: self.i,
        }
    }

    /// `(i, k) + (k, j) = (i, j)`; every other sum is rejected.
    pub fn checked_add(&self, other: &Root) -> Option<Root> {
        (self.j == other.i && self.i != other.j).then_some(Root {
            i: self.i,
            j: other.j,
        })
    }

    /// `α(S) = S_jj - S_ii`.
    pub fn evaluate<F: Field>(&self, field: &F, diag: &[F::Elem]) -> F::Elem {
        field.sub(&diag[self.j], &diag[self.i])
    }
}

/// `w^{-1} α` for the root `α` at slot `(i, j)`.
pub fn root_action(w: &Permutation, r: &Root) -> Root {
    Root {
        i: w.apply(r.i),
        j: w.apply(r.j),
    }
}

/// `Φ_H`, `Φ_{S+N}` and the diagonal of `S`.
#[derive(Clone, Debug)]
pub struct RootSets {
    pub phi_h: BTreeSet<Root>,
    pub phi_sn: BTreeSet<Root>,
    pub diag: Vec<BigRational>,
}

impl RootSets {
    pub fn new(form: &PermutedJordanForm<BigRational>, h: &HessenbergFunction) -> Result<Self> {
        let n = form.s.n();
        if h.n() != n {
            return Err(Error::SizeMismatch {
                expected: n,
                actual: h.n(),
            });
        }
        let phi_h = (0..n)
            .flat_map(|a| (0..n).map(move |b| (a, b)))
            .filter(|&(a, b)| a != b && h.contains_entry(a, b))
            .map(|(i, j)| Root { i, j })
            .collect();
        let phi_sn = pivots(&Rationals, &form.n, &form.s)?
            .pivots
            .iter()
            .map(|p| Root { i: p.row, j: p.col })
            .collect();
        let diag = (0..n).map(|i| form.s.get(i, i).clone()).collect();
        Ok(RootSets {
            phi_h,
            phi_sn,
            diag,
        })
    }

    pub fn for_tableau(mt: &MultiTableau, h: &HessenbergFunction) -> Result<Self> {
        RootSets::new(&rational_form(mt), h)
    }

    pub fn n(&self) -> usize {
        self.diag.len()
    }

    pub fn positive_roots(&self) -> impl Iterator<Item = Root> {
        let n = self.n();
        (0..n).flat_map(move |i| (i + 1..n).map(move |j| Root { i, j }))
    }
}

/// `C_w` meets the variety iff `w^{-1} Φ_{S+N} ⊆ Φ_H`.
pub fn is_nonempty_root(w: &Permutation, sets: &RootSets) -> bool {
    sets.phi_sn
        .iter()
        .all(|b| sets.phi_h.contains(&root_action(w, b)))
}

/// `|A| + |B|` with
/// `A = {α > 0 : α(S) = 0, w^{-1}α < 0, w^{-1}(α + β) ∈ Φ_H}`, where `β` is
/// the pivot root continuing `α` (α counts when there is none), and
/// `B = {α > 0 : α(S) ≠ 0, w^{-1}α ∈ Φ_H, w^{-1}α < 0}`.
pub fn cell_dimension_root(w: &Permutation, sets: &RootSets) -> Result<usize> {
    if w.len() != sets.n() {
        return Err(Error::SizeMismatch {
            expected: sets.n(),
            actual: w.len(),
        });
    }
    if !is_nonempty_root(w, sets) {
        return Err(Error::Contract(format!(
            "w^-1 Φ_(S+N) is not contained in Φ_H for w = {w}"
        )));
    }
    let q = Rationals;
    let mut d = 0;
    for alpha in sets.positive_roots() {
        let image = root_action(w, &alpha);
        if image.is_positive() {
            continue;
        }
        if q.is_zero(&alpha.evaluate(&q, &sets.diag)) {
            let mut sums = sets.phi_sn.iter().filter_map(|b| alpha.checked_add(b));
            let counted = match (sums.next(), sums.next()) {
                (None, _) => true,
                (Some(sum), None) => sets.phi_h.contains(&root_action(w, &sum)),
                (Some(_), Some(_)) => {
                    return Err(Error::Internal(format!(
                        "two pivot roots continue {alpha:?}"
                    )))
                }
            };
            d += counted as usize;
        } else if sets.phi_h.contains(&image) {
            d += 1;
        }
    }
    Ok(d)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::JordanData;
    use crate::matrixforms::{permutation_matrix, ExactMatrix};

    fn perm(v: &[usize]) -> Permutation {
        Permutation::from_one_based(v).unwrap()
    }

    #[test]
    fn root_arithmetic() {
        let a = Root::new(0, 2).unwrap();
        assert!(a.is_positive());
        assert_eq!(a.negate(), Root::new(2, 0).unwrap());
        assert_eq!(
            a.checked_add(&Root::new(2, 3).unwrap()),
            Some(Root::new(0, 3).unwrap())
        );
        assert_eq!(a.checked_add(&Root::new(1, 3).unwrap()), None);
        assert_eq!(a.checked_add(&a.negate()), None);
        assert!(Root::new(1, 1).is_err());
    }

    #[test]
    fn action_examples() {
        let r = Root::new(0, 1).unwrap();
        assert_eq!(root_action(&Permutation::identity(2), &r), r);
        assert_eq!(root_action(&perm(&[2, 1]), &r), r.negate());
        assert_eq!(
            root_action(&perm(&[2, 3, 1]), &Root::new(0, 2).unwrap()),
            Root::new(1, 0).unwrap()
        );
    }

    #[test]
    fn action_matches_matrix_conjugation() {
        let q = Rationals;
        for n in 2..=4 {
            for w in Permutation::all(n) {
                let p = permutation_matrix(&q, &w);
                for i in 0..n {
                    for j in 0..n {
                        if i == j {
                            continue;
                        }
                        let r = Root::new(i, j).unwrap();
                        let conj = p
                            .transpose()
                            .mul(&q, &ExactMatrix::unit(&q, n, i, j))
                            .mul(&q, &p);
                        let (a, b) = root_action(&w, &r).slot();
                        assert_eq!(conj, ExactMatrix::unit(&q, n, a, b));
                    }
                }
            }
        }
    }

    #[test]
    fn root_sets_invariants() {
        let mt =
            MultiTableau::from_jordan(&JordanData::from_shapes(vec![vec![2, 1], vec![2]]).unwrap());
        let h = HessenbergFunction::new(&[2, 3, 3, 5, 5]).unwrap();
        let sets = RootSets::for_tableau(&mt, &h).unwrap();
        assert!(sets.positive_roots().all(|r| sets.phi_h.contains(&r)));
        let q = Rationals;
        assert!(sets
            .phi_sn
            .iter()
            .all(|r| q.is_zero(&r.evaluate(&q, &sets.diag))));
        assert_eq!(sets.phi_sn.len(), 2);
    }

    #[test]
    fn dimension_examples() {
        let mt = MultiTableau::from_jordan(&JordanData::nilpotent(vec![2, 1]).unwrap());
        let sets = RootSets::for_tableau(&mt, &HessenbergFunction::identity(3)).unwrap();
        assert_eq!(
            cell_dimension_root(&Permutation::identity(3), &sets).unwrap(),
            0
        );
        assert_eq!(cell_dimension_root(&perm(&[3, 1, 2]), &sets).unwrap(), 1);
        assert!(cell_dimension_root(&perm(&[1, 3, 2]), &sets).is_err());

        let mt = MultiTableau::from_jordan(&JordanData::regular_semisimple(3));
        let sets =
            RootSets::for_tableau(&mt, &HessenbergFunction::new(&[2, 3, 3]).unwrap()).unwrap();
        assert_eq!(cell_dimension_root(&perm(&[3, 2, 1]), &sets).unwrap(), 2);
    }
}
