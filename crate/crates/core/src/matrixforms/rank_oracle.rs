use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::combinatorics::{HessenbergFunction, MultiTableau, Permutation};
use crate::matrixforms::field::{Field, Rationals};
use crate::matrixforms::forms::{conjugate, entry_in_whw, rational_form, PermutedJordanForm};
use crate::matrixforms::linsolve::{solve_affine, AffineSolution};
use crate::matrixforms::matrix::ExactMatrix;
use crate::{Error, Result};

/// Free variables of the row systems are drawn from `[-SAMPLE_BOUND, SAMPLE_BOUND]`.
pub const SAMPLE_BOUND: i64 = 10;

/// Trace of one run of the row-by-row solver.
#[derive(Clone, Debug)]
pub struct RankOracleRun<E> {
    /// Affine dimension contributed by each row, indexed by row.
    pub row_dimensions: Vec<usize>,
    /// Number of unknowns `u_ik` (`k > i`, `w(i) > w(k)`) in each row.
    pub row_unknowns: Vec<usize>,
    /// Number of equations imposed on each row.
    pub row_equations: Vec<usize>,
    /// The sampled point `u` of `U_w` with `(uw)^{-1} X (uw) ∈ H`.
    pub sample: ExactMatrix<E>,
}

impl<E> RankOracleRun<E> {
    pub fn dimension(&self) -> usize {
        self.row_dimensions.iter().sum()
    }
}

/// Dimension of `C_w ∩ H(X, h)` by solving the affine row systems exactly
/// over `Q`, starting from the bottom row.
pub fn cell_dimension_rank_oracle(
    w: &Permutation,
    mt: &MultiTableau,
    h: &HessenbergFunction,
    seed: u64,
) -> Result<usize> {
    run_rank_oracle(&Rationals, &rational_form(mt), w, h, seed).map(|r| r.dimension())
}

/// Builds a point of `Z_1 = {u ∈ U_w : u^{-1} X u ∈ wHw^{-1}}` one row at a
/// time, from row `n-1` up to row `0`.
///
/// With `u'` fixed on the rows below `i` and `Y = u'^{-1} X u'`, multiplying
/// by an element of the row group `U_i` changes only row `i` of the
/// conjugate, whose entry in column `j > i` is
/// `S_ii u_ij + Y_ij - Σ_{k>i} u_ik Y_kj`. Requiring it to vanish for every
/// `j` with `w(i) > h(w(j))` gives an affine system in the free entries
/// `u_ik` of `U_w`. Its solution set has dimension `#unknowns - rank`; a
/// pseudorandom solution extends `u'`, and the solved row is re-checked
/// against the full product.
pub fn run_rank_oracle<F: Field>(
    field: &F,
    form: &PermutedJordanForm<F::Elem>,
    w: &Permutation,
    h: &HessenbergFunction,
    seed: u64,
) -> Result<RankOracleRun<F::Elem>> {
    let n = form.s.n();
    if w.len() != n || h.n() != n {
        return Err(Error::SizeMismatch {
            expected: n,
            actual: if w.len() != n { w.len() } else { h.n() },
        });
    }
    for a in 0..n {
        for b in 0..n {
            if !field.is_zero(form.n.get(a, b)) && !entry_in_whw(a, b, w, h) {
                return Err(Error::Contract(format!(
                    "cell C_w is empty for w = {w}: N has a nonzero entry at ({}, {}) outside wHw^-1",
                    a + 1,
                    b + 1
                )));
            }
        }
    }

    let x = form.operator(field);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut u = ExactMatrix::identity(field, n);
    let mut row_dimensions = vec![0; n];
    let mut row_unknowns = vec![0; n];
    let mut row_equations = vec![0; n];

    for i in (0..n).rev() {
        let y = conjugate(field, &u, &x)?;
        let free: Vec<usize> = (i + 1..n).filter(|&k| w.apply(i) > w.apply(k)).collect();
        let constrained: Vec<usize> = (i + 1..n)
            .filter(|&j| w.apply(i) > h.at(w.apply(j)))
            .collect();
        let s_ii = y.get(i, i).clone();
        let coeffs: Vec<Vec<F::Elem>> = constrained
            .iter()
            .map(|&j| {
                free.iter()
                    .map(|&k| {
                        if k == j {
                            field.sub(y.get(k, j), &s_ii)
                        } else {
                            y.get(k, j).clone()
                        }
                    })
                    .collect()
            })
            .collect();
        let rhs: Vec<F::Elem> = constrained.iter().map(|&j| y.get(i, j).clone()).collect();

        let sol = solve_affine(field, &coeffs, &rhs, free.len(), &mut rng, SAMPLE_BOUND);
        let AffineSolution::Solved { rank, sample } = sol else {
            return Err(Error::Internal(format!(
                "inconsistent affine system in row {} for nonempty cell w = {w}",
                i + 1
            )));
        };
        row_unknowns[i] = free.len();
        row_equations[i] = constrained.len();
        row_dimensions[i] = free.len() - rank;

        let mut row_elem = ExactMatrix::identity(field, n);
        for (&k, v) in free.iter().zip(sample) {
            row_elem.set(i, k, v);
        }
        u = u.mul(field, &row_elem);

        let z = conjugate(field, &u, &x)?;
        for r in i..n {
            for j in 0..n {
                if !entry_in_whw(r, j, w, h) && !field.is_zero(z.get(r, j)) {
                    return Err(Error::Internal(format!(
                        "row {} of the conjugate leaves wHw^-1 at column {} after solving row {} (w = {w})",
                        r + 1,
                        j + 1,
                        i + 1
                    )));
                }
            }
        }
    }

    for a in 0..n {
        for b in a + 1..n {
            if w.apply(a) <= w.apply(b) && !field.is_zero(u.get(a, b)) {
                return Err(Error::Internal(format!(
                    "sample left U_w at ({}, {}) for w = {w}",
                    a + 1,
                    b + 1
                )));
            }
        }
    }

    Ok(RankOracleRun {
        row_dimensions,
        row_unknowns,
        row_equations,
        sample: u,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::JordanData;
    use crate::matrixforms::field::PrimeField;
    use crate::matrixforms::forms::{permuted_jordan_form, prime_field_scalars};

    #[test]
    fn identity_cell_has_no_equations() {
        let mt = MultiTableau::from_jordan(&JordanData::nilpotent(vec![2, 1, 1]).unwrap());
        let form = rational_form(&mt);
        for h in HessenbergFunction::all(4) {
            let run = run_rank_oracle(&Rationals, &form, &Permutation::identity(4), &h, 0).unwrap();
            assert_eq!(run.dimension(), 0);
            assert!(run.row_equations.iter().all(|&e| e == 0));
            assert!(run.row_unknowns.iter().all(|&e| e == 0));
        }
    }

    #[test]
    fn small_nilpotent_cell() {
        let mt = MultiTableau::from_jordan(&JordanData::nilpotent(vec![2, 1]).unwrap());
        let w = Permutation::from_one_based(&[3, 1, 2]).unwrap();
        let h = HessenbergFunction::identity(3);
        assert_eq!(cell_dimension_rank_oracle(&w, &mt, &h, 42).unwrap(), 1);
    }

    #[test]
    fn longest_word_in_full_flag_variety() {
        for shape in [vec![3, 1], vec![2, 2], vec![4], vec![1, 1, 1, 1]] {
            let mt = MultiTableau::from_jordan(&JordanData::nilpotent(shape).unwrap());
            let w = Permutation::longest(4);
            let run = run_rank_oracle(
                &Rationals,
                &rational_form(&mt),
                &w,
                &HessenbergFunction::full(4),
                3,
            )
            .unwrap();
            assert_eq!(run.dimension(), 6);
            assert!(run.row_equations.iter().all(|&e| e == 0));
        }
    }

    #[test]
    fn empty_cell_is_rejected() {
        let mt = MultiTableau::from_jordan(&JordanData::nilpotent(vec![2, 1]).unwrap());
        let w = Permutation::from_one_based(&[1, 3, 2]).unwrap();
        let err = cell_dimension_rank_oracle(&w, &mt, &HessenbergFunction::identity(3), 0);
        assert!(matches!(err, Err(Error::Contract(_))));
    }

    #[test]
    fn works_over_a_prime_field() {
        let mt =
            MultiTableau::from_jordan(&JordanData::from_shapes(vec![vec![2], vec![1]]).unwrap());
        let f = PrimeField::new(5).unwrap();
        let form = permuted_jordan_form(&f, &mt, &prime_field_scalars(&mt, &f).unwrap()).unwrap();
        let h = HessenbergFunction::identity(3);
        // Same oracle as over Q: the result is field independent.
        for w in Permutation::all(3) {
            let rational = run_rank_oracle(&Rationals, &rational_form(&mt), &w, &h, 1);
            let modular = run_rank_oracle(&f, &form, &w, &h, 1);
            assert_eq!(rational.is_ok(), modular.is_ok());
            if let (Ok(a), Ok(b)) = (rational, modular) {
                assert_eq!(a.dimension(), b.dimension());
            }
        }
    }
}
