use rand::Rng;

use crate::matrixforms::field::{small_integer, Field};

/// Outcome of solving an affine system `A x = b`.
#[derive(Clone, Debug, PartialEq)]
pub enum AffineSolution<E> {
    Inconsistent,
    Solved {
        rank: usize,
        /// A solution with the free variables drawn pseudorandomly.
        sample: Vec<E>,
    },
}

/// Reduces `rows` (each `cols` coefficients followed by optional extra
/// columns) to reduced row echelon form in the first `cols` columns.
/// Pivots are chosen as the leftmost nonzero entry. Returns the pivot
/// columns in order.
pub fn row_reduce<F: Field>(field: &F, rows: &mut [Vec<F::Elem>], cols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !field.is_zero(&rows[i][c])) else {
            continue;
        };
        rows.swap(r, p);
        let inv = field.inv(&rows[r][c]).expect("pivot is nonzero");
        for v in rows[r].iter_mut() {
            *v = field.mul(v, &inv);
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || field.is_zero(&row[c]) {
                continue;
            }
            let factor = row[c].clone();
            for (v, p) in row.iter_mut().zip(&pivot_row) {
                *v = field.sub(v, &field.mul(&factor, p));
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank<F: Field>(field: &F, rows: &[Vec<F::Elem>], cols: usize) -> usize {
    let mut rows = rows.to_vec();
    row_reduce(field, &mut rows, cols).len()
}

/// Solves `coeffs · x = rhs` exactly. `coeffs` holds one row per equation.
/// Free variables are drawn uniformly from `[-bound, bound]`.
pub fn solve_affine<F: Field, R: Rng>(
    field: &F,
    coeffs: &[Vec<F::Elem>],
    rhs: &[F::Elem],
    unknowns: usize,
    rng: &mut R,
    bound: i64,
) -> AffineSolution<F::Elem> {
    let mut rows: Vec<Vec<F::Elem>> = coeffs
        .iter()
        .zip(rhs)
        .map(|(row, b)| {
            debug_assert_eq!(row.len(), unknowns);
            let mut r = row.clone();
            r.push(b.clone());
            r
        })
        .collect();
    let pivots = row_reduce(field, &mut rows, unknowns);
    let rank = pivots.len();
    if rows[rank..].iter().any(|r| !field.is_zero(&r[unknowns])) {
        return AffineSolution::Inconsistent;
    }
    let mut sample = vec![field.zero(); unknowns];
    let mut is_pivot = vec![false; unknowns];
    for &c in &pivots {
        is_pivot[c] = true;
    }
    for (c, slot) in sample.iter_mut().enumerate() {
        if !is_pivot[c] {
            *slot = small_integer(field, rng, bound);
        }
    }
    for (r, &c) in pivots.iter().enumerate() {
        let mut v = rows[r][unknowns].clone();
        for (fc, s) in sample.iter().enumerate() {
            if !is_pivot[fc] && !field.is_zero(&rows[r][fc]) {
                v = field.sub(&v, &field.mul(&rows[r][fc], s));
            }
        }
        sample[c] = v;
    }
    AffineSolution::Solved { rank, sample }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrixforms::field::Rationals;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn solves_underdetermined_system() {
        let q = Rationals;
        let a = vec![
            vec![q.integer(1), q.integer(2), q.integer(0)],
            vec![q.integer(2), q.integer(4), q.integer(1)],
        ];
        let b = vec![q.integer(3), q.integer(7)];
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let AffineSolution::Solved { rank, sample } = solve_affine(&q, &a, &b, 3, &mut rng, 10)
        else {
            panic!("system is consistent");
        };
        assert_eq!(rank, 2);
        for (row, rhs) in a.iter().zip(&b) {
            let lhs = row
                .iter()
                .zip(&sample)
                .fold(q.zero(), |acc, (x, y)| q.add(&acc, &q.mul(x, y)));
            assert_eq!(&lhs, rhs);
        }
    }

    #[test]
    fn detects_inconsistency() {
        let q = Rationals;
        let a = vec![
            vec![q.integer(1), q.integer(1)],
            vec![q.integer(2), q.integer(2)],
        ];
        let b = vec![q.integer(1), q.integer(3)];
        let mut rng = ChaCha8Rng::seed_from_u64(0);
        assert_eq!(
            solve_affine(&q, &a, &b, 2, &mut rng, 10),
            AffineSolution::Inconsistent
        );
        assert_eq!(rank(&q, &a, 2), 1);
    }

    #[test]
    fn empty_system_is_all_free() {
        let q = Rationals;
        let mut rng = ChaCha8Rng::seed_from_u64(0);
        let AffineSolution::Solved { rank, sample } = solve_affine(&q, &[], &[], 3, &mut rng, 10)
        else {
            panic!()
        };
        assert_eq!(rank, 0);
        assert_eq!(sample.len(), 3);
    }
}
