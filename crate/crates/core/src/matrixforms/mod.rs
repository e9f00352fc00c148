//! Exact matrices over `Q` and `F_q`, permuted Jordan forms and their
//! pivots, and the two verification oracles: row-by-row affine solving and
//! finite-field point counting.

mod field;
mod forms;
mod linsolve;
mod matrix;
mod point_count;
mod rank_oracle;

pub use field::{Field, PrimeField, Rationals};
pub use forms::{
    conjugate, eigen_blocks, eigen_submatrix, entry_in_whw, is_highest_form, matrix_pivots,
    permutation_matrix, permuted_jordan_form, pivots, prime_field_scalars, random_row_element,
    random_unipotent, rational_form, rational_scalars, row_factors, PermutedJordanForm, Pivot,
    PivotSet,
};
pub use linsolve::{rank, row_reduce, solve_affine, AffineSolution};
pub use matrix::ExactMatrix;
pub use point_count::{point_count_oracle, PointCount, POINT_COUNT_GUARD};
pub use rank_oracle::{cell_dimension_rank_oracle, run_rank_oracle, RankOracleRun, SAMPLE_BOUND};
