//! Young diagrams, multitableaux and fillings, and the combinatorial cell
//! dimension formulas.

mod dimension;
mod hessenberg;
mod jordan;
mod permutation;
mod tableau;

pub use dimension::{
    cell_dimension_bundle, cell_dimension_tableau, is_valid_filling, CellRecord, MatrixIndexData,
};
pub(crate) use dimension::{tableau_dimension_unchecked, valid_unchecked};
pub use hessenberg::HessenbergFunction;
pub use jordan::{BlockOrder, JordanBlock, JordanData};
pub use permutation::Permutation;
pub use tableau::{BoxCell, Filling, MultiTableau, TableauInfo};
