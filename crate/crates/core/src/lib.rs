//! Affine pavings of Hessenberg varieties in the type A flag variety.
//!
//! A Hessenberg variety `H(X, h)` is the set of complete flags `V_1 ⊂ … ⊂ V_n`
//! with `X V_i ⊆ V_{h(i)}`. Intersecting it with the Bruhat cells of a
//! well-chosen basis gives a paving by affine spaces; the nonempty cells are
//! indexed by fillings of the multitableau of `X`, and their dimensions
//! determine every Betti number.
//!
//! The crate is organised as:
//!
//! * [`combinatorics`]: Hessenberg functions, Jordan types, multitableaux,
//!   fillings and the tableau/matrix-index dimension formulas.
//! * [`matrixforms`]: exact matrices over `Q` and `F_q`, permuted Jordan
//!   forms, pivots, and the two verification oracles (iterated affine-rank
//!   solving and finite-field point counting).
//! * [`roots`]: the root-system form of the dimension formula.
//! * [`analysis`]: pruned enumeration of cells and aggregation into Betti
//!   numbers, Poincaré polynomials and closed-form checks.
//! * [`cli`]: argument parsing, job orchestration and output rendering for
//!   the `hessenberg` binary.
//!
//! All public indices are 0-based; the CLI and serialized output are
//! 1-based.

pub mod analysis;
pub mod cli;
pub mod combinatorics;
mod error;
pub mod matrixforms;
pub mod roots;

pub use error::{Error, Result};
