use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),

    /// `index` is 1-based.
    #[error("invalid Hessenberg function at index {index}: {reason}")]
    InvalidHessenberg { index: usize, reason: String },

    #[error("invalid Jordan data: {0}")]
    InvalidJordan(String),

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("size mismatch: expected n = {expected}, got {actual}")]
    SizeMismatch { expected: usize, actual: usize },

    #[error("{what} guard exceeded: n = {n} > {limit} (pass --force to override)")]
    GuardExceeded {
        what: &'static str,
        n: usize,
        limit: usize,
    },

    #[error("contract violation: {0}")]
    Contract(String),

    #[error("verification disagreement: {0}")]
    Disagreement(String),

    #[error("internal invariant violated: {0}")]
    Internal(String),
}

impl Error {
    /// Process exit code used by the command-line front end.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Parse(_)
            | Error::InvalidHessenberg { .. }
            | Error::InvalidJordan(_)
            | Error::InvalidPermutation(_)
            | Error::SizeMismatch { .. } => 2,
            Error::GuardExceeded { .. } => 3,
            Error::Disagreement(_) => 4,
            Error::Contract(_) | Error::Internal(_) => 5,
        }
    }
}
