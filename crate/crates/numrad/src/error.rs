//! Error type shared by every module of the crate.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },

    #[error("non-finite entry encountered in {context}")]
    NonFinite { context: &'static str },

    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("iteration budget exceeded in {algorithm} (budget {budget})")]
    ConvergenceFailure {
        algorithm: &'static str,
        budget: usize,
    },

    #[error("operand is not positive semidefinite (min eigenvalue {min_eig:e}, floor {floor:e})")]
    NotPositive { min_eig: f64, floor: f64 },

    #[error("scalar function takes negative value {value:e} at eigenvalue {at:e}")]
    FunctionNegative { value: f64, at: f64 },

    #[error("vector is not unit (norm {norm})")]
    NotUnit { norm: f64 },

    #[error("alpha = {alpha} outside [0, 1]")]
    AlphaOutOfRange { alpha: f64 },

    #[error("exponent {value} outside [{lo}, {hi}]")]
    OutOfRange { value: f64, lo: f64, hi: f64 },

    #[error("tolerance {tol:e} too small: certification would need more than {budget} evaluations")]
    ToleranceTooSmall { tol: f64, budget: u64 },

    #[error("operand is numerically singular (smallest singular value {sigma_min:e})")]
    Singular { sigma_min: f64 },

    #[error("unknown checker id '{id}'")]
    UnknownChecker { id: String },

    #[error("preconditions violated for {id}: {}", violations.join("; "))]
    PreconditionViolated { id: String, violations: Vec<String> },

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("io failure: {0}")]
    Io(#[from] std::io::Error),
}
