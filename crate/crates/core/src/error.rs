//! Error type shared by all library modules.

use thiserror::Error;

/// Errors produced by the numerical routines in this crate.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// Input matrix is not Hermitian within the accepted tolerance.
    #[error("matrix is not Hermitian: max |A - A^dag| = {defect:.3e} exceeds {tolerance:.1e}")]
    NotHermitian { defect: f64, tolerance: f64 },

    /// The Jacobi eigensolver did not converge within its sweep budget.
    #[error("eigensolver failed to converge within {sweeps} sweeps (off-diagonal {off_diagonal:.3e})")]
    NoConvergence { sweeps: usize, off_diagonal: f64 },

    /// A matrix had the wrong dimension for the requested operation.
    #[error("bad dimension: expected {expected}, got {got}")]
    BadDimension { expected: usize, got: usize },

    /// Two operands had incompatible dimensions.
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    /// Invalid construction parameters.
    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    /// A scalar parameter fell outside its admissible range.
    #[error("{name} = {value} out of range [{min}, {max}]")]
    OutOfRange {
        name: &'static str,
        value: f64,
        min: f64,
        max: f64,
    },

    /// An eigenvalue that must be nonnegative came out significantly negative,
    /// signalling an invalid state matrix.
    #[error("negative eigenvalue {value:.3e} below tolerance -{tolerance:.1e}")]
    NegativeEigenvalue { value: f64, tolerance: f64 },

    /// The Lanczos start vector has zero norm.
    #[error("Lanczos start vector has zero norm")]
    ZeroStartVector,

    /// Tridiagonal coefficient slices have inconsistent lengths.
    #[error("length mismatch: {alphas} diagonal vs {betas} off-diagonal entries (need alphas = betas + 1)")]
    LengthMismatch { alphas: usize, betas: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
