//! Error type shared across the library.

use thiserror::Error;

/// Errors produced by estimation, testing and subspace construction.
#[derive(Debug, Error)]
pub enum Error {
    /// An iterative numerical routine failed to converge.
    #[error("numerical failure: {0}")]
    NumericalFailure(String),

    /// A matrix expected to be positive semi-definite had an eigenvalue
    /// below the negative tolerance.
    #[error("matrix is not positive semi-definite: {0}")]
    NotPositiveSemiDefinite(String),

    /// An argument was outside the operation's domain.
    #[error("domain error: {0}")]
    DomainError(String),

    /// A rescaled time fell outside the kernel-supported band [h, 1-h].
    #[error("boundary error: {0}")]
    BoundaryError(String),

    /// A moment estimator degenerated (e.g. nonpositive denominator).
    #[error("degenerate estimate: {0}")]
    DegenerateEstimate(String),

    /// A model specification was invalid at some rescaled time.
    #[error("model error: {0}")]
    ModelError(String),

    /// The subspace pipeline produced no candidate subspace at any grid point.
    #[error("empty subspace pool: {0}")]
    EmptyPool(String),
}

pub type Result<T> = std::result::Result<T, Error>;
