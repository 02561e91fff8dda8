//! Error type shared by all solver components.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// A vector had the wrong length for the operator it was passed to.
    #[error("length mismatch: expected {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },

    /// A parameter was outside its mathematical domain.
    #[error("domain error: {0}")]
    Domain(String),

    /// A shifted spectral factor `1 + d*lambda_k` was too close to zero.
    #[error("singular shift: |1 + d*lambda_{index}| = {magnitude:.3e} below 1e-14")]
    SingularShift { index: usize, magnitude: f64 },

    /// The weight table does not extend far enough for the requested matrix order.
    #[error("insufficient weights: need K >= {needed}, have {have}")]
    InsufficientWeights { needed: usize, have: usize },

    /// Interpolation node request outside `2 <= l <= N` or not strictly increasing.
    #[error("invalid interpolation nodes: {0}")]
    InvalidNodes(String),

    /// A reference-only operation was asked to run above its configured cap.
    #[error("order {n} exceeds the cap {cap} for this reference operation")]
    CapExceeded { n: usize, cap: usize },

    /// The Arnoldi process broke down while the residual was still large.
    #[error("Arnoldi breakdown at iteration {iteration}, relative residual {residual:.3e}")]
    Breakdown { iteration: usize, residual: f64 },

    /// An operator callback produced NaN or infinity.
    #[error("operator produced a non-finite value at iteration {iteration}")]
    OperatorFailure { iteration: usize },

    /// The linear solver failed to converge inside a time step.
    #[error("time step {step}: solver stopped after {iterations} iterations with relative residual {residual:.3e}")]
    MarchFailure {
        step: usize,
        iterations: usize,
        residual: f64,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
