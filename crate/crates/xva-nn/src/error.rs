//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// Bad configuration file or inconsistent configuration values.
    #[error("configuration error: {0}")]
    Config(String),

    /// Correlation matrix is not usable (asymmetric, bad diagonal, or
    /// negative eigenvalues beyond the repair tolerance).
    #[error("correlation error: {0}")]
    Correlation(String),

    /// Array shapes do not line up.
    #[error("dimension error: {0}")]
    Dimension(String),

    /// Argument outside the mathematical domain of an operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// Date not on the schedule it is required to be on.
    #[error("schedule error: {0}")]
    Schedule(String),

    /// A floating-rate period needs a past fixing that was not supplied.
    #[error("fixing error: {0}")]
    Fixing(String),

    /// Invalid network specification.
    #[error("network spec error: {0}")]
    Spec(String),

    /// Non-finite value produced while rolling values along a path.
    #[error("rollout error at path {path}, step {step}: {msg}")]
    Rollout { path: usize, step: usize, msg: String },

    /// Optimizer received or produced a non-finite value.
    #[error("training error at step {step}: {msg}")]
    Training { step: usize, msg: String },

    /// Nonlinear fit failed to converge from any start.
    #[error("fit error: {0}")]
    Fit(String),

    /// k-NN projection could not be carried out.
    #[error("projection error: {0}")]
    Projection(String),

    /// Regression design matrix is unusable.
    #[error("regression error: {0}")]
    Regression(String),

    /// Requested feature unsupported by this pricer.
    #[error("unsupported: {0}")]
    Unsupported(String),

    /// Pipeline stage ordering / artifact resume problem.
    #[error("orchestration error: {0}")]
    Orchestration(String),

    /// Built-in consistency check failed (`run --check`).
    #[error("check failed: {0}")]
    CheckFailed(String),

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// Process exit code for the CLI: 2 config, 4 check failure, 3 anything
    /// numeric or environmental.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Config(_) => 2,
            Error::CheckFailed(_) => 4,
            _ => 3,
        }
    }
}
