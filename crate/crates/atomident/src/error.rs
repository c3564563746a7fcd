use crate::group_lasso::GroupLassoSolution;

/// Errors produced by the identification pipeline.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// An input sequence contained NaN or infinite samples.
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// Vector shapes disagree where equal lengths are required.
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    /// The solver hit its iteration budget (or a rounding-limited stall)
    /// before reaching the requested KKT tolerance.  The best iterate found is
    /// attached so the caller can decide whether it is usable.
    #[error("group lasso solver did not reach tolerance (best KKT violation {})",
            .best.kkt_violation)]
    ConvergenceFailure { best: Box<GroupLassoSolution> },

    /// `fit_metric` was given a constant reference response, which makes the
    /// normalizing denominator zero.
    #[error("degenerate reference: constant true impulse response")]
    DegenerateReference,

    /// Invalid configuration value.
    #[error("config error: {0}")]
    Config(String),

    /// More than the tolerated fraction of Monte Carlo runs failed.
    #[error("{failed} of {total} Monte Carlo runs failed (budget exceeded)")]
    TooManyFailures { failed: usize, total: usize },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// For `ConvergenceFailure`, hand back the carried best iterate; any other
    /// error is returned unchanged.  Callers that can tolerate a small
    /// residual violation use this to keep going.
    pub fn into_best_iterate(self) -> std::result::Result<GroupLassoSolution, Error> {
        match self {
            Error::ConvergenceFailure { best } => Ok(*best),
            other => Err(other),
        }
    }
}
