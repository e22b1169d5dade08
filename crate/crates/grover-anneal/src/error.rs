use thiserror::Error;

/// Errors produced by model construction, integration, quadrature, and scans.
#[derive(Debug, Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),

    #[error("dimension mismatch: expected vector of length {expected}, got {got}")]
    Dimension { expected: usize, got: usize },

    #[error(
        "adaptive quadrature did not converge: requested rel tol {requested:e}, achieved {achieved:e}"
    )]
    QuadratureNonConvergence { requested: f64, achieved: f64 },

    #[error("no annealing-time bracket found below cap {cap}")]
    BracketNotFound { cap: f64 },

    #[error("not enough usable points for a fit: got {got}, need {needed}")]
    InsufficientPoints { needed: usize, got: usize },

    #[error("full-space state size {n} exceeds the configured cap {cap}")]
    StateCapExceeded { n: u64, cap: u64 },
}

impl Error {
    pub fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
