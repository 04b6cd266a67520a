use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("diagram point ({birth}, inf) has infinite persistence; threshold the diagram first")]
    InfiniteInterval { birth: f64 },
    #[error("invalid diagram point ({birth}, {death}): birth must be finite and <= death")]
    InvalidPoint { birth: f64, death: f64 },
    #[error("empty sample")]
    EmptySample,
    #[error("{what} needs at least {need} observations, got {got}")]
    SampleTooSmall {
        what: &'static str,
        need: usize,
        got: usize,
    },
    #[error("pooled covariance is singular; reduce the number of functionals")]
    SingularCovariance,
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("filtration property violated at simplex {simplex:?}: {reason}")]
    InvalidFiltration { simplex: Vec<u32>, reason: String },
    #[error("covariance matrix is not positive definite even after jitter; use a coarser grid")]
    NotPositiveDefinite,
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

pub type Result<T> = std::result::Result<T, Error>;
