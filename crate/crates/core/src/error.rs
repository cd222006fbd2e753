use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("curve must have at least one vertex")]
    EmptyCurve,
    #[error("coordinates must be finite")]
    NonFinite,
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },
    #[error("parameter {t} outside [0, {limit}]")]
    ParamOutOfRange { t: f64, limit: f64 },
    #[error("epsilon must be a nonnegative number, got {0}")]
    NegativeEpsilon(f64),
    #[error("tolerance must be a positive number, got {0}")]
    NonPositiveTolerance(f64),
    #[error("refinement step must be a positive number, got {0}")]
    NonPositiveStep(f64),
    #[error("profile shape mismatch: {0}")]
    ProfileShape(String),
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
