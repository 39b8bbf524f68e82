use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("unbounded slice: Laurent variable {0} needs a window")]
    Unbounded(String),
    #[error("basis mismatch: operands live in different slices")]
    BasisMismatch,
    #[error("ring mismatch: {0}")]
    RingMismatch(String),
    #[error("monomial {0} is not in the slice basis")]
    OutsideBasis(String),
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("cannot expand: {0}")]
    NotExpandable(String),
    #[error("unsupported root datum: {0}")]
    UnsupportedDatum(String),
    #[error("index out of range: {0}")]
    OutOfRange(String),
    #[error("vertex {0} lies outside the graph window")]
    OutsideWindow(String),
    #[error("residual pole after specialization: {0}")]
    ResidualPole(String),
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
