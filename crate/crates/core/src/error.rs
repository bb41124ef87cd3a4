use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("reduced denominator vanishes at lambda = {0}")]
    SingularParameter(String),
    #[error("product basis is singular for P({m},{n})")]
    BasisDeficient { m: u32, n: u32 },
    #[error("series constant term must be 1")]
    NonUnitConstantTerm,
    #[error("point ({0}, {1}) lies outside the fundamental triangle")]
    DomainError(f64, f64),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("cannot parse rational from {0:?}")]
    Parse(String),
    #[error("malformed table: {0}")]
    Format(String),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
