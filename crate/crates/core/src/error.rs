use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("trunc-mismatch: operands truncated at {0} and {1}")]
    TruncMismatch(u32, u32),
    #[error("not-divisible: {0}")]
    NotDivisible(String),
    #[error("unbounded-series: {0}")]
    UnboundedSeries(String),
    #[error("unmapped-parameter: {0}")]
    UnmappedParameter(String),
    #[error("bad-index-set: {0}")]
    BadIndexSet(String),
    #[error("bad-shape: {0}")]
    BadShape(String),
    #[error("non-square: {0}x{1}")]
    NonSquare(usize, usize),
    #[error("parse: {0}")]
    Parse(String),
    #[error("invalid: {0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
