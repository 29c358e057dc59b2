use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("empty point set")]
    Empty,
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("ambient dimension {0} is not supported (only 2 and 3)")]
    UnsupportedDimension(usize),
    #[error("degenerate body: {0}")]
    Degenerate(String),
    #[error("expected {expected} bodies, got {got}")]
    Arity { expected: usize, got: usize },
    #[error("{what} = {value} is out of range")]
    OutOfRange { what: &'static str, value: i64 },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("ball approximation failed: {0}")]
    Ball(String),
}

pub type Result<T> = std::result::Result<T, Error>;
