use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("SO({n}) needs {expected} weight entries, got {got}")]
    LengthMismatch { n: usize, expected: usize, got: usize },

    #[error("{lambda:?} is not a highest weight of SO({n})")]
    InvalidWeight { n: usize, lambda: Vec<i64> },

    #[error("SO({n}) is not supported here (need n >= {min})")]
    UnsupportedDimension { n: usize, min: usize },

    #[error("conjugate length {s} is shorter than the largest part {largest}")]
    InvalidLength { s: usize, largest: i64 },

    #[error("cannot combine characters of SO({left}) and SO({right})")]
    GroupMismatch { left: usize, right: usize },

    #[error("not a genuine character: multiplicity at {weight:?} would be {value}")]
    NotACharacter { weight: Vec<i64>, value: String },

    #[error("degree {i} is out of range for SO({n})")]
    DegreeOutOfRange { n: usize, i: i64 },

    #[error("internal inconsistency: {0}")]
    Inconsistent(String),
}

pub type Result<T> = std::result::Result<T, Error>;
