use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("not a permutation of 0..{len}: {reason}")]
    InvalidPermutation { len: usize, reason: String },

    #[error("invalid diagram size: {0}")]
    InvalidSize(String),

    #[error("segment {alpha} out of range for a {segments}-segment star")]
    SegmentOutOfRange { alpha: usize, segments: usize },

    #[error("malformed Gauss code: {0}")]
    GaussCode(String),

    #[error("malformed formula: {0}")]
    Formula(String),

    #[error("value is not an integer: {0}")]
    NotInteger(String),

    #[error("duplicate abscissa {0} in interpolation data")]
    DuplicateAbscissa(String),

    #[error("resource budget exceeded: {0}")]
    BudgetExceeded(String),
}
