use thiserror::Error;

/// Errors produced when constructing or transforming the combinatorial objects
/// of this crate. Positions, values and indices are 1-based throughout.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("empty word: objects are defined over [n] with n >= 1")]
    EmptyWord,

    #[error("position {position}: value {value} outside 1..={max}")]
    ValueOutOfRange {
        position: usize,
        value: usize,
        max: usize,
    },

    #[error("value {value} appears more than once")]
    DuplicateValue { value: usize },

    #[error("position {position}: value {value} violates the subexceedant bound 1..={position}")]
    SubexceedantBound { position: usize, value: usize },

    #[error("prefix of length {position} does not have an interval image; not a restricted growth word")]
    NotAnRgf { position: usize },

    #[error("not a set partition in standard form: {0}")]
    InvalidPartition(String),

    #[error("not a cycle decomposition: {0}")]
    InvalidCycles(String),

    #[error("permutation is not a Bell permutation of the second kind")]
    NotBp2,

    #[error("permutation is not a Bell permutation of the first kind")]
    NotBp1,

    #[error("index {index} outside 1..={max}")]
    IndexOutOfRange { index: usize, max: usize },

    #[error("invalid bound: {0}")]
    InvalidBound(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("exhaustive scan at n = {n} exceeds the soft limit {limit}; use an explicit limit to override")]
    ScanTooLarge { n: usize, limit: usize },

    #[error("unknown check name `{0}`")]
    UnknownCheck(String),
}
