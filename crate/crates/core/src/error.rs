use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("malformed permutation text {0:?}")]
    Parse(String),
    #[error("not a permutation of distinct positive integers: {0}")]
    InvalidPermutation(String),
    #[error("expected a normalized permutation, got {0}")]
    NotNormalized(String),
    #[error("{0} is undefined on the empty permutation")]
    EmptyPermutation(&'static str),
    #[error("{op} requires input avoiding {pattern}, got {input}")]
    ForbiddenPattern {
        op: &'static str,
        pattern: &'static str,
        input: String,
    },
    #[error("permutations of mixed lengths in one set ({0} and {1})")]
    MixedLengths(usize, usize),
    #[error("unknown statistic {0:?}")]
    UnknownStatistic(String),
    #[error("unknown tree family {0:?}")]
    UnknownFamily(String),
    #[error("arithmetic overflow in {0}")]
    Overflow(&'static str),
    #[error("precondition violated: {0}")]
    Precondition(String),
}

pub type Result<T> = std::result::Result<T, Error>;
