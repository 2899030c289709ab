use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid partition {parts:?}: {reason}")]
    InvalidPartition { parts: Vec<usize>, reason: &'static str },

    #[error("invalid tableau: {0}")]
    InvalidTableau(String),

    #[error("invalid injection {word:?} for (k, n) = ({k}, {n}): {reason}")]
    InvalidInjection {
        word: Vec<usize>,
        k: usize,
        n: usize,
        reason: &'static str,
    },

    #[error("dimension mismatch: ({k1}, {n1}) vs ({k2}, {n2})")]
    DimensionMismatch { k1: usize, n1: usize, k2: usize, n2: usize },

    #[error("invalid parameters (k, n) = ({k}, {n}): {reason}")]
    InvalidParameters { k: usize, n: usize, reason: &'static str },

    #[error("{class} is not a cycle-path type of the ({k}, {n}) scheme")]
    InvalidClass { class: String, k: usize, n: usize },

    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    #[error("estimated cost {estimate} exceeds budget {budget}")]
    BudgetExceeded { estimate: u128, budget: u128 },

    #[error("integrity failure: {0}")]
    Integrity(String),

    #[error("linear program is unbounded")]
    Unbounded,

    #[error("invalid distance set: {0}")]
    InvalidDistanceSet(String),
}

pub type Result<T> = std::result::Result<T, Error>;
