use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),

    #[error("permutation degree must be at least 1")]
    ZeroDegree,

    #[error("invalid permutation images: {0}")]
    InvalidImages(String),

    #[error("argument is not a subgroup of the ambient group")]
    NotASubgroup,

    #[error("group order {order} exceeds the enumeration budget {budget}")]
    BudgetExceeded { order: u64, budget: u64 },

    #[error("class index {0} out of range (table has {1} classes)")]
    ClassIndexOutOfRange(usize, usize),

    #[error("not an Euler transform of an integer sequence: non-integer coefficient at index {0}")]
    NonIntegerCoefficient(usize),

    #[error("argument must be positive")]
    NonPositive,

    #[error("integer overflow during {0}")]
    Overflow(&'static str),

    #[error("{0}")]
    Format(String),

    #[error("internal invariant violated: {0}")]
    Invariant(&'static str),

    #[error(transparent)]
    Tom(#[from] crate::tomtext::TomError),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
