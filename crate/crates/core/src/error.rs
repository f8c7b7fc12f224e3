use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parity error: {0}")]
    Parity(String),

    #[error("series is not invertible: {0}")]
    NotInvertible(String),

    #[error("coefficient at exponent {exponent} requested but series is only exact below {order}")]
    Truncated { exponent: i64, order: i64 },

    #[error("non-integral coefficient: {0}")]
    Integrality(String),

    #[error("series variables differ: {0}")]
    VariableMismatch(String),

    #[error("truncation insufficient: {0}")]
    TruncationInsufficient(String),

    #[error("window insufficient: {0}")]
    WindowInsufficient(String),

    #[error("recursion inconsistent: {0}")]
    InconsistentRecursion(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;
