use num_bigint::BigInt;
use thiserror::Error;

/// Errors raised by the weight, character, construction and planner layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("rank mismatch: {left} vs {right}")]
    RankMismatch { left: usize, right: usize },

    #[error("index {index} out of range for rank {rank}")]
    IndexOutOfRange { index: usize, rank: usize },

    #[error("rank must be at least 1")]
    ZeroRank,

    #[error("modulus {0} must be at least 2")]
    InvalidModulus(BigInt),

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("weight {0} is not dominant")]
    NotDominant(String),

    #[error("weight {0} has a negative entry")]
    NotPolynomial(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("r = {got} is below the threshold; construction requires r >= {required}")]
    BelowThreshold { required: BigInt, got: BigInt },

    #[error("point has a repeated or zero coordinate")]
    DegeneratePoint,

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
