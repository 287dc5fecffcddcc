//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("conductor mismatch: {0} vs {1} (lift with `embed` first)")]
    ConductorMismatch(u64, u64),

    #[error("conductor {0} does not divide target conductor {1}")]
    ConductorNotDivisible(u64, u64),

    #[error("twist exponent {m} is not coprime to conductor {n}")]
    TwistNotCoprime { m: i64, n: u64 },

    #[error("division by zero")]
    DivisionByZero,

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("group closure exceeds the size limit of {limit} elements")]
    SizeLimitExceeded { limit: usize },

    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("unsupported group spec: {0}")]
    UnsupportedSpec(String),

    #[error("class functions belong to different groups")]
    GroupMismatch,

    #[error("subgroup is not cyclic")]
    NotCyclic,

    #[error("target is not rational-valued; decompose its rationalization instead")]
    NotRational,

    #[error("target lies outside the span of the induced principal characters")]
    OutsideSpan,

    #[error("row index {0} is out of range")]
    RowOutOfRange(usize),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
