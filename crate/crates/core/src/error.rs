use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("codeword length {0} outside 1..=64")]
    InvalidLength(usize),

    #[error("length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },

    #[error("minimum distance undefined for a code with {0} word(s)")]
    TooFewWords(usize),

    #[error("weight distribution requires zero in the code")]
    MissingZero,

    #[error("size must be 2^k (k = {k}), got {size}")]
    SizeNotPowerOfTwo { k: usize, size: usize },

    #[error("invalid parameters: {0}")]
    InvalidParameters(String),

    #[error("no such code exists: (n, d) = ({n}, {d}) is not a systematic AMDS parameter pair")]
    NoSuchCode { n: usize, d: usize },

    #[error("restriction applies only for d >= 3 (got d = {0})")]
    RestrictionUndefined(usize),

    #[error("arithmetic overflow evaluating {0}")]
    Overflow(&'static str),

    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;
