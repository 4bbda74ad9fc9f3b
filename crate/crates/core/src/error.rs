use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("degree mismatch: expected {expected}, found {found}")]
    DegreeMismatch { expected: u32, found: u32 },
    #[error("variance mismatch: {0}")]
    VarianceMismatch(String),
    #[error("index {index} out of range 0..{bound}")]
    IndexOutOfRange { index: usize, bound: usize },
    #[error("singular matrix")]
    Singular,
    #[error("subspace is degenerate: rank {rank} < 3")]
    DegenerateSpan { rank: usize },
    #[error("wrong number of parameters for {family}: expected {expected}, found {found}")]
    Arity {
        family: &'static str,
        expected: usize,
        found: usize,
    },
    #[error("matrix is not traceless")]
    NotTraceless,
    #[error("zero vector has no gcd")]
    ZeroVector,
    #[error("value must be nonzero: {0}")]
    ZeroValue(&'static str),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
