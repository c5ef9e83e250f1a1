use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("field size {0} is not prime")]
    NotPrime(u32),

    #[error("inverse of zero does not exist")]
    ZeroInverse,

    #[error("residue {value} is out of range for GF({q})")]
    ResidueOutOfRange { value: u32, q: u32 },

    #[error("field mismatch: GF({left}) vs GF({right})")]
    FieldMismatch { left: u32, right: u32 },

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("generator matrix has rank {rank}, expected {expected}")]
    RankDeficient { rank: usize, expected: usize },

    #[error("invalid column permutation")]
    InvalidPermutation,

    #[error("invalid code parameters: {0}")]
    InvalidParameters(String),

    #[error("{what} requires enumerating {size} items, above the limit of {limit}; too large to brute-force")]
    GuardExceeded {
        what: &'static str,
        size: String,
        limit: u64,
    },

    #[error("minimum distance is not known for this code")]
    UnknownDistance,

    #[error("argument out of domain: {0}")]
    Domain(String),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}
