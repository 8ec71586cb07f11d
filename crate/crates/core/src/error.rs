use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("minor size {m} exceeds vector dimension {n}")]
    MinorTooLarge { m: usize, n: usize },

    #[error("partitions must have equal sums: {0} vs {1}")]
    UnequalSums(usize, usize),

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("tensor support does not match the 2x2 matrix multiplication support: {0}")]
    SupportMismatch(String),

    #[error("zero coefficient at {0:?} where a nonzero entry is required")]
    ZeroCoefficient((usize, usize, usize)),

    #[error("singular matrix where an invertible one is required")]
    SingularMatrix,

    #[error("inconsistent interpolation points: {0}")]
    InconsistentPoints(String),

    #[error("empty or all-zero input: {0}")]
    EmptyInput(String),

    #[error("enumeration guard exceeded: {size} index tuples > limit {limit}")]
    GuardExceeded { size: u128, limit: u128 },

    #[error("Kronecker coefficient is zero for this partition triple")]
    KroneckerZero,

    #[error("retry budget exhausted after {attempts} attempts: {context}")]
    RetryBudget { attempts: usize, context: String },

    #[error("tensor has {r} terms; evaluation supports at most {max} terms")]
    UnsupportedRank { r: usize, max: usize },

    #[error("vanishing combination has all-zero coefficients")]
    ZeroCombination,

    #[error("certificate refused: {0}")]
    CertificateRefused(String),

    #[error("modular reconstruction failed: {0}")]
    Reconstruction(String),

    #[error("invalid input data: {0}")]
    InvalidData(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
