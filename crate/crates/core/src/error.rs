use thiserror::Error;

/// Errors produced by every fallible operation in the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid group spec: {0}")]
    InvalidSpec(String),
    #[error("invalid Weyl group element: {0}")]
    InvalidElement(String),
    #[error("operands belong to different groups ({left} vs {right})")]
    SpecMismatch { left: String, right: String },
    #[error("rank {rank} exceeds the configured cap {cap}")]
    RankOverCap { rank: usize, cap: usize },
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("{0} is not a prime power >= 2")]
    NotPrimePower(u64),
    #[error("matrix is singular: no pivot available in column {column} (0-based)")]
    Singular { column: usize },
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("operands live over different fields")]
    FieldMismatch,
    #[error("enumeration needs {required} elements but the budget is {budget}")]
    BudgetExceeded { required: u128, budget: u128 },
    #[error("matrix is not symplectic for the standard antidiagonal form")]
    NotSymplectic,
    #[error("permutation {0:?} is not in the image of the hyperoctahedral embedding")]
    NotInEmbeddedWeylGroup(Vec<usize>),
    #[error("matrix is not unipotent")]
    NotUnipotent,
    #[error("partition sizes differ ({0} vs {1})")]
    PartitionSizeMismatch(usize, usize),
    #[error("Jordan type {0} is not a symplectic partition")]
    NonSymplecticPartition(String),
    #[error("integrity failure: {0}")]
    Integrity(String),
    #[error("out of scope: {0}")]
    Unsupported(String),
    #[error("q = {0} is a bad prime for this group (pass allow_bad_prime to override)")]
    BadPrime(u32),
    #[error("class {0} is not elliptic")]
    NotElliptic(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
