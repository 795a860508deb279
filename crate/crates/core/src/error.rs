use thiserror::Error;

/// Errors surfaced by operations whose preconditions are part of the
/// public contract. Structural misuse (mixing field contexts or algebra
/// tags inside arithmetic) panics instead: it is a programming error, and
/// the CLI validates user input before any arithmetic runs.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AlgError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("{0} is not a prime below 2^16")]
    BadPrime(u64),
    #[error("field contexts differ: {0} vs {1}")]
    ContextMismatch(String, String),
    #[error("algebra tags differ: {0} vs {1}")]
    TagMismatch(String, String),
    #[error("ambient dimensions differ: {0} vs {1}")]
    AmbientMismatch(usize, usize),
    #[error("matrix shapes are incompatible: {0}x{1} vs {2}x{3}")]
    ShapeMismatch(usize, usize, usize, usize),
    #[error("operation requires a nonzero argument")]
    ZeroInput,
    #[error("operation is not defined for this algebra: {0}")]
    UnsupportedAlgebra(String),
    #[error("hermitian matrices over the octonions require n <= 3, got {0}")]
    OctonionSize(usize),
    #[error("matrix is not hermitian with scalar diagonal")]
    NotHermitian,
    #[error("octonion tuple does not generate an associative subalgebra")]
    NonAssociative,
    #[error("matrix is singular")]
    Singular,
    #[error("element is not of Jordan rank one")]
    NotRankOne,
    #[error("input requires an isotropic element (Q = 0)")]
    NotIsotropic,
    #[error("subspace is not closed under right multiplication")]
    NotSubmodule,
    #[error("module is not free")]
    NotFree,
    #[error("enumeration scale guard exceeded: {0}")]
    ScaleGuard(String),
    #[error("invalid input: {0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, AlgError>;
