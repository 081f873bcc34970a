//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("{0} is not a prime power")]
    NotPrimePower(u64),
    #[error("polynomial is not irreducible")]
    PolynomialNotIrreducible,
    #[error("polynomial is irreducible but not primitive")]
    PolynomialNotPrimitive,
    #[error("division by zero")]
    DivisionByZero,
    #[error("discrete logarithm of zero is undefined")]
    DlogOfZero,
    #[error("operands belong to different fields")]
    FieldMismatch,
    #[error("family needs at least two members")]
    FamilyTooSmall,
    #[error("family labels must be pairwise distinct")]
    DuplicateLabel,
    #[error("domain violation: {0}")]
    DomainViolation(String),
    #[error("D_{0} is empty; need q >= 4")]
    DomainEmpty(u16),
    #[error("input must be nonempty")]
    EmptyInput,
    #[error("operation not supported for q = {0}")]
    UnsupportedQ(u16),
    #[error("wrong cardinality: expected {expected}, got {got}")]
    WrongCardinality { expected: usize, got: usize },
    #[error("invariant violated: {0}")]
    InvariantViolation(String),
    #[error("limit exceeded: {0}")]
    LimitExceeded(String),
    #[error("unsupported field: {0}")]
    UnsupportedField(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
