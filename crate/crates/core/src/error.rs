use thiserror::Error;

/// Errors raised by the exact-arithmetic routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("invalid rational literal {0:?}")]
    ParseScalar(String),
    #[error("argument out of range: {0}")]
    OutOfRange(String),
    #[error("truncation mismatch: {left} vs {right}")]
    TruncationMismatch { left: usize, right: usize },
    #[error("degree {degree} exceeds the bound {bound}")]
    DegreeOverflow { degree: usize, bound: usize },
    #[error("series kind mismatch: expected {expected}")]
    KindMismatch { expected: &'static str },
    #[error("functionals live on different algebras ({0} vs {1})")]
    AlgebraMismatch(String, String),
    #[error("malformed input: {0}")]
    Parse(String),
    #[error("poset error: {0}")]
    Poset(String),
}

pub type Result<T> = std::result::Result<T, Error>;
