use thiserror::Error;

use crate::algebra::Elem;

/// Errors raised while building or validating a finite algebra.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("malformed table: {0}")]
    MalformedTable(String),
    #[error("not residuated: {0}")]
    NotResiduated(String),
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DecompositionError {
    #[error("no family of chain quotients separates the elements {0} and {1}")]
    DecompositionFailed(Elem, Elem),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FepError {
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("generated monoid has {0} elements; at most 64 are supported")]
    TooLarge(usize),
    #[error("construction invariant broken: {0}")]
    ConstructionFailed(String),
    #[error("embedding violation in {operation}: {detail}")]
    EmbeddingViolation { operation: String, detail: String },
}

impl From<AlgebraError> for FepError {
    fn from(err: AlgebraError) -> Self {
        FepError::ConstructionFailed(err.to_string())
    }
}

/// A formula that does not match the grammar; `position` is a byte offset.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("parse error at position {position}: {message}")]
pub struct ParseError {
    pub position: usize,
    pub message: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EvalError {
    #[error("variable x{} has no value", .0 + 1)]
    UnboundVariable(usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CombinatoricsError {
    #[error("position {position} is outside the domain of length {len}")]
    RangeError { position: usize, len: usize },
    #[error("not a subsequence index: {0}")]
    InvalidIndex(String),
    #[error("tuple {index} has dimension {found}, expected {expected}")]
    DimensionMismatch { index: usize, found: usize, expected: usize },
}
