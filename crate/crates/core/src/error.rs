//! Error types shared across the crate.

use thiserror::Error;

/// Errors raised by the algebraic layer: terms, degrees, vectors, reduction.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("dimension mismatch: expected {expected}, got {got} ({what})")]
    DimensionMismatch {
        what: &'static str,
        expected: usize,
        got: usize,
    },

    #[error("module component {component} out of range for rank {rank}")]
    ComponentOutOfRange { component: usize, rank: usize },

    #[error("term {1:?} does not divide {0:?}")]
    NonDivisor(Vec<u32>, Vec<u32>),

    #[error("exponent arithmetic overflow")]
    ExponentOverflow,

    #[error("degree arithmetic overflow")]
    DegreeOverflow,

    #[error("operation requires a non-zero vector")]
    ZeroVector,

    #[error("leading terms live in different components ({0} vs {1})")]
    ComponentMismatch(usize, usize),

    #[error("vectors belong to different ring contexts")]
    ContextMismatch,

    #[error("syzygy reduction step needs matching second indices ({0} vs {1})")]
    SyzygyIndexMismatch(usize, usize),

    #[error("syzygy element cannot be reduced by itself")]
    SelfReduction,
}

/// Errors raised by the engine drivers and the oracle.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EngineError {
    #[error("generator #{index} is not homogeneous")]
    NonHomogeneousGenerator { index: usize },

    #[error("the grading matrix is not positive")]
    NonPositiveGrading,

    #[error("input is not a reduced Groebner basis: {reason}")]
    NotReduced { reason: String },

    #[error("truncation degree is below the smallest generator degree")]
    TruncationTooLow,

    #[error("time limit exceeded")]
    TimeLimitExceeded,

    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}
