use thiserror::Error;

/// Everything that can go wrong in this crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("parse error at byte {offset}: {message}")]
    Parse { offset: usize, message: String },

    #[error("shape mismatch in {op}: {left:?} vs {right:?}")]
    ShapeMismatch {
        op: &'static str,
        left: (usize, usize),
        right: (usize, usize),
    },

    #[error("matrix is not square: {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },

    #[error("matrix is singular")]
    SingularMatrix,

    #[error("matrix is not idempotent")]
    NotIdempotent,

    /// Drazin index exceeds one, so no group inverse exists.
    #[error("not group invertible (Drazin index {index})")]
    NotGroupInvertible { index: usize },

    /// A block representation's equivalence condition failed: the block
    /// matrix has no group inverse.
    #[error("{theorem}: block matrix is not group invertible ({condition} fails)")]
    BlockNotGroupInvertible {
        theorem: String,
        condition: String,
    },

    /// A standing hypothesis failed; the representation says nothing.
    #[error("{theorem}: hypothesis {condition} is violated")]
    HypothesisViolated {
        theorem: String,
        condition: String,
    },

    #[error("unknown theorem identifier {0:?}")]
    UnknownTheorem(String),

    #[error("generation exhausted after {attempts} attempts: {reason}")]
    GenerationExhausted { attempts: usize, reason: String },
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// Stable variant name, used as the `"error"` field of CLI reports.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::DivisionByZero => "DivisionByZero",
            Error::Parse { .. } => "ParseError",
            Error::ShapeMismatch { .. } => "ShapeMismatch",
            Error::NotSquare { .. } => "NotSquare",
            Error::SingularMatrix => "SingularMatrix",
            Error::NotIdempotent => "NotIdempotent",
            Error::NotGroupInvertible { .. } => "NotGroupInvertible",
            Error::BlockNotGroupInvertible { .. } => "NotGroupInvertible",
            Error::HypothesisViolated { .. } => "HypothesisViolated",
            Error::UnknownTheorem(_) => "UnknownTheorem",
            Error::GenerationExhausted { .. } => "GenerationExhausted",
        }
    }
}
