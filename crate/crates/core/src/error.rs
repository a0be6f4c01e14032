use thiserror::Error;

use crate::group_actions::Tag;

/// Errors raised by the geometric primitives and the construction pipeline.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("range error: {0}")]
    Range(String),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("tag mismatch: {left} vs {right}")]
    TagMismatch { left: Tag, right: Tag },

    #[error("constraint violated: {0}")]
    Constraint(String),

    #[error("not a cusp: {0}")]
    NotACusp(String),

    #[error("gluing class is not invertible over the integers (det = {0})")]
    NotInvertibleOverZ(i64),

    #[error("orientation convention violated: {0}")]
    Orientation(String),

    #[error("invalid involution: {0}")]
    InvalidInvolution(String),

    #[error("path error: {0}")]
    Path(String),

    #[error("index error: {0}")]
    Index(String),

    #[error("assembly error: {0}")]
    Assembly(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
