use std::fmt;

use crate::mapping::MappingKind;

/// Which way a mapping is being evaluated.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Direction {
    SquareToDisc,
    DiscToSquare,
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Direction::SquareToDisc => f.write_str("square-to-disc"),
            Direction::DiscToSquare => f.write_str("disc-to-square"),
        }
    }
}

#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// The input point is outside the domain of the mapping, or sits on the
    /// excluded rim of an open mapping.
    #[error("domain error: {0}")]
    Domain(String),

    /// The mapping does not provide the requested operation, e.g. a
    /// direction without closed form while numeric fallback is disabled.
    #[error("{kind} does not support {operation}")]
    Capability { kind: MappingKind, operation: String },

    #[error("invalid parameter: {0}")]
    Param(String),

    #[error("numeric error: {0}")]
    Numeric(String),

    #[error("no convergence after {iterations} iterations: {what}")]
    Convergence { what: String, iterations: usize },

    #[error("radial magnitude is not monotone along the ray at angle {angle}")]
    NonMonotone { angle: f64 },

    #[error("singular Jacobian at ({x}, {y})")]
    SingularJacobian { x: f64, y: f64 },

    #[error("I/O error: {0}")]
    Io(#[from] std::io::Error),

    #[error("image error: {0}")]
    Image(#[from] image::ImageError),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn direction_unavailable(kind: MappingKind, direction: Direction) -> Self {
        Error::Capability {
            kind,
            operation: format!("closed-form {direction} evaluation (numeric fallback disabled)"),
        }
    }
}
