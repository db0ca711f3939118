use std::fmt;

use crate::shapes::Cell;

/// The gluing conditions checked when attaching wings to a diagram.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WingCondition {
    /// The left wing has at least `l0` boxes in its right-most column.
    W1,
    /// The right wing has at least `l1` boxes in its bottom row.
    W2,
    /// The central diagram has at least `l0` boxes in its left-most column
    /// and at least `l1` boxes in its top row.
    W3,
    /// The central skew shape has at least `l0` boxes in its left arm and at
    /// least `l1` boxes in its right arm.
    W4,
}

impl fmt::Display for WingCondition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            WingCondition::W1 => "W1",
            WingCondition::W2 => "W2",
            WingCondition::W3 => "W3",
            WingCondition::W4 => "W4",
        };
        f.write_str(name)
    }
}

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("parts must be weakly decreasing: {0:?}")]
    InvalidPartition(Vec<usize>),

    #[error("inner shape {inner} is not contained in outer shape {outer}")]
    NotContained { outer: String, inner: String },

    #[error("cell ({}, {}) is not a positive coordinate", .0.0, .0.1)]
    InvalidCell(Cell),

    #[error("diagram is not a skew shape")]
    NotSkew,

    #[error("wing condition {condition} violated: {detail}")]
    WingConditionViolated {
        condition: WingCondition,
        detail: String,
    },

    #[error("{side} wing is non-empty but glued along zero boxes")]
    DetachedWing { side: &'static str },

    #[error("wing overlaps the central diagram at ({}, {})", .0.0, .0.1)]
    WingOverlap(Cell),

    #[error("tableau is not semistandard")]
    NotSemistandard,

    #[error("hole at ({}, {}) has neither a right nor a lower neighbour", .0.0, .0.1)]
    NoNeighbor(Cell),

    #[error("({}, {}) is not an inside corner", .0.0, .0.1)]
    NotInsideCorner(Cell),

    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    #[error("partition {0} does not occur in the expansion of the skew shape")]
    EmptyFiber(String),

    #[error("binding mismatch: {0}")]
    BindingMismatch(String),

    #[error("exponent at ({}, {}) is not rational; exact arithmetic is unavailable", .0.0, .0.1)]
    InexactExponent(Cell),

    #[error("invalid truncation context: {0}")]
    InvalidContext(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
