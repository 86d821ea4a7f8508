use thiserror::Error;

use crate::g2::G2Pattern;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("integer coefficient overflow")]
    Overflow,

    #[error("exact division failed: nonzero remainder")]
    NotDivisible,

    #[error("entry {entry} = {value} exceeds its upper bound {bound}")]
    BoundViolation { entry: char, value: i64, bound: i64 },

    #[error("pattern {0:?} violates the circling inequalities")]
    CirclingViolation([i64; 6]),

    #[error("no case of the corrected contribution matches {pattern} with boxing {boxing}")]
    NoCaseMatch { pattern: G2Pattern, boxing: String },
}

pub type Result<T> = std::result::Result<T, Error>;
