//! Error type shared across the crate.

use thiserror::Error;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    /// Series inversion needs a unit (`+1` or `-1`) leading coefficient.
    #[error("cannot invert series: leading coefficient {0} is not a unit")]
    NonUnitLeadingCoefficient(String),

    /// Multivariate inversion needs a unit constant term.
    #[error("cannot invert multivariate series: constant term {0} is not a unit")]
    NonUnitConstantTerm(String),

    /// Binary multivariate operations require matching variable count,
    /// truncation weights and exponent mode.
    #[error("incompatible truncation data: {0}")]
    IncompatibleTruncation(String),

    /// Twisted-algebra vacuum modules exist only at odd levels.
    #[error("level {0} is not supported here: expected an odd level >= 1")]
    UnsupportedLevelParity(i64),

    /// Orbit enumeration requires a strictly dominant (regular) weight.
    #[error("weight {0:?} is not regular dominant: all coordinates must be positive")]
    NonRegularWeight(Vec<i64>),

    /// An orbit point was reached twice with opposite sign. This cannot
    /// happen for a regular orbit; seeing it means the input or the
    /// reflection data is corrupt.
    #[error("orbit point {0:?} reached with conflicting parities")]
    ParityConflict(Vec<i64>),

    /// A closed-form identity that must hold exactly failed to hold.
    #[error("identity violated: {0}")]
    IdentityViolation(String),

    /// The source series was not computed far enough for the requested data.
    #[error("insufficient order: {0}")]
    InsufficientOrder(String),

    /// Malformed caller input (bad ranges, bad parse, wrong lengths).
    #[error("invalid input: {0}")]
    InvalidInput(String),
}

pub type Result<T> = std::result::Result<T, Error>;
