//! Domain errors shared by every module.
//!
//! These cover invalid *inputs* only. Violations of internal identities
//! (exact divisibility, norm equations) are bugs and panic instead.

use core::fmt;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Error {
    /// A square-root operation was given a negative integer.
    NegativeInput,
    /// Quadratic-ring operands live in rings with different discriminants.
    DiscriminantMismatch,
    /// The discriminant must be a non-square integer at least 2.
    InvalidDiscriminant,
    /// The polygon order must be at least 3.
    OrderTooSmall,
    /// The polygon order must be a perfect square at least 4.
    OrderNotSquare,
    /// An index or value argument lies outside its valid domain.
    OutOfDomain,
    /// A half-integer expression failed its parity requirement.
    ParityMismatch,
    /// The coordinates do not satisfy the claimed norm equation.
    InvalidSolution,
    /// The seed solution has the wrong norm or discriminant for the chain.
    InvalidSeed,
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NegativeInput => write!(f, "input must be nonnegative"),
            Error::DiscriminantMismatch => write!(f, "operands have different discriminants"),
            Error::InvalidDiscriminant => {
                write!(f, "discriminant must be a non-square integer >= 2")
            }
            Error::OrderTooSmall => write!(f, "polygon order must be at least 3"),
            Error::OrderNotSquare => {
                write!(f, "polygon order must be a perfect square at least 4")
            }
            Error::OutOfDomain => write!(f, "argument outside the valid domain"),
            Error::ParityMismatch => write!(f, "half-integer parity requirement violated"),
            Error::InvalidSolution => write!(f, "coordinates do not satisfy the norm equation"),
            Error::InvalidSeed => write!(f, "seed has the wrong norm or discriminant"),
        }
    }
}

impl core::error::Error for Error {}
