//! Exact scalar, vector and matrix arithmetic over Q and Q(√5).
//!
//! This is the numeric substrate for all root-system geometry. Scalars are
//! kept in a canonical reduced form so that equality is structural and the
//! ordering agrees with the real embedding.

mod matrix;
mod scalar;
mod vector;

pub use matrix::Matrix;
pub use scalar::{FieldTag, ParseScalarError, Rational, Scalar};
pub use vector::Vector;

use core::fmt;

/// Errors from exact arithmetic: the two ways a well-typed operation can
/// still be asked to do something undefined.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ArithmeticError {
    DivisionByZero,
    DimensionMismatch { left: usize, right: usize },
}

impl fmt::Display for ArithmeticError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ArithmeticError::DivisionByZero => write!(f, "division by zero"),
            ArithmeticError::DimensionMismatch { left, right } => {
                write!(f, "dimension mismatch: {left} vs {right}")
            }
        }
    }
}

impl core::error::Error for ArithmeticError {}
