use std::fmt::{Debug, Display};
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::Rational;

/// A field with exact equality, as needed by Gaussian elimination and
/// Horner evaluation.
///
/// The arithmetic operators may panic on inputs that have no common field
/// (two different radicands, or division by zero); callers that cannot rule
/// this out use the `checked_*` methods of the concrete types.
pub trait Field:
    Clone
    + PartialEq
    + Debug
    + Display
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
    + Zero
    + One
{
    fn from_rational(r: &Rational) -> Self;

    /// Exact positivity, when the field is ordered. `None` for fields
    /// without a usable order (rational functions).
    fn positivity(&self) -> Option<bool>;
}

impl Field for Rational {
    fn from_rational(r: &Rational) -> Self {
        r.clone()
    }

    fn positivity(&self) -> Option<bool> {
        Some(self.is_positive())
    }
}
