//! Integer and rational polynomials, minimal polynomials of quadratic
//! numbers, and an exact test for "every root has positive real part".

mod poly;
mod routh;

pub use poly::{IntPoly, RatPoly};
pub use routh::{all_roots_positive_real_part, routh_first_column};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Signed;
use thiserror::Error;

use crate::exactnum::{QuadExt, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("the zero polynomial is not allowed here")]
    ZeroPolynomial,
    #[error("a polynomial of degree at least 1 is required")]
    ConstantPolynomial,
    #[error("bad coefficient {token:?} at position {index}")]
    Syntax { index: usize, token: String },
}

/// Canonical integer minimal polynomial of `x` over Q.
///
/// Degree 1 (`qx - p`) for a rational `p/q`, otherwise the degree-2
/// polynomial whose roots are `x` and its conjugate. Content is 1 and the
/// leading coefficient is positive.
pub fn minimal_polynomial(x: &QuadExt) -> IntPoly {
    if let Some(r) = x.to_rational() {
        return IntPoly::new(vec![-r.numer().clone(), r.denom().clone()]);
    }
    // x^2 - 2a x + (a^2 - b^2 d)
    let trace = x.a() * Rational::from_integer(BigInt::from(2));
    let norm = x.norm();
    let lcm = trace.denom().lcm(norm.denom());
    let scale = Rational::from_integer(lcm.clone());
    let coeffs = vec![(norm * &scale).to_integer(), (-trace * &scale).to_integer(), lcm];
    let p = IntPoly::new(coeffs).canonical();
    debug_assert!(p.leading().is_some_and(Signed::is_positive));
    p
}
