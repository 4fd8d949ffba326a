use num_traits::{Signed, Zero};

use super::{IntPoly, PolyError};
use crate::exactnum::Rational;

/// First column of the Routh array of `p`, computed exactly.
///
/// Stops early (with the zero included) as soon as a zero pivot appears.
pub fn routh_first_column(p: &IntPoly) -> Vec<Rational> {
    let Some(n) = p.degree() else {
        return Vec::new();
    };
    // highest degree first
    let a: Vec<Rational> = p.coeffs().iter().rev().cloned().map(Rational::from_integer).collect();
    let mut prev: Vec<Rational> = a.iter().step_by(2).cloned().collect();
    let mut cur: Vec<Rational> = a.iter().skip(1).step_by(2).cloned().collect();
    let mut column = vec![prev[0].clone()];
    if n == 0 {
        return column;
    }
    let zero = Rational::zero();
    for _ in 1..n {
        let pivot = cur[0].clone();
        column.push(pivot.clone());
        if pivot.is_zero() {
            return column;
        }
        let len = prev.len().saturating_sub(1).max(1);
        let next: Vec<Rational> = (0..len)
            .map(|j| {
                let upper = prev.get(j + 1).unwrap_or(&zero);
                let lower = cur.get(j + 1).unwrap_or(&zero);
                (&pivot * upper - &prev[0] * lower) / &pivot
            })
            .collect();
        prev = std::mem::replace(&mut cur, next);
    }
    column.push(cur[0].clone());
    column
}

/// Whether every complex root of `p` has strictly positive real part.
///
/// Equivalent to Hurwitz stability of `p(-x)`, decided exactly: all
/// coefficients of `p(-x)` share one sign and the first column of its Routh
/// array has no zero and no sign change. Roots on the imaginary axis give
/// `false`.
pub fn all_roots_positive_real_part(p: &IntPoly) -> Result<bool, PolyError> {
    match p.degree() {
        None => return Err(PolyError::ZeroPolynomial),
        Some(0) => return Err(PolyError::ConstantPolynomial),
        Some(_) => {}
    }
    let q = p.reflect();
    let lead_positive = q.leading().expect("nonzero").is_positive();
    let coeffs_ok = q
        .coeffs()
        .iter()
        .all(|c| !c.is_zero() && c.is_positive() == lead_positive);
    if !coeffs_ok {
        return Ok(false);
    }
    let column = routh_first_column(&q);
    Ok(column
        .iter()
        .all(|c| !c.is_zero() && c.is_positive() == lead_positive))
}
