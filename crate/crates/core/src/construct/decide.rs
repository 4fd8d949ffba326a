use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive};

use super::{grid_tiling, quadratic_tiling, ConstructError, MAX_PARTS};
use crate::dissection::Dissection;
use crate::exactnum::{QuadExt, Rational};
use crate::polystab::{all_roots_positive_real_part, IntPoly};

/// What to decide about: a ratio, or an integer polynomial standing for its
/// roots (assumed minimal; extra factors only make the answer more
/// conservative).
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DecideInput {
    Number(QuadExt),
    Polynomial(IntPoly),
}

/// Why no tiling exists.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    /// A real root or conjugate that is not positive.
    NonPositive(QuadExt),
    /// The polynomial fails the positive-real-part test.
    Unstable(IntPoly),
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Witness::NonPositive(x) => write!(f, "{x}"),
            Witness::Unstable(p) => write!(f, "root-with-nonpositive-real-part-of({p})"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Decision {
    Possible(Dissection),
    Impossible(Witness),
    /// Degree ≥ 3: the test passes but no constructor is available.
    Undecided { stability: bool },
}

/// `POSSIBLE <nparts>`, `IMPOSSIBLE witness=<number>`, `UNDECIDED stability=<bool>`.
impl fmt::Display for Decision {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Decision::Possible(d) => write!(f, "POSSIBLE {}", d.parts().len()),
            Decision::Impossible(w) => write!(f, "IMPOSSIBLE witness={w}"),
            Decision::Undecided { stability } => write!(f, "UNDECIDED stability={stability}"),
        }
    }
}

fn small(v: &BigInt) -> Result<u32, ConstructError> {
    v.to_u32().ok_or(ConstructError::TooManyParts(MAX_PARTS.saturating_add(1)))
}

/// A tiling for a positive ratio: a grid for rationals, the two-block
/// construction for quadratic numbers.
pub fn tiling_for(x: &QuadExt) -> Result<Dissection, ConstructError> {
    match x.to_rational() {
        Some(r) if r.is_positive() => grid_tiling(small(r.numer())?, small(r.denom())?),
        Some(_) => Err(ConstructError::Obstruction { witness: x.clone() }),
        None => quadratic_tiling(x),
    }
}

fn decide_number(x: &QuadExt) -> Result<Decision, ConstructError> {
    if x.is_zero() {
        return Err(ConstructError::ZeroRatio);
    }
    for v in [x.clone(), x.conjugate()] {
        if !v.is_positive() {
            return Ok(Decision::Impossible(Witness::NonPositive(v)));
        }
    }
    Ok(Decision::Possible(tiling_for(x)?))
}

/// Real roots of `ax² + bx + c`, smaller first.
fn real_quadratic_roots(p: &IntPoly) -> Option<(QuadExt, QuadExt)> {
    let [c, b, a] = p.coeffs() else { return None };
    let disc = b * b - BigInt::from(4) * a * c;
    if disc.is_negative() {
        return None;
    }
    let s = QuadExt::sqrt_of(&disc).ok()?;
    let minus_b = QuadExt::from(Rational::from_integer(-b));
    let two_a = QuadExt::from(Rational::from_integer(BigInt::from(2) * a));
    let r1 = &(&minus_b - &s) / &two_a;
    let r2 = &(&minus_b + &s) / &two_a;
    Some(if r1 < r2 { (r1, r2) } else { (r2, r1) })
}

fn decide_polynomial(p: &IntPoly) -> Result<Decision, ConstructError> {
    let stable = all_roots_positive_real_part(p)?;
    match p.degree() {
        Some(1) => {
            let [c0, c1] = p.coeffs() else { unreachable!() };
            let root = QuadExt::from(Rational::new(-c0, c1.clone()));
            if root.is_zero() {
                return Ok(Decision::Impossible(Witness::NonPositive(root)));
            }
            decide_number(&root)
        }
        Some(2) => {
            let (low, high) = real_quadratic_roots(p).ok_or(ConstructError::NoRealRoot)?;
            if stable {
                Ok(Decision::Possible(tiling_for(&high)?))
            } else {
                Ok(Decision::Impossible(Witness::NonPositive(low)))
            }
        }
        _ if stable => Ok(Decision::Undecided { stability: true }),
        _ => Ok(Decision::Impossible(Witness::Unstable(p.clone()))),
    }
}

/// Decides whether the unit square can be cut into rectangles of ratio `R`.
///
/// Numbers: rationals and quadratic numbers are decided completely, with a
/// tiling when one exists and a nonpositive conjugate otherwise. `R` and
/// `1/R` give the same answer.
///
/// Polynomials: the positive-real-part test decides impossibility for any
/// degree; a tiling is built for degree ≤ 2 (for the larger root), and
/// higher degrees that pass the test are reported as undecided.
pub fn decide(input: &DecideInput) -> Result<Decision, ConstructError> {
    match input {
        DecideInput::Number(x) => decide_number(x),
        DecideInput::Polynomial(p) => decide_polynomial(p),
    }
}
