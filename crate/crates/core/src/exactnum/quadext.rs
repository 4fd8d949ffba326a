use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::{approx_decimal, NumError, Rational};

/// Sign of a real number.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Negative,
    Zero,
    Positive,
}

impl Sign {
    fn of_rational(r: &Rational) -> Sign {
        if r.is_zero() {
            Sign::Zero
        } else if r.is_positive() {
            Sign::Positive
        } else {
            Sign::Negative
        }
    }
}

/// An element `a + b√d` of the real quadratic field `Q(√d)`.
///
/// `d` is squarefree. Values with `b = 0` are plain rationals and mix freely
/// with any radicand; their `d` is only a tag (`1` when no irrational part has
/// been seen yet). Two irrational values with different radicands cannot be
/// combined.
#[derive(Clone, Debug)]
pub struct QuadExt {
    a: Rational,
    b: Rational,
    d: u64,
}

impl QuadExt {
    /// Builds `a + b√d`, pulling square factors out of `d`.
    ///
    /// `d = 0` drops the irrational part and `d = 1` folds it into `a`.
    pub fn new(a: Rational, b: Rational, d: u64) -> QuadExt {
        if d == 0 || b.is_zero() {
            return QuadExt { a, b: Rational::zero(), d: d.max(1) };
        }
        let (k, s) = split_square(d);
        let b = b * Rational::from_integer(BigInt::from(k));
        if s == 1 {
            QuadExt { a: a + b, b: Rational::zero(), d: 1 }
        } else {
            QuadExt { a, b, d: s }
        }
    }

    pub fn from_rational(a: Rational) -> QuadExt {
        QuadExt { a, b: Rational::zero(), d: 1 }
    }

    pub fn from_integer(i: i64) -> QuadExt {
        QuadExt::from_rational(Rational::from_integer(BigInt::from(i)))
    }

    /// `√n` for a nonnegative integer, normalized.
    pub fn sqrt_of(n: &BigInt) -> Result<QuadExt, NumError> {
        if n.is_negative() {
            return Err(NumError::NegativeRadicand(n.clone()));
        }
        let root = n.sqrt();
        if &(&root * &root) == n {
            return Ok(QuadExt::from_rational(Rational::from_integer(root)));
        }
        let d = n.to_u64().ok_or_else(|| NumError::RadicandTooLarge(n.clone()))?;
        Ok(QuadExt::new(Rational::zero(), Rational::one(), d))
    }

    /// Rational part `a`.
    pub fn a(&self) -> &Rational {
        &self.a
    }

    /// Coefficient `b` of `√d`.
    pub fn b(&self) -> &Rational {
        &self.b
    }

    /// Squarefree radicand tag (1 for a value never combined with a surd).
    pub fn radicand(&self) -> u64 {
        self.d
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    pub fn to_rational(&self) -> Option<Rational> {
        self.is_rational().then(|| self.a.clone())
    }

    /// Same value, retagged to live in `Q(√d)`. Only meaningful for
    /// rationals or values already over `d`.
    pub fn with_radicand(mut self, d: u64) -> QuadExt {
        if self.is_rational() {
            self.d = d;
        }
        self
    }

    pub fn conjugate(&self) -> QuadExt {
        QuadExt { a: self.a.clone(), b: -self.b.clone(), d: self.d }
    }

    /// Field norm `x · conj(x) = a² − b²d`.
    pub fn norm(&self) -> Rational {
        &self.a * &self.a - &self.b * &self.b * Rational::from_integer(BigInt::from(self.d))
    }

    /// Exact sign of the real number `a + b√d`.
    pub fn sign(&self) -> Sign {
        let sa = Sign::of_rational(&self.a);
        let sb = Sign::of_rational(&self.b);
        match (sa, sb) {
            (s, Sign::Zero) | (Sign::Zero, s) => s,
            (x, y) if x == y => x,
            // a and b have opposite signs: compare a² with b²d
            (sa, _) => {
                // a = p/q, b = r/s: a² − b²d has the sign of p²s² − r²q²d
                let ps = self.a.numer() * self.b.denom();
                let rq = self.b.numer() * self.a.denom();
                let diff = &ps * &ps - &rq * &rq * BigInt::from(self.d);
                match (diff.sign(), sa) {
                    (num_bigint::Sign::NoSign, _) => Sign::Zero,
                    (num_bigint::Sign::Plus, s) => s,
                    (num_bigint::Sign::Minus, Sign::Positive) => Sign::Negative,
                    (num_bigint::Sign::Minus, _) => Sign::Positive,
                }
            }
        }
    }

    pub fn is_positive(&self) -> bool {
        self.sign() == Sign::Positive
    }

    pub fn is_negative(&self) -> bool {
        self.sign() == Sign::Negative
    }

    pub fn abs(&self) -> QuadExt {
        if self.is_negative() {
            -self.clone()
        } else {
            self.clone()
        }
    }

    fn common_radicand(&self, other: &QuadExt) -> Result<u64, NumError> {
        match (self.b.is_zero(), other.b.is_zero()) {
            (false, false) if self.d != other.d => {
                Err(NumError::RadicandMismatch { left: self.d, right: other.d })
            }
            (false, _) => Ok(self.d),
            (true, false) => Ok(other.d),
            (true, true) => Ok(if self.d == 1 { other.d } else { self.d }),
        }
    }

    pub fn checked_add(&self, other: &QuadExt) -> Result<QuadExt, NumError> {
        let d = self.common_radicand(other)?;
        Ok(QuadExt { a: &self.a + &other.a, b: &self.b + &other.b, d })
    }

    pub fn checked_sub(&self, other: &QuadExt) -> Result<QuadExt, NumError> {
        let d = self.common_radicand(other)?;
        Ok(QuadExt { a: &self.a - &other.a, b: &self.b - &other.b, d })
    }

    pub fn checked_mul(&self, other: &QuadExt) -> Result<QuadExt, NumError> {
        let d = self.common_radicand(other)?;
        let dr = Rational::from_integer(BigInt::from(d));
        let a = &self.a * &other.a + &self.b * &other.b * dr;
        let b = &self.a * &other.b + &self.b * &other.a;
        Ok(QuadExt { a, b, d })
    }

    pub fn checked_div(&self, other: &QuadExt) -> Result<QuadExt, NumError> {
        let d = self.common_radicand(other)?;
        // the norm of a nonzero element is nonzero because d is not a square
        let n = other.norm();
        if n.is_zero() {
            return Err(NumError::DivisionByZero);
        }
        let num = self.checked_mul(&other.conjugate())?;
        Ok(QuadExt { a: num.a / &n, b: num.b / &n, d })
    }

    pub fn recip(&self) -> Result<QuadExt, NumError> {
        QuadExt::from_integer(1).with_radicand(self.d).checked_div(self)
    }

    /// Exact comparison; fails only for irrational values over different fields.
    pub fn cmp_exact(&self, other: &QuadExt) -> Result<Ordering, NumError> {
        Ok(match self.checked_sub(other)?.sign() {
            Sign::Negative => Ordering::Less,
            Sign::Zero => Ordering::Equal,
            Sign::Positive => Ordering::Greater,
        })
    }

    /// Rational approximation with √d truncated to `digits` decimals.
    pub fn rational_approx(&self, digits: u32) -> Rational {
        if self.is_rational() {
            return self.a.clone();
        }
        let scale = num_traits::pow(BigInt::from(10), digits as usize);
        let root = (BigInt::from(self.d) * &scale * &scale).sqrt();
        &self.a + &self.b * Rational::new(root, scale)
    }

    pub fn to_f64(&self) -> f64 {
        self.rational_approx(40).to_f64().unwrap_or(f64::NAN)
    }

    /// Decimal approximation with `sig` significant digits.
    pub fn approx(&self, sig: usize) -> String {
        approx_decimal(&self.rational_approx(sig as u32 + 20), sig)
    }
}

/// `d = k² · s` with `s` squarefree.
fn split_square(mut d: u64) -> (u64, u64) {
    let mut k = 1u64;
    let mut s = 1u64;
    let mut p = 2u64;
    while p.saturating_mul(p) <= d {
        let mut e = 0;
        while d % p == 0 {
            d /= p;
            e += 1;
        }
        k *= p.pow(e / 2);
        if e % 2 == 1 {
            s *= p;
        }
        p += if p == 2 { 1 } else { 2 };
    }
    (k, s * d)
}

impl PartialEq for QuadExt {
    fn eq(&self, other: &QuadExt) -> bool {
        self.a == other.a && self.b == other.b && (self.b.is_zero() || self.d == other.d)
    }
}

impl Eq for QuadExt {}

impl PartialOrd for QuadExt {
    fn partial_cmp(&self, other: &QuadExt) -> Option<Ordering> {
        self.cmp_exact(other).ok()
    }
}

impl fmt::Display for QuadExt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&super::format_number(self))
    }
}

impl Neg for QuadExt {
    type Output = QuadExt;
    fn neg(self) -> QuadExt {
        QuadExt { a: -self.a, b: -self.b, d: self.d }
    }
}

impl Neg for &QuadExt {
    type Output = QuadExt;
    fn neg(self) -> QuadExt {
        -self.clone()
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl $trait<&QuadExt> for &QuadExt {
            type Output = QuadExt;
            fn $method(self, other: &QuadExt) -> QuadExt {
                match self.$checked(other) {
                    Ok(v) => v,
                    Err(e) => panic!("{e}"),
                }
            }
        }
        impl $trait<QuadExt> for QuadExt {
            type Output = QuadExt;
            fn $method(self, other: QuadExt) -> QuadExt {
                (&self).$method(&other)
            }
        }
        impl $trait<&QuadExt> for QuadExt {
            type Output = QuadExt;
            fn $method(self, other: &QuadExt) -> QuadExt {
                (&self).$method(other)
            }
        }
        impl $trait<QuadExt> for &QuadExt {
            type Output = QuadExt;
            fn $method(self, other: QuadExt) -> QuadExt {
                self.$method(&other)
            }
        }
    };
}

forward_binop!(Add, add, checked_add);
forward_binop!(Sub, sub, checked_sub);
forward_binop!(Mul, mul, checked_mul);
forward_binop!(Div, div, checked_div);

impl From<Rational> for QuadExt {
    fn from(r: Rational) -> QuadExt {
        QuadExt::from_rational(r)
    }
}

impl From<i64> for QuadExt {
    fn from(i: i64) -> QuadExt {
        QuadExt::from_integer(i)
    }
}

impl Zero for QuadExt {
    fn zero() -> Self {
        QuadExt::from_integer(0)
    }

    fn is_zero(&self) -> bool {
        QuadExt::is_zero(self)
    }
}

impl One for QuadExt {
    fn one() -> Self {
        QuadExt::from_integer(1)
    }
}

impl super::Field for QuadExt {
    fn from_rational(r: &Rational) -> Self {
        QuadExt::from_rational(r.clone())
    }

    fn positivity(&self) -> Option<bool> {
        Some(QuadExt::is_positive(self))
    }
}
