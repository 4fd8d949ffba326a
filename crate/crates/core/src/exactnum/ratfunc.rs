use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::{Field, NumError, Rational};
use crate::polystab::RatPoly;

/// Element `num(t) / den(t)` of the field `Q(t)`.
///
/// Always stored reduced: `gcd(num, den) = 1` and `den` monic. Zero is `0/1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RationalFunction {
    num: RatPoly,
    den: RatPoly,
}

impl RationalFunction {
    pub fn new(num: RatPoly, den: RatPoly) -> Result<RationalFunction, NumError> {
        if den.is_zero() {
            return Err(NumError::DivisionByZero);
        }
        Ok(RationalFunction::reduced(num, den))
    }

    fn reduced(num: RatPoly, den: RatPoly) -> RationalFunction {
        if num.is_zero() {
            return RationalFunction { num, den: RatPoly::constant(Rational::one()) };
        }
        let g = num.gcd(&den);
        let (num, _) = num.div_rem(&g).expect("gcd is nonzero");
        let (den, _) = den.div_rem(&g).expect("gcd is nonzero");
        let lc = den.leading().expect("nonzero denominator").recip();
        RationalFunction { num: num.scale(&lc), den: den.scale(&lc) }
    }

    /// The formal variable `t`.
    pub fn t() -> RationalFunction {
        RationalFunction { num: RatPoly::x(), den: RatPoly::constant(Rational::one()) }
    }

    pub fn constant(c: Rational) -> RationalFunction {
        RationalFunction { num: RatPoly::constant(c), den: RatPoly::constant(Rational::one()) }
    }

    pub fn numerator(&self) -> &RatPoly {
        &self.num
    }

    pub fn denominator(&self) -> &RatPoly {
        &self.den
    }

    /// Value at `t = x`, or `None` at a pole.
    pub fn evaluate<F: Field>(&self, x: &F) -> Option<F> {
        let d = self.den.evaluate(x);
        if d.is_zero() {
            return None;
        }
        Some(self.num.evaluate(x) / d)
    }

    pub fn checked_div(&self, other: &RationalFunction) -> Result<RationalFunction, NumError> {
        if other.num.is_zero() {
            return Err(NumError::DivisionByZero);
        }
        Ok(RationalFunction::reduced(&self.num * &other.den, &self.den * &other.num))
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let num = self.num.to_string().replace('x', "t");
        if self.den.degree() == Some(0) {
            return f.write_str(&num);
        }
        write!(f, "({num})/({})", self.den.to_string().replace('x', "t"))
    }
}

impl Add for RationalFunction {
    type Output = RationalFunction;
    fn add(self, other: RationalFunction) -> RationalFunction {
        if self.den == other.den {
            return RationalFunction::reduced(&self.num + &other.num, self.den);
        }
        RationalFunction::reduced(
            &(&self.num * &other.den) + &(&other.num * &self.den),
            &self.den * &other.den,
        )
    }
}

impl Neg for RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        RationalFunction { num: -&self.num, den: self.den }
    }
}

impl Sub for RationalFunction {
    type Output = RationalFunction;
    fn sub(self, other: RationalFunction) -> RationalFunction {
        self + (-other)
    }
}

impl Mul for RationalFunction {
    type Output = RationalFunction;
    fn mul(self, other: RationalFunction) -> RationalFunction {
        RationalFunction::reduced(&self.num * &other.num, &self.den * &other.den)
    }
}

impl Div for RationalFunction {
    type Output = RationalFunction;
    fn div(self, other: RationalFunction) -> RationalFunction {
        match self.checked_div(&other) {
            Ok(v) => v,
            Err(e) => panic!("{e}"),
        }
    }
}

impl Zero for RationalFunction {
    fn zero() -> Self {
        RationalFunction::constant(Rational::zero())
    }

    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl One for RationalFunction {
    fn one() -> Self {
        RationalFunction::constant(Rational::one())
    }
}

impl Field for RationalFunction {
    fn from_rational(r: &Rational) -> Self {
        RationalFunction::constant(r.clone())
    }

    fn positivity(&self) -> Option<bool> {
        None
    }
}
