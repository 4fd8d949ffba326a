use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

/// Arbitrary-precision rational number in canonical form.
pub type Rational = num_rational::BigRational;

/// Shorthand for `num/den` as a [`Rational`]. Panics if `den == 0`.
pub fn rational(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// `p` or `p/q`, the form used by the number grammar.
pub fn format_rational(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Decimal rendering of `r` rounded to `sig` significant digits
/// (round half away from zero). Trailing zeros are kept.
pub fn approx_decimal(r: &Rational, sig: usize) -> String {
    assert!(sig > 0);
    if r.is_zero() {
        return "0".to_owned();
    }
    let neg = r.is_negative();
    let r = r.abs();
    // decimal exponent e with 10^e <= r < 10^(e+1)
    let num = r.numer().clone();
    let den = r.denom().clone();
    let ten = BigInt::from(10);
    let mut e: i64 = num.to_string().len() as i64 - den.to_string().len() as i64;
    loop {
        let (lo, hi) = if e >= 0 {
            (num.clone(), &den * pow10(e as u32))
        } else {
            (&num * pow10((-e) as u32), den.clone())
        };
        // lo/hi = r / 10^e
        if lo < hi {
            e -= 1;
        } else if lo >= &hi * &ten {
            e += 1;
        } else {
            break;
        }
    }
    // scaled = round(r * 10^(sig-1-e))
    let shift = sig as i64 - 1 - e;
    let (n, d) = if shift >= 0 {
        (&num * pow10(shift as u32), den)
    } else {
        (num, &den * pow10((-shift) as u32))
    };
    let (q, rem) = n.div_rem(&d);
    let mut digits = if &rem * 2 >= d { q + 1 } else { q };
    let mut shift = shift;
    if digits.to_string().len() > sig {
        // rounding carried into a new digit (e.g. 9.99 -> 10.0)
        digits /= 10;
        shift -= 1;
    }
    let s = digits.to_string();
    let body = if shift <= 0 {
        format!("{}{}", s, "0".repeat((-shift) as usize))
    } else if (shift as usize) < s.len() {
        let split = s.len() - shift as usize;
        format!("{}.{}", &s[..split], &s[split..])
    } else {
        format!("0.{}{}", "0".repeat(shift as usize - s.len()), s)
    };
    if neg {
        format!("-{body}")
    } else {
        body
    }
}

fn pow10(k: u32) -> BigInt {
    num_traits::pow(BigInt::from(10), k as usize)
}
