//! Text form of [`QuadExt`] values.
//!
//! ```text
//! number   := rational | rational sign term | term | sign term
//! term     := rational '*' 'sqrt(' uint ')' | 'sqrt(' uint ')'
//! rational := ['-'] uint ['/' uint]
//! sign     := '+' | '-'
//! ```
//!
//! Whitespace is allowed between tokens.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{format_rational, NumError, QuadExt, Rational};

struct Cursor<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn at_keyword(&mut self, kw: &str) -> bool {
        self.skip_ws();
        self.src[self.pos..].starts_with(kw.as_bytes())
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T, NumError> {
        Err(NumError::Syntax { pos: self.pos, msg: msg.into() })
    }

    fn expect(&mut self, c: u8) -> Result<(), NumError> {
        if self.eat(c) {
            Ok(())
        } else {
            self.err(format!("expected '{}'", c as char))
        }
    }

    fn uint(&mut self) -> Result<BigInt, NumError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected digits");
        }
        let digits = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        Ok(digits.parse().expect("validated digits"))
    }

    fn rational(&mut self) -> Result<Rational, NumError> {
        let neg = self.eat(b'-');
        let num = self.uint()?;
        let den = if self.eat(b'/') {
            let at = self.pos;
            let den = self.uint()?;
            if den.is_zero() {
                return Err(NumError::Syntax { pos: at, msg: "zero denominator".into() });
            }
            den
        } else {
            BigInt::one()
        };
        let r = Rational::new(num, den);
        Ok(if neg { -r } else { r })
    }

    /// `sqrt(uint)`, after any coefficient has been consumed.
    fn sqrt(&mut self, coeff: Rational) -> Result<QuadExt, NumError> {
        if !self.at_keyword("sqrt(") {
            return self.err("expected 'sqrt('");
        }
        self.pos += "sqrt(".len();
        let radicand = self.uint()?;
        self.expect(b')')?;
        let root = QuadExt::sqrt_of(&radicand)?;
        Ok(&QuadExt::from_rational(coeff) * &root)
    }

    fn term(&mut self) -> Result<QuadExt, NumError> {
        if self.at_keyword("sqrt(") {
            return self.sqrt(Rational::one());
        }
        let coeff = self.rational()?;
        self.expect(b'*')?;
        self.sqrt(coeff)
    }
}

/// Parses a number in the grammar above. Radicands are normalized
/// (`sqrt(8)` becomes `2*sqrt(2)`; `sqrt(0)`, `sqrt(1)`, `sqrt(4)` are rational).
pub fn parse_number(s: &str) -> Result<QuadExt, NumError> {
    let mut cur = Cursor { src: s.as_bytes(), pos: 0 };
    let value = match cur.peek() {
        None => return cur.err("empty number"),
        Some(b'+') => {
            cur.pos += 1;
            cur.term()?
        }
        Some(b'-') => {
            let save = cur.pos;
            cur.pos += 1;
            if cur.at_keyword("sqrt(") {
                -cur.term()?
            } else {
                cur.pos = save;
                leading_rational(&mut cur)?
            }
        }
        Some(b's') => cur.term()?,
        Some(_) => leading_rational(&mut cur)?,
    };
    if cur.peek().is_some() {
        return cur.err("unexpected trailing input");
    }
    Ok(value)
}

fn leading_rational(cur: &mut Cursor<'_>) -> Result<QuadExt, NumError> {
    let r = cur.rational()?;
    match cur.peek() {
        Some(b'*') => {
            cur.pos += 1;
            cur.sqrt(r)
        }
        Some(b'+') => {
            cur.pos += 1;
            Ok(&QuadExt::from_rational(r) + &cur.term()?)
        }
        Some(b'-') => {
            cur.pos += 1;
            Ok(&QuadExt::from_rational(r) - &cur.term()?)
        }
        _ => Ok(QuadExt::from_rational(r)),
    }
}

/// Canonical text form: `3/2`, `1-1*sqrt(2)`, `-1/2*sqrt(3)`, `0`.
pub fn format_number(x: &QuadExt) -> String {
    let (a, b) = (x.a(), x.b());
    if b.is_zero() {
        return format_rational(a);
    }
    let surd = format!("*sqrt({})", x.radicand());
    if a.is_zero() {
        return format!("{}{}", format_rational(b), surd);
    }
    let op = if b.is_negative() { '-' } else { '+' };
    format!("{}{}{}{}", format_rational(a), op, format_rational(&b.abs()), surd)
}
