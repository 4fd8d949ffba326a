//! Exact arithmetic kernel.
//!
//! Three fields live here:
//!
//! * [`Rational`], arbitrary-precision fractions (backed by `num-rational`);
//! * [`QuadExt`], elements `a + b√d` of a real quadratic field, with
//!   conjugation and an exact sign test;
//! * [`RationalFunction`], quotients of rational polynomials in a formal
//!   variable `t`, used to solve networks symbolically.
//!
//! All three implement [`Field`], which is what the circuit solver and the
//! polynomial evaluator are generic over.

mod field;
mod parse;
mod quadext;
mod ratfunc;
mod rational;

pub use field::Field;
pub use parse::{format_number, parse_number};
pub use quadext::{QuadExt, Sign};
pub use ratfunc::RationalFunction;
pub use rational::{approx_decimal, format_rational, rational, Rational};

use thiserror::Error;

/// Errors raised by the exact arithmetic kernel.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NumError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("cannot mix sqrt({left}) and sqrt({right}) in one operation")]
    RadicandMismatch { left: u64, right: u64 },
    #[error("square root of negative number {0}")]
    NegativeRadicand(num_bigint::BigInt),
    #[error("radicand {0} does not fit in 64 bits")]
    RadicandTooLarge(num_bigint::BigInt),
    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
}
