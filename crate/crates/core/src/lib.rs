//! Exact decision, construction and verification of square tilings by
//! similar rectangles.
//!
//! A square can be cut into rectangles whose sides are in ratio `R` exactly
//! when `R` is algebraic and every conjugate of `R` has positive real part.
//! This crate works that statement out with exact arithmetic:
//!
//! * [`exactnum`]: rationals, quadratic numbers `a + b√d`, rational functions;
//! * [`polystab`]: polynomials and the exact positive-real-part test;
//! * [`dissection`]: rectangle tilings, validation, file format, SVG;
//! * [`circuit`]: the resistor network of a tiling, solved exactly;
//! * [`construct`]: the decision procedure and tiling constructors;
//! * [`cli`]: the `simrect` command line.

pub mod exactnum;
pub mod polystab;
pub mod dissection;
pub mod circuit;
pub mod construct;
pub mod cli;
