//! Deciding whether a square can be cut into rectangles of a given ratio,
//! and cutting it when it can.
//!
//! * [`grid_tiling`]: rational ratios, an `m × n` grid;
//! * [`two_block_tiling`]: a block of `m` rows of `n` "along" rectangles next
//!   to a block of `p` rows of `q` "across" rectangles;
//! * [`quadratic_tiling`]: picks two-block parameters from the minimal
//!   polynomial of a quadratic ratio whose conjugates are both positive;
//! * [`cf_tiling`]: alternating vertical and horizontal cuts driven by a
//!   [`CFExpansion`];
//! * [`decide`]: the full decision for numbers and polynomials.

mod cf;
mod decide;
mod grid;
mod two_block;

pub use cf::{cf_tiling, find_cf, CFExpansion};
pub use decide::{decide, tiling_for, DecideInput, Decision, Witness};
pub use grid::grid_tiling;
pub use two_block::{quadratic_parameters, quadratic_tiling, two_block_tiling, Root, TwoBlockParams};

use num_bigint::BigInt;
use thiserror::Error;

use crate::dissection::DissectionError;
use crate::exactnum::QuadExt;
use crate::polystab::PolyError;

/// Upper bound on the number of parts any constructor will emit.
pub const MAX_PARTS: u64 = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructError {
    #[error("grid and block sizes must be positive")]
    ZeroParameter,
    #[error("{0} parts exceeds the limit of {MAX_PARTS}")]
    TooManyParts(u64),
    #[error("negative discriminant {0}: no real ratio")]
    NegativeDiscriminant(BigInt),
    /// `x` or its conjugate is not positive; no tiling exists.
    #[error("{witness} is not positive, so no tiling exists")]
    Obstruction { witness: QuadExt },
    #[error("{0} is rational; use a grid tiling")]
    Rational(QuadExt),
    #[error("the ratio must be nonzero")]
    ZeroRatio,
    #[error("ratio {0} is not positive")]
    NonPositiveRatio(QuadExt),
    #[error("expansion coefficients must be positive")]
    NonPositiveCoefficient,
    #[error("an expansion needs at least one coefficient")]
    EmptyExpansion,
    #[error("the expansion evaluates to {0}, not 1")]
    TowerNotOne(QuadExt),
    #[error("cut {step} leaves no room")]
    NonPositiveRemainder { step: usize },
    #[error("the polynomial has no real root")]
    NoRealRoot,
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Dissection(#[from] DissectionError),
}

fn check_part_count(count: u64) -> Result<(), ConstructError> {
    if count > MAX_PARTS {
        Err(ConstructError::TooManyParts(count))
    } else {
        Ok(())
    }
}
