use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive};

use super::{check_part_count, quadratic_parameters, ConstructError};
use crate::dissection::{Dissection, Rect};
use crate::exactnum::{format_rational, QuadExt, Rational};

/// Positive rationals `c₁, …, cₙ` with
/// `c₁R + 1/(c₂R + 1/(… + 1/(cₙR))) = 1` for the ratio `R` they belong to.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CFExpansion {
    coeffs: Vec<Rational>,
}

impl CFExpansion {
    pub fn new(coeffs: Vec<Rational>) -> Result<CFExpansion, ConstructError> {
        if coeffs.is_empty() {
            return Err(ConstructError::EmptyExpansion);
        }
        if !coeffs.iter().all(Signed::is_positive) {
            return Err(ConstructError::NonPositiveCoefficient);
        }
        Ok(CFExpansion { coeffs })
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// `c₁r + 1/(c₂r + 1/(… + 1/(cₙr)))`, or `None` if some inner level is 0.
    pub fn tower(&self, r: &QuadExt) -> Option<QuadExt> {
        let mut levels = self.coeffs.iter().rev();
        let last = levels.next().expect("nonempty");
        let mut v = &QuadExt::from(last.clone()) * r;
        for c in levels {
            v = &(&QuadExt::from(c.clone()) * r) + &v.recip().ok()?;
        }
        Some(v)
    }
}

impl fmt::Display for CFExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let items: Vec<String> = self.coeffs.iter().map(format_rational).collect();
        write!(f, "[{}]", items.join(", "))
    }
}

/// Cuts the unit square by alternating vertical and horizontal cuts.
///
/// Step `i` slices off a rectangle whose long-direction ratio is `cᵢR`: on
/// odd steps a full-height piece of width `cᵢR·H` from the left, on even
/// steps a full-width piece of height `cᵢR·W` from the bottom. The last
/// piece is exactly the remainder. Each piece with `cᵢ = u/v` in lowest
/// terms is then split into a `u × v` grid whose cells have ratio `R`.
pub fn cf_tiling(r: &QuadExt, e: &CFExpansion) -> Result<Dissection, ConstructError> {
    if !r.is_positive() {
        return Err(ConstructError::NonPositiveRatio(r.clone()));
    }
    match e.tower(r) {
        Some(v) if v == QuadExt::from(1) => {}
        Some(v) => return Err(ConstructError::TowerNotOne(v)),
        None => return Err(ConstructError::TowerNotOne(QuadExt::from(0))),
    }
    let count = e.coeffs().iter().try_fold(0u64, |acc, c| {
        let cells = (c.numer() * c.denom()).to_u64()?;
        acc.checked_add(cells)
    });
    check_part_count(count.unwrap_or(u64::MAX))?;

    let (mut x, mut y) = (QuadExt::from(0), QuadExt::from(0));
    let (mut w, mut h) = (QuadExt::from(1), QuadExt::from(1));
    let mut parts = Vec::new();
    let last = e.coeffs().len() - 1;
    for (i, c) in e.coeffs().iter().enumerate() {
        let cr = &QuadExt::from(c.clone()) * r;
        let vertical = i % 2 == 0;
        let piece = if vertical {
            Rect { x: x.clone(), y: y.clone(), w: &cr * &h, h: h.clone() }
        } else {
            Rect { x: x.clone(), y: y.clone(), w: w.clone(), h: &cr * &w }
        };
        let (long_cells, short_cells) = (c.numer(), c.denom());
        // along the cut direction: `numer` cells across the long side
        let (cols, rows) = if vertical {
            (long_cells, short_cells)
        } else {
            (short_cells, long_cells)
        };
        subdivide(&piece, cols, rows, &mut parts);
        if vertical {
            x = piece.right();
            w = &w - &piece.w;
            if i < last && !w.is_positive() {
                return Err(ConstructError::NonPositiveRemainder { step: i + 1 });
            }
        } else {
            y = piece.top();
            h = &h - &piece.h;
            if i < last && !h.is_positive() {
                return Err(ConstructError::NonPositiveRemainder { step: i + 1 });
            }
        }
    }
    Ok(Dissection::unit_square(parts)?)
}

fn subdivide(piece: &Rect, cols: &BigInt, rows: &BigInt, out: &mut Vec<Rect>) {
    let cols_n = cols.to_u64().expect("bounded by the part limit");
    let rows_n = rows.to_u64().expect("bounded by the part limit");
    let k = |v: u64| QuadExt::from(Rational::from_integer(BigInt::from(v)));
    let cw = &piece.w / &QuadExt::from(Rational::from_integer(cols.clone()));
    let ch = &piece.h / &QuadExt::from(Rational::from_integer(rows.clone()));
    let xs: Vec<QuadExt> = (0..cols_n).map(|c| &piece.x + &(&cw * &k(c))).collect();
    let ys: Vec<QuadExt> = (0..rows_n).map(|r| &piece.y + &(&ch * &k(r))).collect();
    for y in &ys {
        for x in &xs {
            out.push(Rect { x: x.clone(), y: y.clone(), w: cw.clone(), h: ch.clone() });
        }
    }
}

/// An expansion for `x`: `[v/u]` for a positive rational `u/v`, and
/// `[n/m, p/q]` from the two-block parameters for a quadratic `x` whose
/// conjugates are both positive.
pub fn find_cf(x: &QuadExt) -> Result<CFExpansion, ConstructError> {
    if let Some(r) = x.to_rational() {
        if !r.is_positive() {
            return Err(ConstructError::Obstruction { witness: x.clone() });
        }
        return CFExpansion::new(vec![r.recip()]);
    }
    let p = quadratic_parameters(x)?;
    let frac = |a: u32, b: u32| Rational::new(a.into(), b.into());
    let e = CFExpansion::new(vec![frac(p.n, p.m), frac(p.p, p.q)])?;
    debug_assert_eq!(e.tower(x), Some(QuadExt::from(Rational::one())));
    Ok(e)
}
