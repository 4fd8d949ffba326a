//! Axis-aligned rectangle dissections with exact coordinates.
//!
//! A [`Dissection`] is a target rectangle and a list of parts. It is a
//! tiling when [`Dissection::validate`] succeeds: every part lies inside the
//! target, no two parts share interior points, and the part areas add up to
//! the target area.

mod io;
mod similarity;
mod svg;
mod validate;

pub use io::{read_dissection, write_dissection, ParseError};
pub use similarity::{AspectReport, NotSimilar, Orientation};
pub use svg::to_svg;
pub use validate::Violation;

use thiserror::Error;

use crate::exactnum::{NumError, QuadExt};

/// Rectangle with lower-left corner `(x, y)`, width `w` and height `h`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rect {
    pub x: QuadExt,
    pub y: QuadExt,
    pub w: QuadExt,
    pub h: QuadExt,
}

impl Rect {
    pub fn new(x: impl Into<QuadExt>, y: impl Into<QuadExt>, w: impl Into<QuadExt>, h: impl Into<QuadExt>) -> Rect {
        Rect { x: x.into(), y: y.into(), w: w.into(), h: h.into() }
    }

    pub fn right(&self) -> QuadExt {
        &self.x + &self.w
    }

    pub fn top(&self) -> QuadExt {
        &self.y + &self.h
    }

    pub fn area(&self) -> QuadExt {
        &self.w * &self.h
    }

    /// Mirror in the diagonal `y = x`.
    pub fn transpose(&self) -> Rect {
        Rect { x: self.y.clone(), y: self.x.clone(), w: self.h.clone(), h: self.w.clone() }
    }

    /// Multiply `x` and `w` by `sx`, `y` and `h` by `sy`.
    pub fn scale(&self, sx: &QuadExt, sy: &QuadExt) -> Rect {
        Rect { x: &self.x * sx, y: &self.y * sy, w: &self.w * sx, h: &self.h * sy }
    }

    fn coords(&self) -> [&QuadExt; 4] {
        [&self.x, &self.y, &self.w, &self.h]
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DissectionError {
    #[error("a dissection needs at least one part")]
    NoParts,
    #[error("coordinates mix sqrt({0}) and sqrt({1})")]
    MixedRadicands(u64, u64),
    #[error(transparent)]
    Num(#[from] NumError),
}

/// Target rectangle plus its parts, all over one quadratic field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Dissection {
    target: Rect,
    parts: Vec<Rect>,
}

impl Dissection {
    /// Checks only the structural requirements (nonempty, single radicand);
    /// geometry is checked by [`Dissection::validate`].
    pub fn new(target: Rect, parts: Vec<Rect>) -> Result<Dissection, DissectionError> {
        if parts.is_empty() {
            return Err(DissectionError::NoParts);
        }
        let mut radicand: Option<u64> = None;
        for r in std::iter::once(&target).chain(&parts) {
            for c in r.coords() {
                if c.is_rational() {
                    continue;
                }
                match radicand {
                    Some(d) if d != c.radicand() => {
                        return Err(DissectionError::MixedRadicands(d, c.radicand()));
                    }
                    _ => radicand = Some(c.radicand()),
                }
            }
        }
        Ok(Dissection { target, parts })
    }

    /// The unit square `[0,1]²` with the given parts.
    pub fn unit_square(parts: Vec<Rect>) -> Result<Dissection, DissectionError> {
        Dissection::new(Rect::new(0, 0, 1, 1), parts)
    }

    pub fn target(&self) -> &Rect {
        &self.target
    }

    pub fn parts(&self) -> &[Rect] {
        &self.parts
    }

    /// Radicand of the irrational coordinates, if any.
    pub fn radicand(&self) -> Option<u64> {
        std::iter::once(&self.target)
            .chain(&self.parts)
            .flat_map(Rect::coords)
            .find(|c| !c.is_rational())
            .map(QuadExt::radicand)
    }

    pub fn transpose(&self) -> Dissection {
        Dissection {
            target: self.target.transpose(),
            parts: self.parts.iter().map(Rect::transpose).collect(),
        }
    }

    /// Scales horizontally by `sx` and vertically by `sy`.
    pub fn scale(&self, sx: &QuadExt, sy: &QuadExt) -> Result<Dissection, DissectionError> {
        for s in [sx, sy] {
            if let (Some(d), false) = (self.radicand(), s.is_rational()) {
                if d != s.radicand() {
                    return Err(DissectionError::MixedRadicands(d, s.radicand()));
                }
            }
        }
        Dissection::new(
            self.target.scale(sx, sy),
            self.parts.iter().map(|p| p.scale(sx, sy)).collect(),
        )
    }
}
