use std::fmt;

use super::{Dissection, Rect};
use crate::exactnum::QuadExt;

/// How a part sits relative to the common ratio.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Orientation {
    /// Wider than tall.
    Wide,
    /// Taller than wide.
    Tall,
    Square,
}

/// Common longer:shorter ratio of all parts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AspectReport {
    pub ratio: QuadExt,
    pub orientations: Vec<Orientation>,
}

/// Parts `first` and `second` have different longer:shorter ratios.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NotSimilar {
    pub first: usize,
    pub second: usize,
    pub first_ratio: QuadExt,
    pub second_ratio: QuadExt,
}

impl fmt::Display for NotSimilar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "part {} has ratio {} but part {} has ratio {}",
            self.first, self.first_ratio, self.second, self.second_ratio
        )
    }
}

/// Longer side over shorter side, and the orientation.
pub(crate) fn aspect(r: &Rect) -> (QuadExt, Orientation) {
    let diff = &r.w - &r.h;
    if diff.is_positive() {
        (&r.w / &r.h, Orientation::Wide)
    } else if diff.is_negative() {
        (&r.h / &r.w, Orientation::Tall)
    } else {
        (QuadExt::from(1), Orientation::Square)
    }
}

impl Dissection {
    /// The common ratio `R ≥ 1` of all parts, or the first pair that differs.
    ///
    /// Squares only match `R = 1`. Meaningful for dissections that validate.
    pub fn similarity(&self) -> Result<AspectReport, NotSimilar> {
        let parts = self.parts();
        let (ratio, first) = aspect(&parts[0]);
        let mut orientations = vec![first];
        for (i, pair) in parts.windows(2).enumerate() {
            // equal sizes repeat the previous aspect
            if pair[0].w == pair[1].w && pair[0].h == pair[1].h {
                orientations.push(orientations[i]);
                continue;
            }
            let (r, o) = aspect(&pair[1]);
            if r != ratio {
                return Err(NotSimilar { first: 0, second: i + 1, first_ratio: ratio, second_ratio: r });
            }
            orientations.push(o);
        }
        Ok(AspectReport { ratio, orientations })
    }
}
