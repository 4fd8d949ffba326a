use std::fmt;

use num_traits::ToPrimitive;

use super::{Dissection, Rect};
use crate::exactnum::QuadExt;

/// First reason a [`Dissection`] fails to be a tiling.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    /// Zero or negative width/height; `part = None` means the target.
    NonPositiveSize { part: Option<usize> },
    OutsideTarget { part: usize },
    /// Two parts share interior points.
    Overlap { first: usize, second: usize },
    /// Parts are inside and disjoint but leave holes.
    AreaMismatch { parts: QuadExt, target: QuadExt },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::NonPositiveSize { part: None } => write!(f, "target has a nonpositive side"),
            Violation::NonPositiveSize { part: Some(i) } => write!(f, "part {i} has a nonpositive side"),
            Violation::OutsideTarget { part } => write!(f, "part {part} is not inside the target"),
            Violation::Overlap { first, second } => write!(f, "parts {first} and {second} overlap"),
            Violation::AreaMismatch { parts, target } => {
                write!(f, "parts cover area {parts} but the target has area {target}")
            }
        }
    }
}

fn lt(a: &QuadExt, b: &QuadExt) -> bool {
    (b - a).is_positive()
}

/// `a + b√d` in floating point, with `|a| + |b|√d` bounding the scale of
/// its rounding error.
fn rough(v: &QuadExt) -> (f64, f64) {
    let a = v.a().to_f64().unwrap_or(f64::INFINITY);
    let b = v.b().to_f64().unwrap_or(f64::INFINITY) * (v.radicand() as f64).sqrt();
    (a + b, a.abs() + b.abs())
}

/// Rectangle edges `[left, right, bottom, top]`, exact and approximate.
struct Bounds {
    exact: Vec<[QuadExt; 4]>,
    approx: Vec<[f64; 4]>,
    /// Bound on every approximation error; `None` if some edge does not fit
    /// in `f64`, in which case only exact comparisons are used.
    slack: Option<f64>,
}

impl Bounds {
    fn new(rects: &[&Rect]) -> Bounds {
        let mut magnitude = 1.0f64;
        let mut exact = Vec::with_capacity(rects.len());
        let mut approx = Vec::with_capacity(rects.len());
        for r in rects {
            let edges = [r.x.clone(), r.right(), r.y.clone(), r.top()];
            let mut a = [0.0; 4];
            for (slot, v) in a.iter_mut().zip(&edges) {
                let (value, scale) = rough(v);
                *slot = value;
                magnitude = magnitude.max(scale);
            }
            exact.push(edges);
            approx.push(a);
        }
        // rounding error is a few ulps of `magnitude`; keep a wide margin
        let slack = magnitude.is_finite().then_some(magnitude * 1e-9);
        Bounds { exact, approx, slack }
    }

    /// Edge `e` of rect `i` is strictly below edge `f` of rect `j`.
    fn lt(&self, (i, e): (usize, usize), (j, f): (usize, usize)) -> bool {
        if let Some(slack) = self.slack {
            let diff = self.approx[j][f] - self.approx[i][e];
            if diff > slack {
                return true;
            }
            if diff < -slack {
                return false;
            }
        }
        let (a, b) = (&self.exact[i][e], &self.exact[j][f]);
        a != b && lt(a, b)
    }

    fn le(&self, a: (usize, usize), b: (usize, usize)) -> bool {
        !self.lt(b, a)
    }

    fn overlap(&self, i: usize, j: usize) -> bool {
        self.lt((i, LEFT), (j, RIGHT))
            && self.lt((j, LEFT), (i, RIGHT))
            && self.lt((i, BOTTOM), (j, TOP))
            && self.lt((j, BOTTOM), (i, TOP))
    }
}

const LEFT: usize = 0;
const RIGHT: usize = 1;
const BOTTOM: usize = 2;
const TOP: usize = 3;

/// Lexicographically smallest overlapping pair among `1..` (index 0 of
/// `bounds` is the target).
///
/// A sweep over the approximate left edges keeps only rectangles whose
/// approximate right edge can still reach the current one; the pairwise
/// test itself is exact.
fn first_overlap(bounds: &Bounds) -> Option<(usize, usize)> {
    let n = bounds.exact.len();
    let mut order: Vec<usize> = (1..n).collect();
    match bounds.slack {
        Some(_) => order.sort_by(|&i, &j| bounds.approx[i][LEFT].total_cmp(&bounds.approx[j][LEFT])),
        None => order.sort_by(|&i, &j| {
            bounds.exact[i][LEFT].cmp_exact(&bounds.exact[j][LEFT]).expect("one field")
        }),
    }
    let mut active: Vec<usize> = Vec::new();
    let mut best: Option<(usize, usize)> = None;
    for &j in &order {
        active.retain(|&i| match bounds.slack {
            Some(slack) => bounds.approx[i][RIGHT] + slack > bounds.approx[j][LEFT],
            None => bounds.lt((j, LEFT), (i, RIGHT)),
        });
        for &i in &active {
            if bounds.overlap(i, j) {
                let pair = (i.min(j) - 1, i.max(j) - 1);
                best = Some(best.map_or(pair, |b| b.min(pair)));
            }
        }
        active.push(j);
    }
    best
}

/// Sum of the part areas. Runs of equal-sized parts, as produced by grid
/// constructions, are multiplied out once.
fn total_area(parts: &[Rect]) -> QuadExt {
    let mut total = QuadExt::from(0);
    let mut rest = parts;
    while let Some(first) = rest.first() {
        let run = rest.iter().take_while(|p| p.w == first.w && p.h == first.h).count();
        let count = QuadExt::from(i64::try_from(run).expect("part count fits in i64"));
        total = &total + &(&first.area() * &count);
        rest = &rest[run..];
    }
    total
}

impl Dissection {
    /// Checks that the parts tile the target exactly.
    ///
    /// Containment, pairwise interior disjointness and equal total area
    /// together are equivalent to an exact tiling.
    pub fn validate(&self) -> Result<(), Violation> {
        let target = self.target();
        if !target.w.is_positive() || !target.h.is_positive() {
            return Err(Violation::NonPositiveSize { part: None });
        }
        for (i, p) in self.parts().iter().enumerate() {
            let same_as_previous = i > 0 && {
                let q = &self.parts()[i - 1];
                p.w == q.w && p.h == q.h
            };
            if !same_as_previous && (!p.w.is_positive() || !p.h.is_positive()) {
                return Err(Violation::NonPositiveSize { part: Some(i) });
            }
        }
        let rects: Vec<&Rect> = std::iter::once(target).chain(self.parts()).collect();
        let bounds = Bounds::new(&rects);
        for i in 1..rects.len() {
            let inside = bounds.le((0, LEFT), (i, LEFT))
                && bounds.le((0, BOTTOM), (i, BOTTOM))
                && bounds.le((i, RIGHT), (0, RIGHT))
                && bounds.le((i, TOP), (0, TOP));
            if !inside {
                return Err(Violation::OutsideTarget { part: i - 1 });
            }
        }
        if let Some((first, second)) = first_overlap(&bounds) {
            return Err(Violation::Overlap { first, second });
        }
        let area = total_area(self.parts());
        if area != target.area() {
            return Err(Violation::AreaMismatch { parts: area, target: target.area() });
        }
        Ok(())
    }
}
