use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive};

use super::{check_part_count, ConstructError};
use crate::dissection::{Dissection, Rect};
use crate::exactnum::{QuadExt, Rational};
use crate::polystab::minimal_polynomial;

/// Which root of `npR² − mpR + mq = 0` to build.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Root {
    /// `(mp + √D) / 2np`
    Plus,
    /// `(mp − √D) / 2np`
    Minus,
}

/// Block sizes of a two-block tiling: `m` rows of `n` along, `p` rows of `q` across.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct TwoBlockParams {
    pub m: u32,
    pub n: u32,
    pub p: u32,
    pub q: u32,
    pub root: Root,
}

impl TwoBlockParams {
    pub fn part_count(&self) -> u64 {
        u64::from(self.m) * u64::from(self.n) + u64::from(self.p) * u64::from(self.q)
    }
}

/// Left: `m` rows of `n` rectangles `R/m × 1/m`. Right: `p` rows of `q`
/// rectangles `1/(pR) × 1/p`. The two blocks fill the unit square exactly
/// when `nR/m + q/(pR) = 1`, i.e. `npR² − mpR + mq = 0`.
///
/// Returns the chosen root `R` with the tiling. A zero discriminant gives the
/// double root for either choice of `root`.
pub fn two_block_tiling(
    m: u32,
    n: u32,
    p: u32,
    q: u32,
    root: Root,
) -> Result<(QuadExt, Dissection), ConstructError> {
    if [m, n, p, q].contains(&0) {
        return Err(ConstructError::ZeroParameter);
    }
    let params = TwoBlockParams { m, n, p, q, root };
    check_part_count(params.part_count())?;
    let big = |v: u32| BigInt::from(v);
    let mp = big(m) * big(p);
    let disc = &mp * &mp - BigInt::from(4) * big(n) * big(p) * big(m) * big(q);
    if disc.is_negative() {
        return Err(ConstructError::NegativeDiscriminant(disc));
    }
    let sqrt_disc = QuadExt::sqrt_of(&disc).expect("nonnegative discriminant fits");
    let mp = QuadExt::from(Rational::from_integer(mp));
    let numer = match root {
        Root::Plus => &mp + &sqrt_disc,
        Root::Minus => &mp - &sqrt_disc,
    };
    let r = &numer / &QuadExt::from(Rational::from_integer(BigInt::from(2) * big(n) * big(p)));

    let frac = |num: u32, den: u32| QuadExt::from(Rational::new(big(num), big(den)));
    let along_w = &r * &frac(1, m);
    let across_w = &frac(1, p) / &r;
    let mut parts = Vec::with_capacity(params.part_count() as usize);
    let along_xs: Vec<QuadExt> = (0..n).map(|col| &along_w * &QuadExt::from(i64::from(col))).collect();
    for row in 0..m {
        for x in &along_xs {
            parts.push(Rect { x: x.clone(), y: frac(row, m), w: along_w.clone(), h: frac(1, m) });
        }
    }
    let left = &along_w * &QuadExt::from(i64::from(n));
    let across_xs: Vec<QuadExt> =
        (0..q).map(|col| &left + &(&across_w * &QuadExt::from(i64::from(col)))).collect();
    for row in 0..p {
        for x in &across_xs {
            parts.push(Rect { x: x.clone(), y: frac(row, p), w: across_w.clone(), h: frac(1, p) });
        }
    }
    Ok((r, Dissection::unit_square(parts)?))
}

/// Two-block parameters for an irrational `x` with `x > 0` and `conj(x) > 0`.
///
/// With minimal polynomial `ax² + bx + c` (so `b < 0 < c`) and
/// `g = gcd(a, −b)`, take `m = −b/g`, `n = a/g`, `p = −b`, `q = c`; then
/// `np : mp : mq = a : −b : c`.
pub fn quadratic_parameters(x: &QuadExt) -> Result<TwoBlockParams, ConstructError> {
    if x.is_rational() {
        return Err(ConstructError::Rational(x.clone()));
    }
    for v in [x.clone(), x.conjugate()] {
        if !v.is_positive() {
            return Err(ConstructError::Obstruction { witness: v });
        }
    }
    let poly = minimal_polynomial(x);
    let [c, b, a] = poly.coeffs() else {
        unreachable!("irrational numbers have quadratic minimal polynomials")
    };
    let minus_b = -b;
    let g = a.gcd(&minus_b);
    let (m, n, p, q) = (&minus_b / &g, a / &g, minus_b.clone(), c.clone());
    let count = &m * &n + &p * &q;
    let too_many = || ConstructError::TooManyParts(count.to_u64().unwrap_or(u64::MAX));
    let small = |v: &BigInt| v.to_u32().ok_or_else(too_many);
    let params = TwoBlockParams {
        m: small(&m)?,
        n: small(&n)?,
        p: small(&p)?,
        q: small(&q)?,
        root: if x.b().is_positive() { Root::Plus } else { Root::Minus },
    };
    check_part_count(params.part_count())?;
    Ok(params)
}

/// Tiling of the unit square by rectangles of ratio `x` (or `1/x`), for an
/// irrational `x` whose conjugates are both positive.
pub fn quadratic_tiling(x: &QuadExt) -> Result<Dissection, ConstructError> {
    let TwoBlockParams { m, n, p, q, root } = quadratic_parameters(x)?;
    let (r, d) = two_block_tiling(m, n, p, q, root)?;
    debug_assert_eq!(&r, x);
    Ok(d)
}
