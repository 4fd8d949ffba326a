//! Independent oracles and generators shared by the integration tests.
#![allow(dead_code)]

use nalgebra::DMatrix;
use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use rand::Rng;

use simrect::circuit::{Edge, Network};
use simrect::exactnum::{QuadExt, Rational};
use simrect::polystab::IntPoly;

pub const RADICANDS: [u64; 3] = [2, 3, 5];

pub fn q(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

pub fn quad(a: Rational, b: Rational, d: u64) -> QuadExt {
    QuadExt::new(a, b, d)
}

/// Sign of `a + b√d` from a 100-digit integer square root bracket.
pub fn sign_oracle(x: &QuadExt) -> i32 {
    let (a, b, d) = (x.a(), x.b(), x.radicand());
    if b.is_zero() {
        return signum(a);
    }
    let scale = BigInt::from(10).pow(100);
    let s = (BigInt::from(d) * &scale * &scale).sqrt();
    // √d ∈ [lo, hi]
    let lo = Rational::new(s.clone(), scale.clone());
    let hi = Rational::new(s + 1, scale);
    let (e1, e2) = (a + b * &lo, a + b * &hi);
    let (min, max) = if e1 < e2 { (e1, e2) } else { (e2, e1) };
    assert!(min.is_positive() || max.is_negative(), "bracket too wide for {x}");
    if min.is_positive() {
        1
    } else {
        -1
    }
}

fn signum(r: &Rational) -> i32 {
    if r.is_positive() {
        1
    } else if r.is_negative() {
        -1
    } else {
        0
    }
}

/// Real parts of the roots, from companion-matrix eigenvalues.
pub fn root_real_parts(p: &IntPoly) -> Vec<f64> {
    let c: Vec<f64> = p.coeffs().iter().map(|v| v.to_string().parse().unwrap()).collect();
    let n = c.len() - 1;
    let lead = c[n];
    let mut m = DMatrix::<f64>::zeros(n, n);
    for i in 1..n {
        m[(i, i - 1)] = 1.0;
    }
    for i in 0..n {
        m[(i, n - 1)] = -c[i] / lead;
    }
    m.complex_eigenvalues().iter().map(|z| z.re).collect()
}

/// `Some(all roots have positive real part)`, or `None` if some root is too
/// close to the imaginary axis to call.
pub fn numeric_positive_real_parts(p: &IntPoly) -> Option<bool> {
    let re = root_real_parts(p);
    if re.iter().any(|r| r.abs() < 1e-9) {
        return None;
    }
    Some(re.iter().all(|&r| r > 0.0))
}

pub fn random_int_poly(rng: &mut impl Rng, max_degree: usize) -> IntPoly {
    let degree = rng.gen_range(1..=max_degree);
    let mut c: Vec<i64> = (0..degree).map(|_| rng.gen_range(-20..=20)).collect();
    let lead = loop {
        let v = rng.gen_range(-20..=20);
        if v != 0 {
            break v;
        }
    };
    c.push(lead);
    IntPoly::from_i64s(&c)
}

/// An irrational quadratic number of small height: `a ∈ ½ℤ` with
/// `|a| ≤ 6`, `b = ±k/l` with `k ≤ 3`, `l ≤ 2`.
pub fn random_quadratic(rng: &mut impl Rng, radicands: &[u64]) -> QuadExt {
    let d = radicands[rng.gen_range(0..radicands.len())];
    let a = q(rng.gen_range(-12..=12), 2);
    let sign = if rng.gen_bool(0.5) { 1 } else { -1 };
    let b = q(sign * rng.gen_range(1..=3), rng.gen_range(1..=2));
    quad(a, b, d)
}

/// A quadratic number with both conjugates positive.
pub fn random_admissible(rng: &mut impl Rng, radicands: &[u64]) -> QuadExt {
    loop {
        let x = random_quadratic(rng, radicands);
        if x.is_positive() && x.conjugate().is_positive() {
            return x;
        }
    }
}

/// A positive element of `Q(√d)` whose conjugate is positive too.
pub fn positive_pair(rng: &mut impl Rng, d: u64) -> QuadExt {
    let b = q(rng.gen_range(-4..=4), rng.gen_range(1..=4));
    let root_ceiling = (d as f64).sqrt().ceil() as i64;
    let a = b.abs() * Rational::from_integer(root_ceiling.into()) + q(rng.gen_range(1..=6), rng.gen_range(1..=6));
    quad(a, b, d)
}

/// Series-parallel expression over resistances.
#[derive(Clone, Debug)]
pub enum Sp {
    Leaf(QuadExt),
    Series(Box<Sp>, Box<Sp>),
    Parallel(Box<Sp>, Box<Sp>),
}

impl Sp {
    pub fn random(rng: &mut impl Rng, d: u64, depth: u32) -> Sp {
        if depth == 0 || rng.gen_bool(0.3) {
            return Sp::Leaf(positive_pair(rng, d));
        }
        let l = Box::new(Sp::random(rng, d, depth - 1));
        let r = Box::new(Sp::random(rng, d, depth - 1));
        if rng.gen_bool(0.5) {
            Sp::Series(l, r)
        } else {
            Sp::Parallel(l, r)
        }
    }

    /// Resistance by the series and parallel formulas alone.
    pub fn value(&self) -> QuadExt {
        match self {
            Sp::Leaf(r) => r.clone(),
            Sp::Series(a, b) => &a.value() + &b.value(),
            Sp::Parallel(a, b) => {
                let (x, y) = (a.value(), b.value());
                &(&x * &y) / &(&x + &y)
            }
        }
    }

    pub fn conjugate(&self) -> Sp {
        match self {
            Sp::Leaf(r) => Sp::Leaf(r.conjugate()),
            Sp::Series(a, b) => Sp::Series(Box::new(a.conjugate()), Box::new(b.conjugate())),
            Sp::Parallel(a, b) => Sp::Parallel(Box::new(a.conjugate()), Box::new(b.conjugate())),
        }
    }

    fn wire(&self, from: usize, to: usize, nodes: &mut usize, edges: &mut Vec<Edge<QuadExt>>) {
        match self {
            Sp::Leaf(r) => edges.push(Edge { from, to, resistance: r.clone(), part: None }),
            Sp::Series(a, b) => {
                let mid = *nodes;
                *nodes += 1;
                a.wire(from, mid, nodes, edges);
                b.wire(mid, to, nodes, edges);
            }
            Sp::Parallel(a, b) => {
                a.wire(from, to, nodes, edges);
                b.wire(from, to, nodes, edges);
            }
        }
    }

    /// The network between source 0 and sink 1.
    pub fn network(&self) -> Network<QuadExt> {
        let mut nodes = 2;
        let mut edges = Vec::new();
        self.wire(0, 1, &mut nodes, &mut edges);
        Network::new(nodes, edges, 0, 1).unwrap()
    }
}
