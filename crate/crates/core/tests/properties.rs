mod common;

use nalgebra::{DMatrix, DVector};
use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use common::*;
use simrect::circuit::{certificate, resistance_of_dissection, solve, Edge, Network};
use simrect::construct::{
    decide, find_cf, grid_tiling, two_block_tiling, ConstructError, DecideInput, Decision, Root, TwoBlockParams,
};
use simrect::dissection::{read_dissection, write_dissection, Dissection, Rect, Violation};
use simrect::exactnum::{format_number, parse_number, QuadExt, Rational, RationalFunction, Sign};
use simrect::polystab::{all_roots_positive_real_part, minimal_polynomial, IntPoly, RatPoly};

fn arb_rational() -> impl Strategy<Value = Rational> {
    (-60i64..=60, 1i64..=12).prop_map(|(n, d)| q(n, d))
}

fn arb_radicand() -> impl Strategy<Value = u64> {
    prop::sample::select(vec![2u64, 3, 5, 6, 7, 10, 11, 13])
}

fn arb_quad_in(d: u64) -> impl Strategy<Value = QuadExt> {
    (arb_rational(), arb_rational()).prop_map(move |(a, b)| quad(a, b, d))
}

fn arb_quad() -> impl Strategy<Value = QuadExt> {
    arb_radicand().prop_flat_map(arb_quad_in)
}

fn arb_triple() -> impl Strategy<Value = (QuadExt, QuadExt, QuadExt)> {
    arb_radicand().prop_flat_map(|d| (arb_quad_in(d), arb_quad_in(d), arb_quad_in(d)))
}

fn zero() -> QuadExt {
    QuadExt::from(0)
}

/// Recursive guillotine cuts of `r` at fifths of its sides.
fn guillotine(rng: &mut impl Rng, r: Rect, depth: u32, out: &mut Vec<Rect>) {
    if depth == 0 || rng.gen_bool(0.25) {
        out.push(r);
        return;
    }
    let t = QuadExt::from(q(rng.gen_range(1..=4), 5));
    let (a, b) = if rng.gen_bool(0.5) {
        let w1 = &r.w * &t;
        let w2 = &r.w - &w1;
        let x2 = &r.x + &w1;
        (Rect { x: r.x.clone(), y: r.y.clone(), w: w1, h: r.h.clone() }, Rect { x: x2, y: r.y, w: w2, h: r.h })
    } else {
        let h1 = &r.h * &t;
        let h2 = &r.h - &h1;
        let y2 = &r.y + &h1;
        (Rect { x: r.x.clone(), y: r.y.clone(), w: r.w.clone(), h: h1 }, Rect { x: r.x, y: y2, w: r.w, h: h2 })
    };
    guillotine(rng, a, depth - 1, out);
    guillotine(rng, b, depth - 1, out);
}

/// A valid (generally not similar) dissection of a `W × H` rectangle with
/// sides in `Q(√d)`.
fn random_dissection(seed: u64) -> Dissection {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let d = RADICANDS[rng.gen_range(0..RADICANDS.len())];
    let target = Rect { x: zero(), y: zero(), w: positive_pair(&mut rng, d), h: positive_pair(&mut rng, d) };
    let mut parts = Vec::new();
    guillotine(&mut rng, target.clone(), 5, &mut parts);
    Dissection::new(target, parts).unwrap()
}

/// Similar tilings of the unit square from the grid and two-block constructions.
fn random_similar(seed: u64) -> Dissection {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    if rng.gen_bool(0.3) {
        return grid_tiling(rng.gen_range(1..=5), rng.gen_range(1..=5)).unwrap();
    }
    loop {
        let [m, n, p, qq] = [0; 4].map(|_| rng.gen_range(1..=4u32));
        let root = if rng.gen_bool(0.5) { Root::Plus } else { Root::Minus };
        if let Ok((_, d)) = two_block_tiling(m, n, p, qq, root) {
            return d;
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn field_axioms((x, y, z) in arb_triple()) {
        prop_assert_eq!(&(&x + &y) + &z, &x + &(&y + &z));
        prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
        prop_assert_eq!(&x + &y, &y + &x);
        prop_assert_eq!(&x * &y, &y * &x);
        prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
        prop_assert_eq!(&x + &zero(), x.clone());
        prop_assert_eq!(&x * &QuadExt::from(1), x.clone());
        prop_assert_eq!(&x - &x, zero());
        if !x.is_zero() {
            prop_assert_eq!(&x * &x.recip().unwrap(), QuadExt::from(1));
            prop_assert_eq!(&(&y / &x) * &x, y.clone());
        } else {
            prop_assert!(x.recip().is_err());
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn conjugation_is_an_automorphism((x, y, _z) in arb_triple()) {
        prop_assert_eq!((&x + &y).conjugate(), &x.conjugate() + &y.conjugate());
        prop_assert_eq!((&x * &y).conjugate(), &x.conjugate() * &y.conjugate());
        prop_assert_eq!(x.conjugate().conjugate(), x.clone());
        prop_assert_eq!(QuadExt::from((&x * &x.conjugate()).to_rational().unwrap()), QuadExt::from(x.norm()));
        if !y.is_zero() {
            prop_assert_eq!((&x / &y).conjugate(), &x.conjugate() / &y.conjugate());
        }
    }

    #[test]
    fn sign_matches_decimal_oracle(x in arb_quad()) {
        let expected = sign_oracle(&x);
        let got = match x.sign() {
            Sign::Negative => -1,
            Sign::Zero => 0,
            Sign::Positive => 1,
        };
        prop_assert_eq!(got, expected);
    }

    #[test]
    fn order_is_consistent((x, y, z) in arb_triple()) {
        let xy = x.cmp_exact(&y).unwrap();
        prop_assert_eq!(xy, y.cmp_exact(&x).unwrap().reverse());
        prop_assert_eq!(xy as i32, sign_oracle(&(&x - &y)));
        // translation invariance
        prop_assert_eq!(xy, (&x + &z).cmp_exact(&(&y + &z)).unwrap());
    }

    #[test]
    fn number_text_round_trips(x in arb_quad()) {
        let text = format_number(&x);
        prop_assert_eq!(parse_number(&text).unwrap(), x.clone());
        prop_assert_eq!(x.to_string(), text);
    }

    #[test]
    fn minimal_polynomial_vanishes_at_both_conjugates(x in arb_quad()) {
        let p = minimal_polynomial(&x);
        prop_assert_eq!(p.evaluate(&x), zero());
        prop_assert_eq!(p.evaluate(&x.conjugate()), zero());
        prop_assert_eq!(p.degree(), Some(if x.is_rational() { 1 } else { 2 }));
        prop_assert!(p.content().is_one());
        prop_assert!(p.leading().unwrap().is_positive());
    }

    #[test]
    fn decide_is_symmetric_under_inversion(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let x = random_quadratic(&mut rng, &[2, 3, 5, 7]);
        // a tiling too large to build still means "possible"
        let possible = |v: &QuadExt| match decide(&DecideInput::Number(v.clone())) {
            Ok(d) => matches!(d, Decision::Possible(_)),
            Err(ConstructError::TooManyParts(_)) => true,
            Err(e) => panic!("{e}"),
        };
        prop_assert_eq!(possible(&x), possible(&x.recip().unwrap()));
        prop_assert_eq!(possible(&x), x.is_positive() && x.conjugate().is_positive());
    }
}

fn arb_ratpoly() -> impl Strategy<Value = RatPoly> {
    prop::collection::vec(-6i64..=6, 1..=4).prop_map(|c| RatPoly::new(c.into_iter().map(|v| q(v, 1)).collect()))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn rational_functions_are_normalized(p in arb_ratpoly(), d in arb_ratpoly(), k in arb_ratpoly(), t in -9i64..=9) {
        prop_assume!(!d.is_zero() && !k.is_zero());
        let f = RationalFunction::new(p.clone(), d.clone()).unwrap();
        // same value written with a common factor
        let g = RationalFunction::new(&p * &k, &d * &k).unwrap();
        prop_assert_eq!(&f, &g);
        prop_assert!(f.denominator().leading().unwrap().is_one());
        prop_assert_eq!(f.numerator().gcd(f.denominator()).degree(), Some(0));
        let x = q(t, 2);
        let den = d.evaluate(&x);
        if !den.is_zero() && !(&k.evaluate(&x)).is_zero() {
            prop_assert_eq!(f.evaluate(&x), Some(p.evaluate(&x) / den));
        }
        if !p.is_zero() {
            let inv = RationalFunction::new(d.clone(), p.clone()).unwrap();
            prop_assert!((f * inv).is_one());
        }
    }
}

/// Naive first overlapping pair with an independent sign oracle.
fn naive_overlap(parts: &[Rect]) -> Option<(usize, usize)> {
    let lt = |a: &QuadExt, b: &QuadExt| sign_oracle(&(b - a)) > 0;
    for i in 0..parts.len() {
        for j in i + 1..parts.len() {
            let (p, r) = (&parts[i], &parts[j]);
            if lt(&p.x, &(&r.x + &r.w)) && lt(&r.x, &(&p.x + &p.w)) && lt(&p.y, &(&r.y + &r.h)) && lt(&r.y, &(&p.y + &p.h)) {
                return Some((i, j));
            }
        }
    }
    None
}

fn arb_coord() -> impl Strategy<Value = QuadExt> {
    // i + j(√2 − 1), so touching and near-touching edges are common
    (0i64..=3, 0i64..=2).prop_map(|(i, j)| quad(q(i - j, 1), q(j, 1), 2))
}

fn arb_size() -> impl Strategy<Value = QuadExt> {
    arb_coord().prop_filter("positive", |v| v.is_positive())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(400))]

    #[test]
    fn overlap_check_matches_naive_loop(
        rects in prop::collection::vec((arb_coord(), arb_coord(), arb_size(), arb_size()), 1..8)
    ) {
        let parts: Vec<Rect> = rects.into_iter().map(|(x, y, w, h)| Rect { x, y, w, h }).collect();
        let d = Dissection::new(Rect::new(0, 0, 10, 10), parts.clone()).unwrap();
        match (d.validate(), naive_overlap(&parts)) {
            (Err(Violation::Overlap { first, second }), Some(pair)) => prop_assert_eq!((first, second), pair),
            (Err(Violation::AreaMismatch { .. }), None) => {}
            (got, expected) => prop_assert!(false, "validate {:?} vs naive {:?}", got, expected),
        }
    }
}

/// Independent float solve of the pinned Laplacian.
fn float_resistance(n: &Network<Rational>) -> f64 {
    let k = n.node_count();
    let mut lap = DMatrix::<f64>::zeros(k, k);
    for e in n.edges() {
        let g = 1.0 / e.resistance.to_f64().unwrap();
        lap[(e.from, e.from)] += g;
        lap[(e.to, e.to)] += g;
        lap[(e.from, e.to)] -= g;
        lap[(e.to, e.from)] -= g;
    }
    let mut a = lap.clone();
    let mut b = DVector::<f64>::zeros(k);
    for (v, pinned) in [(n.source(), 1.0), (n.sink(), 0.0)] {
        a.row_mut(v).fill(0.0);
        a[(v, v)] = 1.0;
        b[v] = pinned;
    }
    let phi = a.lu().solve(&b).unwrap();
    let current: f64 = (&lap * &phi)[n.source()];
    1.0 / current
}

fn random_network(seed: u64) -> Network<Rational> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let nodes = rng.gen_range(2..=7);
    let mut edges = Vec::new();
    let resistance = |rng: &mut ChaCha8Rng| q(rng.gen_range(1..=12), rng.gen_range(1..=6));
    for v in 1..nodes {
        let u = rng.gen_range(0..v);
        let r = resistance(&mut rng);
        edges.push(Edge { from: u, to: v, resistance: r, part: None });
    }
    for _ in 0..rng.gen_range(0..=6) {
        let (u, v) = (rng.gen_range(0..nodes), rng.gen_range(0..nodes));
        if u != v {
            let r = resistance(&mut rng);
            edges.push(Edge { from: u, to: v, resistance: r, part: None });
        }
    }
    let sink = rng.gen_range(1..nodes);
    Network::new(nodes, edges, 0, sink).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn solutions_obey_kirchhoff(seed in any::<u64>()) {
        let n = random_network(seed);
        let s = solve(&n).unwrap();
        // Ohm's law per edge
        for (e, i) in n.edges().iter().zip(&s.currents) {
            prop_assert_eq!(&s.potentials[e.from] - &s.potentials[e.to], i * &e.resistance);
        }
        // conservation at inner nodes
        let mut net = vec![Rational::zero(); n.node_count()];
        for (e, i) in n.edges().iter().zip(&s.currents) {
            net[e.from] += i;
            net[e.to] -= i;
        }
        for (v, flow) in net.iter().enumerate() {
            if v == n.source() {
                prop_assert_eq!(flow, &s.battery_current);
            } else if v == n.sink() {
                prop_assert_eq!(flow, &-s.battery_current.clone());
            } else {
                prop_assert!(flow.is_zero());
            }
        }
        prop_assert!(s.satisfies_kirchhoff(&n));
        let approx = float_resistance(&n);
        let exact = s.resistance.to_f64().unwrap();
        prop_assert!((approx - exact).abs() <= 1e-9 * exact.max(1.0), "{} vs {}", approx, exact);
    }

    #[test]
    fn resistance_is_the_target_ratio(seed in any::<u64>()) {
        let d = random_dissection(seed);
        prop_assert_eq!(d.validate(), Ok(()));
        let r = resistance_of_dissection(&d).unwrap();
        prop_assert_eq!(&r, &(&d.target().h / &d.target().w));
        let rt = resistance_of_dissection(&d.transpose()).unwrap();
        prop_assert_eq!(&r * &rt, QuadExt::from(1));
    }

    #[test]
    fn files_round_trip(seed in any::<u64>()) {
        let d = random_dissection(seed);
        let text = write_dissection(&d);
        let back = read_dissection(&text).unwrap();
        prop_assert_eq!(&back, &d);
        prop_assert_eq!(write_dissection(&back), text);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(60))]

    #[test]
    fn similarity_survives_scaling_and_transposing(seed in any::<u64>(), s in 1i64..=9, t in 1i64..=9) {
        let d = random_similar(seed);
        let ratio = d.similarity().unwrap().ratio;
        let k = QuadExt::from(q(s, t));
        let scaled = d.scale(&k, &k).unwrap();
        prop_assert_eq!(scaled.validate(), Ok(()));
        prop_assert_eq!(&scaled.similarity().unwrap().ratio, &ratio);
        prop_assert_eq!(&d.transpose().similarity().unwrap().ratio, &ratio);
    }

    #[test]
    fn certificates_vanish_at_the_ratio(seed in any::<u64>()) {
        let d = random_similar(seed);
        let ratio = d.similarity().unwrap().ratio;
        let c = certificate(&d).unwrap();
        prop_assert!(!c.is_zero());
        prop_assert_eq!(c.evaluate(&ratio), zero());
        prop_assert!(c.is_divisible_by(&minimal_polynomial(&ratio)));
    }

    #[test]
    fn part_counts(m in 1u32..=5, n in 1u32..=5, p in 1u32..=5, qq in 1u32..=5) {
        prop_assert_eq!(grid_tiling(m, n).unwrap().parts().len() as u64, u64::from(m * n));
        if let Ok((_, d)) = two_block_tiling(m, n, p, qq, Root::Plus) {
            let params = TwoBlockParams { m, n, p, q: qq, root: Root::Plus };
            prop_assert_eq!(d.parts().len() as u64, params.part_count());
            prop_assert_eq!(params.part_count(), u64::from(m * n + p * qq));
        }
    }

    #[test]
    fn expansions_reach_one(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let x = random_admissible(&mut rng, &[2, 3, 5]);
        prop_assert_eq!(find_cf(&x).unwrap().tower(&x), Some(QuadExt::from(1)));
    }
}

/// Coefficients of `Π (x − rᵢ) · Π (x² − 2αx + α² + β²)`.
fn from_roots(real: &[i64], complex: &[(i64, i64)]) -> IntPoly {
    let mut c = vec![BigInt::one()];
    let mut times = |f: &[i64]| {
        let mut out = vec![BigInt::zero(); c.len() + f.len() - 1];
        for (i, a) in c.iter().enumerate() {
            for (j, b) in f.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        c = out;
    };
    for &r in real {
        times(&[-r, 1]);
    }
    for &(a, b) in complex {
        times(&[a * a + b * b, -2 * a, 1]);
    }
    IntPoly::new(c)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn stability_test_matches_vieta(
        real in prop::collection::vec(-5i64..=5, 0..=3),
        complex in prop::collection::vec((-4i64..=4, 1i64..=4), 0..=2),
        scale in prop::sample::select(vec![-3i64, -1, 1, 2]),
    ) {
        prop_assume!(!real.is_empty() || !complex.is_empty());
        let p = from_roots(&real, &complex);
        let scaled = IntPoly::new(p.coeffs().iter().map(|c| c * scale).collect());
        let expected = real.iter().all(|&r| r > 0) && complex.iter().all(|&(a, _)| a > 0);
        prop_assert_eq!(all_roots_positive_real_part(&scaled).unwrap(), expected, "{}", scaled);
    }
}
