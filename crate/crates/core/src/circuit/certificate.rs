use super::{solve, CircuitError, Topology};
use crate::circuit::{Edge, Network};
use crate::dissection::Dissection;
use crate::exactnum::{QuadExt, RationalFunction};
use crate::polystab::{IntPoly, RatPoly};

/// A nonzero integer polynomial vanishing at the common ratio `R` of a
/// tiling of a square.
///
/// Stretching the picture vertically by `R` turns parts with `h/w = R` into
/// resistors `R²` and parts with `h/w = 1/R` into resistors 1, and the
/// stretched network has resistance `R`. Solving it with a formal
/// resistance `t` in place of `R²` gives `ρ(t) = p(t)/q(t)` with rational
/// coefficients, so `R` is a root of `q(x²)·x − p(x²)`. The returned
/// polynomial is that one, scaled to integer coefficients with content 1
/// and positive leading coefficient.
pub fn certificate(d: &Dissection) -> Result<IntPoly, CircuitError> {
    d.validate().map_err(CircuitError::Invalid)?;
    let report = d.similarity().map_err(CircuitError::NotSimilar)?;
    let target = d.target();
    if target.w != target.h {
        return Err(CircuitError::NotSquare);
    }
    let ratio = report.ratio;
    let topo = Topology::of(d);
    let edges = topo
        .edges
        .iter()
        .zip(d.parts())
        .enumerate()
        .map(|(i, (&(from, to), p))| {
            let resistance = if &p.h / &p.w == ratio {
                RationalFunction::t()
            } else {
                <RationalFunction as num_traits::One>::one()
            };
            Edge { from, to, resistance, part: Some(i) }
        })
        .collect();
    let network = Network::new(topo.node_count, edges, topo.source, topo.sink)?;
    let rho = solve(&network)?.resistance;
    let p = rho.numerator().compose_square();
    let q = rho.denominator().compose_square();
    let poly = (&(&q * &RatPoly::x()) - &p).to_int_canonical();
    debug_assert!(!poly.is_zero());
    debug_assert!(poly.evaluate::<QuadExt>(&ratio).is_zero());
    Ok(poly)
}
