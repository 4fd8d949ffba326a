use super::{network_from_dissection, CircuitError, Network};
use crate::dissection::Dissection;
use crate::exactnum::{Field, QuadExt};

/// Node potentials and edge currents of a network driven at voltage 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Solution<F> {
    pub potentials: Vec<F>,
    /// Current through each edge, positive from `from` to `to`.
    pub currents: Vec<F>,
    /// Current leaving the source through the network.
    pub battery_current: F,
    /// `1 / battery_current`.
    pub resistance: F,
}

impl<F: Field> Solution<F> {
    /// Re-checks Ohm's law on every edge, current conservation at every
    /// inner node, the pinned potentials and `resistance · battery_current = 1`.
    pub fn satisfies_kirchhoff(&self, n: &Network<F>) -> bool {
        if self.potentials.len() != n.node_count() || self.currents.len() != n.edges().len() {
            return false;
        }
        if !self.potentials[n.source()].is_one() || !self.potentials[n.sink()].is_zero() {
            return false;
        }
        let ohm = n.edges().iter().zip(&self.currents).all(|(e, i)| {
            self.potentials[e.from].clone() - self.potentials[e.to].clone() == i.clone() * e.resistance.clone()
        });
        if !ohm {
            return false;
        }
        let mut net_out = vec![F::zero(); n.node_count()];
        for (e, i) in n.edges().iter().zip(&self.currents) {
            net_out[e.from] = net_out[e.from].clone() + i.clone();
            net_out[e.to] = net_out[e.to].clone() - i.clone();
        }
        let inner_ok = net_out
            .iter()
            .enumerate()
            .filter(|&(v, _)| v != n.source() && v != n.sink())
            .all(|(_, s)| s.is_zero());
        inner_ok
            && net_out[n.source()] == self.battery_current
            && net_out[n.sink()] == -self.battery_current.clone()
            && (self.resistance.clone() * self.battery_current.clone()).is_one()
    }
}

/// Solves the Kirchhoff system exactly.
///
/// Potentials are pinned to 1 at the source and 0 at the sink; the inner
/// potentials come from current conservation, solved by Gaussian
/// elimination with first-nonzero pivoting.
pub fn solve<F: Field>(n: &Network<F>) -> Result<Solution<F>, CircuitError> {
    let (source, sink) = (n.source(), n.sink());
    // unknown index per node, None for the pinned terminals
    let mut index = vec![None; n.node_count()];
    let mut unknowns = 0;
    for (v, slot) in index.iter_mut().enumerate() {
        if v != source && v != sink {
            *slot = Some(unknowns);
            unknowns += 1;
        }
    }
    let pinned = |v: usize| if v == source { F::one() } else { F::zero() };

    let mut a = vec![vec![F::zero(); unknowns]; unknowns];
    let mut b = vec![F::zero(); unknowns];
    for e in n.edges() {
        if e.from == e.to {
            continue;
        }
        let g = F::one() / e.resistance.clone();
        for (here, there) in [(e.from, e.to), (e.to, e.from)] {
            let Some(row) = index[here] else { continue };
            a[row][row] = a[row][row].clone() + g.clone();
            match index[there] {
                Some(col) => a[row][col] = a[row][col].clone() - g.clone(),
                None => b[row] = b[row].clone() + g.clone() * pinned(there),
            }
        }
    }
    let inner = gaussian_solve(a, b).ok_or(CircuitError::Singular)?;

    let potentials: Vec<F> = index
        .iter()
        .enumerate()
        .map(|(v, slot)| match slot {
            Some(k) => inner[*k].clone(),
            None => pinned(v),
        })
        .collect();
    let currents: Vec<F> = n
        .edges()
        .iter()
        .map(|e| (potentials[e.from].clone() - potentials[e.to].clone()) / e.resistance.clone())
        .collect();
    let mut battery_current = F::zero();
    for (e, i) in n.edges().iter().zip(&currents) {
        if e.from == source {
            battery_current = battery_current + i.clone();
        }
        if e.to == source {
            battery_current = battery_current - i.clone();
        }
    }
    if battery_current.is_zero() {
        return Err(CircuitError::Singular);
    }
    let resistance = F::one() / battery_current.clone();
    Ok(Solution { potentials, currents, battery_current, resistance })
}

fn gaussian_solve<F: Field>(mut a: Vec<Vec<F>>, mut b: Vec<F>) -> Option<Vec<F>> {
    let n = b.len();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, pivot);
        b.swap(col, pivot);
        for r in col + 1..n {
            if a[r][col].is_zero() {
                continue;
            }
            let factor = a[r][col].clone() / a[col][col].clone();
            for c in col..n {
                a[r][c] = a[r][c].clone() - factor.clone() * a[col][c].clone();
            }
            b[r] = b[r].clone() - factor * b[col].clone();
        }
    }
    let mut x = vec![F::zero(); n];
    for r in (0..n).rev() {
        let mut acc = b[r].clone();
        for c in r + 1..n {
            acc = acc - a[r][c].clone() * x[c].clone();
        }
        x[r] = acc / a[r][r].clone();
    }
    Some(x)
}

/// Resistance of the network of `d`; equals the target's `h/w`.
pub fn resistance_of_dissection(d: &Dissection) -> Result<QuadExt, CircuitError> {
    Ok(solve(&network_from_dissection(d)?)?.resistance)
}
