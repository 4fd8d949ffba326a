use std::fmt;

use super::{CircuitError, Topology};
use crate::dissection::Dissection;
use crate::exactnum::{Field, QuadExt};

/// A resistor. Current is counted positive from `from` to `to`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Edge<F> {
    pub from: usize,
    pub to: usize,
    pub resistance: F,
    /// Index of the dissection part this resistor stands for.
    pub part: Option<usize>,
}

/// Resistor network with a battery of voltage 1 between `source` and `sink`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Network<F> {
    node_count: usize,
    edges: Vec<Edge<F>>,
    source: usize,
    sink: usize,
}

impl<F: Field> Network<F> {
    /// Checks node indices, `source != sink`, connectivity, and (for ordered
    /// fields) positive resistances.
    pub fn new(
        node_count: usize,
        edges: Vec<Edge<F>>,
        source: usize,
        sink: usize,
    ) -> Result<Network<F>, CircuitError> {
        if source == sink {
            return Err(CircuitError::SourceIsSink);
        }
        for node in [source, sink] {
            if node >= node_count {
                return Err(CircuitError::TerminalOutOfRange { node, nodes: node_count });
            }
        }
        for (i, e) in edges.iter().enumerate() {
            for node in [e.from, e.to] {
                if node >= node_count {
                    return Err(CircuitError::NodeOutOfRange { edge: i, node, nodes: node_count });
                }
            }
            if e.resistance.positivity() == Some(false) {
                return Err(CircuitError::NonPositiveResistance { edge: i, value: e.resistance.to_string() });
            }
        }
        // union-find over undirected edges
        let mut parent: Vec<usize> = (0..node_count).collect();
        fn root(parent: &mut [usize], mut i: usize) -> usize {
            while parent[i] != i {
                parent[i] = parent[parent[i]];
                i = parent[i];
            }
            i
        }
        for e in &edges {
            let (a, b) = (root(&mut parent, e.from), root(&mut parent, e.to));
            parent[a] = b;
        }
        let src = root(&mut parent, source);
        if let Some(n) = (0..node_count).find(|&n| root(&mut parent, n) != src) {
            return Err(CircuitError::Disconnected(n));
        }
        Ok(Network { node_count, edges, source, sink })
    }

    pub fn node_count(&self) -> usize {
        self.node_count
    }

    pub fn edges(&self) -> &[Edge<F>] {
        &self.edges
    }

    pub fn source(&self) -> usize {
        self.source
    }

    pub fn sink(&self) -> usize {
        self.sink
    }

    /// Same topology with new resistances; `f` gets the edge index.
    pub fn map_resistances<G: Field>(
        &self,
        mut f: impl FnMut(usize, &Edge<F>) -> G,
    ) -> Result<Network<G>, CircuitError> {
        let edges = self
            .edges
            .iter()
            .enumerate()
            .map(|(i, e)| Edge { from: e.from, to: e.to, resistance: f(i, e), part: e.part })
            .collect();
        Network::new(self.node_count, edges, self.source, self.sink)
    }
}

/// Stable text dump: `nodes N source S sink T`, then `u v resistance` per edge.
impl<F: fmt::Display> fmt::Display for Network<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "nodes {} source {} sink {}", self.node_count, self.source, self.sink)?;
        for e in &self.edges {
            writeln!(f, "{} {} {}", e.from, e.to, e.resistance)?;
        }
        Ok(())
    }
}

/// Network of a valid dissection: one resistor `h/w` per part, from the
/// segment through its top edge to the segment through its bottom edge.
pub fn network_from_dissection(d: &Dissection) -> Result<Network<QuadExt>, CircuitError> {
    d.validate().map_err(CircuitError::Invalid)?;
    let topo = Topology::of(d);
    let edges = topo
        .edges
        .iter()
        .zip(d.parts())
        .enumerate()
        .map(|(i, (&(from, to), p))| Edge { from, to, resistance: &p.h / &p.w, part: Some(i) })
        .collect();
    Network::new(topo.node_count, edges, topo.source, topo.sink)
}

/// Replaces every resistance by its conjugate. Fails on the first edge
/// whose conjugate is not positive.
pub fn conjugate_network(n: &Network<QuadExt>) -> Result<Network<QuadExt>, CircuitError> {
    for (i, e) in n.edges().iter().enumerate() {
        let c = e.resistance.conjugate();
        if !c.is_positive() {
            return Err(CircuitError::NonPositiveConjugate { edge: i, value: c });
        }
    }
    n.map_resistances(|_, e| e.resistance.conjugate())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{parse_number, rational, Rational};

    fn edge<F>(from: usize, to: usize, r: F) -> Edge<F> {
        Edge { from, to, resistance: r, part: None }
    }

    #[test]
    fn structural_checks() {
        let one = rational(1, 1);
        assert_eq!(
            Network::new(2, vec![edge(0, 1, one.clone())], 0, 0),
            Err(CircuitError::SourceIsSink)
        );
        assert_eq!(
            Network::new(3, vec![edge(0, 1, one.clone())], 0, 1),
            Err(CircuitError::Disconnected(2))
        );
        assert!(matches!(
            Network::new(2, vec![edge(0, 1, rational(-1, 2))], 0, 1),
            Err(CircuitError::NonPositiveResistance { edge: 0, .. })
        ));
        assert!(matches!(
            Network::new(2, vec![edge(0, 5, one)], 0, 1),
            Err(CircuitError::NodeOutOfRange { edge: 0, node: 5, .. })
        ));
    }

    #[test]
    fn rational_network_is_fixed_by_conjugation() {
        let n = Network::new(
            2,
            vec![edge(0, 1, QuadExt::from(rational(3, 2))), edge(0, 1, QuadExt::from(2))],
            0,
            1,
        )
        .unwrap();
        assert_eq!(conjugate_network(&n).unwrap(), n);
    }

    #[test]
    fn squares_of_one_plus_root2() {
        let r = parse_number("1+1*sqrt(2)").unwrap();
        let r2 = &r * &r;
        let n = Network::new(2, vec![edge(0, 1, r2.clone()), edge(0, 1, r2)], 0, 1).unwrap();
        let c = conjugate_network(&n).unwrap();
        let expected = &r.conjugate() * &r.conjugate();
        assert!(c.edges().iter().all(|e| e.resistance == expected));

        let bad = Network::new(2, vec![edge(0, 1, r)], 0, 1).unwrap();
        match conjugate_network(&bad) {
            Err(CircuitError::NonPositiveConjugate { edge: 0, value }) => {
                assert_eq!(value, parse_number("1-1*sqrt(2)").unwrap())
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn dump_format() {
        let n: Network<Rational> =
            Network::new(3, vec![edge(0, 1, rational(1, 2)), edge(1, 2, rational(2, 1))], 0, 2).unwrap();
        assert_eq!(n.to_string(), "nodes 3 source 0 sink 2\n0 1 1/2\n1 2 2\n");
    }
}
