use std::cmp::Ordering;

use crate::dissection::Dissection;
use crate::exactnum::QuadExt;

/// Node/edge structure of a dissection's network, without resistances.
///
/// Nodes are the maximal horizontal segments, numbered from the top of the
/// target downward and left to right within one height. Edge `i` belongs to
/// part `i` and runs from the node of its top edge to the node of its
/// bottom edge.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Topology {
    pub node_count: usize,
    /// `(top node, bottom node)` per part.
    pub edges: Vec<(usize, usize)>,
    pub source: usize,
    pub sink: usize,
}

struct Segment {
    x0: QuadExt,
    x1: QuadExt,
    node: usize,
}

fn cmp(a: &QuadExt, b: &QuadExt) -> Ordering {
    a.cmp_exact(b).expect("dissection coordinates share one field")
}

impl Topology {
    pub fn of(d: &Dissection) -> Topology {
        let t = d.target();
        let mut raw: Vec<(QuadExt, QuadExt, QuadExt)> = vec![
            (t.top(), t.x.clone(), t.right()),
            (t.y.clone(), t.x.clone(), t.right()),
        ];
        for p in d.parts() {
            raw.push((p.top(), p.x.clone(), p.right()));
            raw.push((p.y.clone(), p.x.clone(), p.right()));
        }
        // top to bottom, then left to right
        raw.sort_by(|a, b| cmp(&b.0, &a.0).then_with(|| cmp(&a.1, &b.1)));

        // merge overlapping or touching collinear segments
        let mut rows: Vec<(QuadExt, Vec<Segment>)> = Vec::new();
        let mut node_count = 0;
        for (y, x0, x1) in raw {
            if rows.last().is_none_or(|(ry, _)| *ry != y) {
                rows.push((y, Vec::new()));
            }
            let segs = &mut rows.last_mut().expect("just pushed").1;
            match segs.last_mut() {
                Some(s) if cmp(&x0, &s.x1) != Ordering::Greater => {
                    if cmp(&x1, &s.x1) == Ordering::Greater {
                        s.x1 = x1;
                    }
                }
                _ => {
                    segs.push(Segment { x0, x1, node: node_count });
                    node_count += 1;
                }
            }
        }

        let find = |y: &QuadExt, x: &QuadExt| -> usize {
            let (_, segs) = rows.iter().find(|(ry, _)| ry == y).expect("every edge was inserted");
            segs.iter()
                .find(|s| cmp(&s.x0, x) != Ordering::Greater && cmp(x, &s.x1) == Ordering::Less)
                .expect("segment containing the edge")
                .node
        };
        let edges = d.parts().iter().map(|p| (find(&p.top(), &p.x), find(&p.y, &p.x))).collect();
        Topology {
            node_count,
            edges,
            source: find(&t.top(), &t.x),
            sink: find(&t.y, &t.x),
        }
    }
}
