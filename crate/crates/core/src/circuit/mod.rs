//! Resistor networks of dissections.
//!
//! Every horizontal line of a tiling becomes a node and every part becomes a
//! resistor between the line through its top edge and the line through its
//! bottom edge, with resistance `h/w`. With a battery of voltage 1 across the
//! top and bottom of the target, the current through each part equals its
//! width over the target height, and the network's resistance equals the
//! target's `h/w`.
//!
//! [`solve`] works over any exact [`Field`](crate::exactnum::Field). Over the
//! rational-function field it yields the resistance as a function of a
//! formal resistance `t`, which is how [`certificate`] finds an integer
//! polynomial vanishing at the tiling's ratio.

mod certificate;
mod network;
mod solve;
mod topology;

pub use certificate::certificate;
pub use network::{conjugate_network, network_from_dissection, Edge, Network};
pub use solve::{resistance_of_dissection, solve, Solution};
pub use topology::Topology;

use thiserror::Error;

use crate::dissection::{NotSimilar, Violation};
use crate::exactnum::QuadExt;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CircuitError {
    #[error("source and sink are the same node")]
    SourceIsSink,
    #[error("terminal node {node} is out of range for {nodes} nodes")]
    TerminalOutOfRange { node: usize, nodes: usize },
    #[error("edge {edge} refers to node {node}, but the network has {nodes} nodes")]
    NodeOutOfRange { edge: usize, node: usize, nodes: usize },
    #[error("edge {edge} has nonpositive resistance {value}")]
    NonPositiveResistance { edge: usize, value: String },
    #[error("edge {edge} would get nonpositive resistance {value} after conjugation")]
    NonPositiveConjugate { edge: usize, value: QuadExt },
    #[error("node {0} is not connected to the source")]
    Disconnected(usize),
    #[error("singular Kirchhoff system")]
    Singular,
    #[error("not a tiling: {0}")]
    Invalid(Violation),
    #[error("parts are not similar: {0}")]
    NotSimilar(NotSimilar),
    #[error("the target is not a square")]
    NotSquare,
}
