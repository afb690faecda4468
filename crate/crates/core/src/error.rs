use thiserror::Error;

use crate::graph::Vertex;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    IndexOutOfRange { vertex: Vertex, n: usize },
    #[error("self-loop at vertex {vertex}")]
    SelfLoop { vertex: Vertex },
    #[error("edge ({u}, {v}) is not in the graph")]
    UnknownEdge { u: Vertex, v: Vertex },
    #[error("not a matching: {0}")]
    NotAMatching(String),
    #[error("graph has {n} vertices, above the oracle limit of {limit} (use force to override)")]
    SizeGuard { n: usize, limit: usize },
    #[error("graph is not cubic (vertex {vertex} has degree {degree})")]
    NotCubic { vertex: Vertex, degree: usize },
    #[error("graph has a bridge ({u}, {v})")]
    HasBridge { u: Vertex, v: Vertex },
    #[error("(X, Y) is not a bipartition of the graph: {0}")]
    NotBipartition(String),
    #[error("not applicable: {0}")]
    NotApplicable(String),
    #[error("invariant violated: {0}")]
    InvariantViolation(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("gave up after {attempts} rejected samples")]
    GiveUp { attempts: usize },
}
