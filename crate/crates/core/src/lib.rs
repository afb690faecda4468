//! Matching-removal gap analysis.
//!
//! For a graph `G` with matching number `ν(G)`, remove a maximum matching
//! `F` and look at `ν(G \ F)`. Over all choices of `F` this ranges from
//! `l(G)` up to `L(G)`, and always `L(G) <= 2 l(G)`. This crate computes
//! both exactly on small graphs, decides `L = 2l` in polynomial time
//! through a bipartite 2-path packing, and reproduces the triangle
//! inflation that ties `L = 3l/2` on bridgeless cubic graphs to
//! 3-edge-colorability.

pub mod characterize;
pub mod error;
pub mod flow;
pub mod gadget;
pub mod gap;
pub mod generate;
pub mod graph;
pub mod io;
pub mod matching;

pub use characterize::{check_l_eq_2l, v1_set, CharacterizationCertificate, V1Selection};
pub use error::{Error, Result};
pub use flow::{build_2path_network, max_flow, two_path_packing, FlowNetwork};
pub use gadget::{inflate, odd_cycle_stats, reduction_check, three_edge_colorable, Inflation, TwoFactorStats};
pub use gap::{gap_profile, GapProfile};
pub use graph::{Bipartition, Edge, EdgeSet, Graph, InducedSubgraph, Vertex, VertexSet};
pub use io::{parse_edgelist, write_edgelist, ParseError};
pub use matching::{
    enumerate_maximum_matchings, find_augmenting_path, is_matching, maximum_matching, nu,
    AugmentingPath, EnumOptions, Matching, MaximumMatchings,
};
