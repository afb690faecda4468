//! The source/sink network used to pack vertex-disjoint 2-paths with
//! centers on one side of a bipartite graph, and an integral max-flow.

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex, VertexSet};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "vertex", rename_all = "lowercase")]
pub enum Node {
    Source,
    Sink,
    X(Vertex),
    Y(Vertex),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Arc {
    pub from: usize,
    pub to: usize,
    pub capacity: u32,
}

/// Node 0 is the source, node 1 the sink, then `X` and `Y` in the order
/// given. Arcs: `s -> x` (capacity 2) for every `x`, then `x -> y`
/// (capacity 1) for every edge of the graph, then `y -> t` (capacity 1).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FlowNetwork {
    pub nodes: Vec<Node>,
    pub arcs: Vec<Arc>,
}

impl FlowNetwork {
    pub const SOURCE: usize = 0;
    pub const SINK: usize = 1;

    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }
}

fn check_bipartition(h: &Graph, x: &VertexSet, y: &VertexSet) -> Result<()> {
    let n = h.vertex_count();
    for v in x.iter().chain(y.iter()) {
        if v >= n {
            return Err(Error::IndexOutOfRange { vertex: v, n });
        }
    }
    if let Some(v) = x.iter().find(|&v| y.contains(v)) {
        return Err(Error::NotBipartition(format!("vertex {v} is on both sides")));
    }
    if x.len() + y.len() != n {
        return Err(Error::NotBipartition("sides do not cover every vertex".into()));
    }
    if let Some(e) = h.edges().iter().find(|e| x.contains(e.0) == x.contains(e.1)) {
        return Err(Error::NotBipartition(format!("edge ({}, {}) inside one side", e.0, e.1)));
    }
    Ok(())
}

pub fn build_2path_network(h: &Graph, x: &VertexSet, y: &VertexSet) -> Result<FlowNetwork> {
    check_bipartition(h, x, y)?;
    let mut nodes = vec![Node::Source, Node::Sink];
    let mut index = vec![usize::MAX; h.vertex_count()];
    for v in x.iter() {
        index[v] = nodes.len();
        nodes.push(Node::X(v));
    }
    for v in y.iter() {
        index[v] = nodes.len();
        nodes.push(Node::Y(v));
    }
    let mut arcs: Vec<Arc> = x
        .iter()
        .map(|v| Arc {
            from: FlowNetwork::SOURCE,
            to: index[v],
            capacity: 2,
        })
        .collect();
    for e in h.edges() {
        let (a, b) = if x.contains(e.0) { (e.0, e.1) } else { (e.1, e.0) };
        arcs.push(Arc {
            from: index[a],
            to: index[b],
            capacity: 1,
        });
    }
    arcs.extend(y.iter().map(|v| Arc {
        from: index[v],
        to: FlowNetwork::SINK,
        capacity: 1,
    }));
    Ok(FlowNetwork { nodes, arcs })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Flow {
    pub value: u32,
    /// Flow on each arc, parallel to [`FlowNetwork::arcs`].
    pub arc_flow: Vec<u32>,
}

/// Shortest-augmenting-path max flow (Edmonds–Karp) from node 0 to node 1.
pub fn max_flow(net: &FlowNetwork) -> Flow {
    let n = net.node_count();
    // residual arc 2i is arc i, 2i+1 its reverse
    let mut cap: Vec<u32> = Vec::with_capacity(net.arcs.len() * 2);
    let mut head = Vec::with_capacity(net.arcs.len() * 2);
    let mut out: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (i, a) in net.arcs.iter().enumerate() {
        cap.push(a.capacity);
        head.push(a.to);
        cap.push(0);
        head.push(a.from);
        out[a.from].push(2 * i);
        out[a.to].push(2 * i + 1);
    }
    let (s, t) = (FlowNetwork::SOURCE, FlowNetwork::SINK);
    let mut value = 0;
    if n < 2 {
        return Flow { value, arc_flow: vec![0; net.arcs.len()] };
    }
    loop {
        let mut via = vec![usize::MAX; n];
        let mut seen = vec![false; n];
        seen[s] = true;
        let mut queue = VecDeque::from([s]);
        while let Some(v) = queue.pop_front() {
            if v == t {
                break;
            }
            for &r in &out[v] {
                let w = head[r];
                if cap[r] > 0 && !seen[w] {
                    seen[w] = true;
                    via[w] = r;
                    queue.push_back(w);
                }
            }
        }
        if !seen[t] {
            break;
        }
        let mut push = u32::MAX;
        let mut v = t;
        while v != s {
            let r = via[v];
            push = push.min(cap[r]);
            v = head[r ^ 1];
        }
        let mut v = t;
        while v != s {
            let r = via[v];
            cap[r] -= push;
            cap[r ^ 1] += push;
            v = head[r ^ 1];
        }
        value += push;
    }
    let arc_flow = (0..net.arcs.len()).map(|i| cap[2 * i + 1]).collect();
    Flow { value, arc_flow }
}

/// `|X|` vertex-disjoint 2-paths `[y, x, y']` (one centered at each
/// `x`, `y < y'`), or `None` when the max flow falls short of `2|X|`.
pub fn two_path_packing(h: &Graph, x: &VertexSet, y: &VertexSet) -> Result<Option<Vec<[Vertex; 3]>>> {
    let net = build_2path_network(h, x, y)?;
    let flow = max_flow(&net);
    if flow.value as usize != 2 * x.len() {
        return Ok(None);
    }
    let mut ends: Vec<Vec<Vertex>> = vec![Vec::new(); net.node_count()];
    for (a, &f) in net.arcs.iter().zip(&flow.arc_flow) {
        if f > 0 {
            if let (Node::X(_), Node::Y(w)) = (net.nodes[a.from], net.nodes[a.to]) {
                ends[a.from].push(w);
            }
        }
    }
    let paths = net
        .nodes
        .iter()
        .enumerate()
        .filter_map(|(i, node)| match node {
            Node::X(c) => {
                let e = &ends[i];
                debug_assert_eq!(e.len(), 2);
                Some([e[0].min(e[1]), *c, e[0].max(e[1])])
            }
            _ => None,
        })
        .collect();
    Ok(Some(paths))
}
