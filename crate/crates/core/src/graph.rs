//! Simple undirected graphs on dense vertex ids `0..n`.

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type Vertex = usize;

/// An undirected edge stored with `u < v`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Edge(pub Vertex, pub Vertex);

impl Edge {
    /// Canonical edge between two distinct vertices.
    pub fn new(a: Vertex, b: Vertex) -> Self {
        if a < b {
            Edge(a, b)
        } else {
            Edge(b, a)
        }
    }

    pub fn touches(&self, v: Vertex) -> bool {
        self.0 == v || self.1 == v
    }

    pub fn other(&self, v: Vertex) -> Vertex {
        if self.0 == v {
            self.1
        } else {
            self.0
        }
    }

    pub fn shares_endpoint(&self, e: &Edge) -> bool {
        self.touches(e.0) || self.touches(e.1)
    }
}

impl From<(Vertex, Vertex)> for Edge {
    fn from((a, b): (Vertex, Vertex)) -> Self {
        Edge::new(a, b)
    }
}

/// Sorted, duplicate-free vertex list.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexSet(Vec<Vertex>);

impl VertexSet {
    pub fn new() -> Self {
        VertexSet(Vec::new())
    }

    pub fn as_slice(&self) -> &[Vertex] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn insert(&mut self, v: Vertex) -> bool {
        match self.0.binary_search(&v) {
            Ok(_) => false,
            Err(pos) => {
                self.0.insert(pos, v);
                true
            }
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.0.iter().copied()
    }

    pub fn into_vec(self) -> Vec<Vertex> {
        self.0
    }
}

impl FromIterator<Vertex> for VertexSet {
    fn from_iter<I: IntoIterator<Item = Vertex>>(iter: I) -> Self {
        let mut v: Vec<Vertex> = iter.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        VertexSet(v)
    }
}

impl<const N: usize> From<[Vertex; N]> for VertexSet {
    fn from(a: [Vertex; N]) -> Self {
        a.into_iter().collect()
    }
}

/// Sorted, duplicate-free list of canonical edges.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct EdgeSet(Vec<Edge>);

impl EdgeSet {
    pub fn new() -> Self {
        EdgeSet(Vec::new())
    }

    pub fn as_slice(&self) -> &[Edge] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, e: &Edge) -> bool {
        self.0.binary_search(e).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = Edge> + '_ {
        self.0.iter().copied()
    }

    /// Vertices covered by at least one edge, `V(E')`.
    pub fn covered(&self) -> VertexSet {
        self.0.iter().flat_map(|e| [e.0, e.1]).collect()
    }

    pub fn difference(&self, other: &EdgeSet) -> EdgeSet {
        EdgeSet(self.0.iter().filter(|e| !other.contains(e)).copied().collect())
    }

    pub fn symmetric_difference(&self, other: &EdgeSet) -> EdgeSet {
        self.0
            .iter()
            .filter(|e| !other.contains(e))
            .chain(other.0.iter().filter(|e| !self.contains(e)))
            .copied()
            .collect()
    }

    pub fn is_subset(&self, other: &EdgeSet) -> bool {
        self.0.iter().all(|e| other.contains(e))
    }

    pub fn into_vec(self) -> Vec<Edge> {
        self.0
    }
}

impl FromIterator<Edge> for EdgeSet {
    fn from_iter<I: IntoIterator<Item = Edge>>(iter: I) -> Self {
        let mut v: Vec<Edge> = iter.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        EdgeSet(v)
    }
}

/// Finite simple undirected graph. Immutable once built.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: Vec<Edge>,
    adj: Vec<Vec<Vertex>>,
}

/// Result of [`Graph::delete_vertices`]: the induced subgraph plus the
/// relabeling between old and new vertex ids.
#[derive(Clone, Debug)]
pub struct InducedSubgraph {
    pub graph: Graph,
    /// `new_to_old[i]` is the original id of new vertex `i`.
    pub new_to_old: Vec<Vertex>,
    /// `old_to_new[v]` is `None` for removed vertices.
    pub old_to_new: Vec<Option<Vertex>>,
}

/// Per-component two-coloring, or an odd cycle proving there is none.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Bipartition {
    Sides(Vec<(VertexSet, VertexSet)>),
    OddCycle(Vec<Vertex>),
}

impl Graph {
    /// Builds a graph, deduplicating edges. Loops and out-of-range
    /// endpoints are rejected.
    pub fn new<I, E>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = E>,
        E: Into<(Vertex, Vertex)>,
    {
        let mut list = Vec::new();
        for e in edges {
            let (a, b) = e.into();
            for x in [a, b] {
                if x >= n {
                    return Err(Error::IndexOutOfRange { vertex: x, n });
                }
            }
            if a == b {
                return Err(Error::SelfLoop { vertex: a });
            }
            list.push(Edge::new(a, b));
        }
        Ok(Self::from_canonical(n, list))
    }

    /// Empty graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Self::from_canonical(n, Vec::new())
    }

    // Edges must already be in range and loop-free.
    fn from_canonical(n: usize, mut edges: Vec<Edge>) -> Self {
        edges.sort_unstable();
        edges.dedup();
        let mut adj = vec![Vec::new(); n];
        for e in &edges {
            adj[e.0].push(e.1);
            adj[e.1].push(e.0);
        }
        for a in &mut adj {
            a.sort_unstable();
        }
        Graph { n, edges, adj }
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge_set(&self) -> EdgeSet {
        EdgeSet(self.edges.clone())
    }

    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v]
    }

    pub fn has_edge(&self, a: Vertex, b: Vertex) -> bool {
        a < self.n && b < self.n && self.adj[a].binary_search(&b).is_ok()
    }

    pub fn contains_edge(&self, e: &Edge) -> bool {
        self.has_edge(e.0, e.1)
    }

    pub fn degree(&self, v: Vertex) -> Result<usize> {
        self.check_vertex(v)?;
        Ok(self.adj[v].len())
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn is_regular(&self, d: usize) -> bool {
        self.adj.iter().all(|a| a.len() == d)
    }

    fn check_vertex(&self, v: Vertex) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::IndexOutOfRange { vertex: v, n: self.n })
        }
    }

    /// `G \ S`, relabeled compactly in increasing order of the surviving ids.
    pub fn delete_vertices(&self, removed: &VertexSet) -> Result<InducedSubgraph> {
        for v in removed.iter() {
            self.check_vertex(v)?;
        }
        let mut old_to_new = vec![None; self.n];
        let mut new_to_old = Vec::with_capacity(self.n - removed.len());
        for (v, slot) in old_to_new.iter_mut().enumerate() {
            if !removed.contains(v) {
                *slot = Some(new_to_old.len());
                new_to_old.push(v);
            }
        }
        let edges = self
            .edges
            .iter()
            .filter_map(|e| match (old_to_new[e.0], old_to_new[e.1]) {
                (Some(a), Some(b)) => Some(Edge(a, b)),
                _ => None,
            })
            .collect();
        Ok(InducedSubgraph {
            graph: Graph::from_canonical(new_to_old.len(), edges),
            new_to_old,
            old_to_new,
        })
    }

    /// `G \ F`: same vertices, every edge of `F` removed.
    pub fn delete_edges(&self, removed: &EdgeSet) -> Result<Graph> {
        if let Some(e) = removed.iter().find(|e| !self.contains_edge(e)) {
            return Err(Error::UnknownEdge { u: e.0, v: e.1 });
        }
        Ok(self.without_edges(removed))
    }

    // Like delete_edges but silently ignores edges that are absent.
    pub(crate) fn without_edges(&self, removed: &EdgeSet) -> Graph {
        let edges = self
            .edges
            .iter()
            .filter(|e| !removed.contains(e))
            .copied()
            .collect();
        Graph::from_canonical(self.n, edges)
    }

    /// Subgraph on the same vertex set with exactly the given edges.
    pub fn spanning_subgraph(&self, edges: &EdgeSet) -> Result<Graph> {
        if let Some(e) = edges.iter().find(|e| !self.contains_edge(e)) {
            return Err(Error::UnknownEdge { u: e.0, v: e.1 });
        }
        Ok(Graph::from_canonical(self.n, edges.0.clone()))
    }

    /// Applies a vertex permutation: vertex `v` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[Vertex]) -> Graph {
        assert_eq!(perm.len(), self.n, "permutation length");
        let edges = self.edges.iter().map(|e| Edge::new(perm[e.0], perm[e.1])).collect();
        Graph::from_canonical(self.n, edges)
    }

    /// Disjoint union; vertices of `other` are shifted by `self.vertex_count()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let off = self.n;
        let edges = self
            .edges
            .iter()
            .copied()
            .chain(other.edges.iter().map(|e| Edge(e.0 + off, e.1 + off)))
            .collect();
        Graph::from_canonical(self.n + other.n, edges)
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn connected_components(&self) -> Vec<VertexSet> {
        let mut comp = vec![usize::MAX; self.n];
        let mut out = Vec::new();
        for start in 0..self.n {
            if comp[start] != usize::MAX {
                continue;
            }
            let id = out.len();
            let mut members = vec![start];
            comp[start] = id;
            let mut i = 0;
            while i < members.len() {
                let v = members[i];
                i += 1;
                for &w in &self.adj[v] {
                    if comp[w] == usize::MAX {
                        comp[w] = id;
                        members.push(w);
                    }
                }
            }
            out.push(members.into_iter().collect());
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.connected_components().len() <= 1
    }

    /// BFS two-coloring per component. Within each component the side
    /// containing the smallest vertex comes first.
    pub fn bipartition(&self) -> Bipartition {
        let mut color: Vec<Option<bool>> = vec![None; self.n];
        let mut parent = vec![usize::MAX; self.n];
        let mut depth = vec![0usize; self.n];
        let mut sides = Vec::new();
        for start in 0..self.n {
            if color[start].is_some() {
                continue;
            }
            color[start] = Some(false);
            let (mut a, mut b) = (vec![start], Vec::new());
            let mut queue = VecDeque::from([start]);
            while let Some(v) = queue.pop_front() {
                let cv = color[v].unwrap();
                for &w in &self.adj[v] {
                    match color[w] {
                        None => {
                            color[w] = Some(!cv);
                            parent[w] = v;
                            depth[w] = depth[v] + 1;
                            if cv {
                                a.push(w);
                            } else {
                                b.push(w);
                            }
                            queue.push_back(w);
                        }
                        Some(cw) if cw == cv => {
                            return Bipartition::OddCycle(odd_cycle(&parent, &depth, v, w));
                        }
                        Some(_) => {}
                    }
                }
            }
            sides.push((a.into_iter().collect(), b.into_iter().collect()));
        }
        Bipartition::Sides(sides)
    }

    /// All triangles `(a, b, c)` with `a < b < c`, in lexicographic order.
    pub fn triangles(&self) -> Vec<[Vertex; 3]> {
        let mut out = Vec::new();
        for a in 0..self.n {
            for (i, &b) in self.adj[a].iter().enumerate() {
                if b <= a {
                    continue;
                }
                for &c in &self.adj[a][i + 1..] {
                    if self.has_edge(b, c) {
                        out.push([a, b, c]);
                    }
                }
            }
        }
        out
    }

    /// Edges whose removal disconnects their component (DFS low-link).
    pub fn bridges(&self) -> Vec<Edge> {
        let n = self.n;
        let mut disc = vec![usize::MAX; n];
        let mut low = vec![0usize; n];
        let mut timer = 0;
        let mut out = Vec::new();
        for root in 0..n {
            if disc[root] != usize::MAX {
                continue;
            }
            // (vertex, parent, next neighbor index)
            let mut stack = vec![(root, usize::MAX, 0usize)];
            disc[root] = timer;
            low[root] = timer;
            timer += 1;
            while let Some(&mut (v, p, ref mut idx)) = stack.last_mut() {
                if *idx < self.adj[v].len() {
                    let w = self.adj[v][*idx];
                    *idx += 1;
                    if w == p {
                        continue;
                    }
                    if disc[w] == usize::MAX {
                        disc[w] = timer;
                        low[w] = timer;
                        timer += 1;
                        stack.push((w, v, 0));
                    } else {
                        low[v] = low[v].min(disc[w]);
                    }
                } else {
                    stack.pop();
                    if p != usize::MAX {
                        low[p] = low[p].min(low[v]);
                        if low[v] > disc[p] {
                            out.push(Edge::new(p, v));
                        }
                    }
                }
            }
        }
        out.sort_unstable();
        out
    }

    pub fn is_bridgeless(&self) -> bool {
        self.bridges().is_empty()
    }
}

// Odd cycle through the BFS-tree paths of two same-colored adjacent vertices.
fn odd_cycle(parent: &[usize], depth: &[usize], v: Vertex, w: Vertex) -> Vec<Vertex> {
    let (mut a, mut b) = (v, w);
    let (mut left, mut right) = (vec![a], vec![b]);
    while depth[a] > depth[b] {
        a = parent[a];
        left.push(a);
    }
    while depth[b] > depth[a] {
        b = parent[b];
        right.push(b);
    }
    while a != b {
        a = parent[a];
        b = parent[b];
        left.push(a);
        right.push(b);
    }
    right.pop();
    left.extend(right.into_iter().rev());
    left
}
