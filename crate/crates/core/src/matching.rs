//! Maximum matchings in general graphs.
//!
//! The search is Edmonds' blossom-shrinking alternating BFS. A matching is
//! maximum exactly when no augmenting path exists, so
//! [`find_augmenting_path`] doubles as the optimality certificate for
//! [`maximum_matching`].

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Edge, EdgeSet, Graph, Vertex};

const NONE: usize = usize::MAX;

/// Default vertex limit for exhaustive enumeration.
pub const DEFAULT_ORACLE_LIMIT: usize = 20;

/// A set of pairwise disjoint edges of a particular graph.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matching {
    edges: EdgeSet,
    mate: Vec<Option<Vertex>>,
}

impl Matching {
    pub fn empty(g: &Graph) -> Self {
        Matching {
            edges: EdgeSet::new(),
            mate: vec![None; g.vertex_count()],
        }
    }

    /// Validates `edges` against `g`.
    pub fn new(g: &Graph, edges: EdgeSet) -> Result<Self> {
        let mut mate = vec![None; g.vertex_count()];
        for e in edges.iter() {
            if !g.contains_edge(&e) {
                return Err(Error::UnknownEdge { u: e.0, v: e.1 });
            }
            for (a, b) in [(e.0, e.1), (e.1, e.0)] {
                if mate[a].is_some() {
                    return Err(Error::NotAMatching(format!("vertex {a} covered twice")));
                }
                mate[a] = Some(b);
            }
        }
        Ok(Matching { edges, mate })
    }

    fn from_mate(mate: Vec<Option<Vertex>>) -> Self {
        let edges = mate
            .iter()
            .enumerate()
            .filter_map(|(v, m)| m.filter(|&w| v < w).map(|w| Edge(v, w)))
            .collect();
        Matching { edges, mate }
    }

    pub fn edges(&self) -> &EdgeSet {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn mate(&self, v: Vertex) -> Option<Vertex> {
        self.mate[v]
    }

    pub fn covers(&self, v: Vertex) -> bool {
        self.mate[v].is_some()
    }

    pub fn into_edges(self) -> EdgeSet {
        self.edges
    }
}

/// An odd path whose even-numbered edges are matched and whose endpoints
/// are exposed. Stored as its vertex sequence.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AugmentingPath {
    pub vertices: Vec<Vertex>,
}

impl AugmentingPath {
    /// Number of edges on the path.
    pub fn len(&self) -> usize {
        self.vertices.len().saturating_sub(1)
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        self.vertices.windows(2).map(|w| Edge::new(w[0], w[1]))
    }

    /// Checks the defining properties against `g` and `m`.
    pub fn is_valid_for(&self, g: &Graph, m: &Matching) -> bool {
        let k = self.vertices.len();
        if k < 2 || !k.is_multiple_of(2) {
            return false;
        }
        let distinct: std::collections::BTreeSet<_> = self.vertices.iter().collect();
        if distinct.len() != k || self.vertices.iter().any(|&v| v >= g.vertex_count()) {
            return false;
        }
        if m.covers(self.vertices[0]) || m.covers(self.vertices[k - 1]) {
            return false;
        }
        self.edges()
            .enumerate()
            .all(|(i, e)| g.contains_edge(&e) && (i % 2 == 1) == m.edges().contains(&e))
    }

    /// `M △ P`, one edge larger than `m`.
    pub fn augment(&self, m: &Matching) -> Matching {
        let mut mate = m.mate.clone();
        for pair in self.vertices.chunks(2) {
            mate[pair[0]] = Some(pair[1]);
            mate[pair[1]] = Some(pair[0]);
        }
        Matching::from_mate(mate)
    }
}

/// True iff `edges` is a set of pairwise non-adjacent edges of `g`.
pub fn is_matching(g: &Graph, edges: &EdgeSet) -> bool {
    Matching::new(g, edges.clone()).is_ok()
}

// Scratch space for the alternating-tree search.
struct Blossom<'a> {
    adj: &'a [Vec<Vertex>],
    mate: Vec<usize>,
    parent: Vec<usize>,
    base: Vec<usize>,
    used: Vec<bool>,
    in_blossom: Vec<bool>,
    marks: Vec<bool>,
    queue: VecDeque<usize>,
}

impl<'a> Blossom<'a> {
    fn new(adj: &'a [Vec<Vertex>], mate: Vec<usize>) -> Self {
        let n = adj.len();
        Blossom {
            adj,
            mate,
            parent: vec![NONE; n],
            base: (0..n).collect(),
            used: vec![false; n],
            in_blossom: vec![false; n],
            marks: vec![false; n],
            queue: VecDeque::new(),
        }
    }

    fn lca(&mut self, mut a: usize, mut b: usize) -> usize {
        self.marks.fill(false);
        loop {
            a = self.base[a];
            self.marks[a] = true;
            if self.mate[a] == NONE {
                break;
            }
            a = self.parent[self.mate[a]];
        }
        loop {
            b = self.base[b];
            if self.marks[b] {
                return b;
            }
            b = self.parent[self.mate[b]];
        }
    }

    fn mark_path(&mut self, mut v: usize, b: usize, mut child: usize) {
        while self.base[v] != b {
            self.in_blossom[self.base[v]] = true;
            self.in_blossom[self.base[self.mate[v]]] = true;
            self.parent[v] = child;
            child = self.mate[v];
            v = self.parent[self.mate[v]];
        }
    }

    /// Grows an alternating tree from `root`; returns the exposed vertex
    /// reached, if any. The path is recovered through `parent`/`mate`.
    fn search(&mut self, root: usize) -> Option<usize> {
        let n = self.adj.len();
        self.used.fill(false);
        self.parent.fill(NONE);
        for (i, b) in self.base.iter_mut().enumerate() {
            *b = i;
        }
        self.used[root] = true;
        self.queue.clear();
        self.queue.push_back(root);
        while let Some(v) = self.queue.pop_front() {
            for i in 0..self.adj[v].len() {
                let to = self.adj[v][i];
                if self.base[v] == self.base[to] || self.mate[v] == to {
                    continue;
                }
                if to == root || (self.mate[to] != NONE && self.parent[self.mate[to]] != NONE) {
                    let cur = self.lca(v, to);
                    self.in_blossom.fill(false);
                    self.mark_path(v, cur, to);
                    self.mark_path(to, cur, v);
                    for u in 0..n {
                        if self.in_blossom[self.base[u]] {
                            self.base[u] = cur;
                            if !self.used[u] {
                                self.used[u] = true;
                                self.queue.push_back(u);
                            }
                        }
                    }
                } else if self.parent[to] == NONE {
                    self.parent[to] = v;
                    if self.mate[to] == NONE {
                        return Some(to);
                    }
                    let next = self.mate[to];
                    self.used[next] = true;
                    self.queue.push_back(next);
                }
            }
        }
        None
    }

    // Vertex sequence from the exposed end back to the root.
    fn path_to_root(&self, end: usize) -> Vec<Vertex> {
        let mut path = Vec::new();
        let mut v = end;
        loop {
            let pv = self.parent[v];
            path.push(v);
            path.push(pv);
            match self.mate[pv] {
                NONE => return path,
                next => v = next,
            }
        }
    }

    fn augment(&mut self, end: usize) {
        let mut v = end;
        while v != NONE {
            let pv = self.parent[v];
            let ppv = self.mate[pv];
            self.mate[v] = pv;
            self.mate[pv] = v;
            v = ppv;
        }
    }
}

fn mate_vec(m: &Matching) -> Vec<usize> {
    m.mate.iter().map(|x| x.unwrap_or(NONE)).collect()
}

/// Finds an `M`-augmenting path, trying exposed roots in increasing order.
/// `None` certifies that `m` is maximum.
pub fn find_augmenting_path(g: &Graph, m: &Matching) -> Option<AugmentingPath> {
    let adj: Vec<Vec<Vertex>> = (0..g.vertex_count()).map(|v| g.neighbors(v).to_vec()).collect();
    let mut b = Blossom::new(&adj, mate_vec(m));
    for root in 0..g.vertex_count() {
        if b.mate[root] != NONE {
            continue;
        }
        if let Some(end) = b.search(root) {
            let path = AugmentingPath {
                vertices: b.path_to_root(end),
            };
            debug_assert!(path.is_valid_for(g, m), "malformed augmenting path {path:?}");
            return Some(path);
        }
    }
    None
}

/// Maximum matching on an adjacency list, as a mate array.
pub(crate) fn max_matching_adj(adj: &[Vec<Vertex>]) -> Vec<usize> {
    let n = adj.len();
    let mut mate = vec![NONE; n];
    // greedy warm start
    for v in 0..n {
        if mate[v] == NONE {
            if let Some(&w) = adj[v].iter().find(|&&w| mate[w] == NONE) {
                mate[v] = w;
                mate[w] = v;
            }
        }
    }
    let mut b = Blossom::new(adj, mate);
    for root in 0..n {
        if b.mate[root] == NONE {
            if let Some(end) = b.search(root) {
                b.augment(end);
            }
        }
    }
    b.mate
}

/// A maximum matching of `g`.
pub fn maximum_matching(g: &Graph) -> Matching {
    let adj: Vec<Vec<Vertex>> = (0..g.vertex_count()).map(|v| g.neighbors(v).to_vec()).collect();
    let mate = max_matching_adj(&adj);
    Matching::from_mate(mate.into_iter().map(|w| (w != NONE).then_some(w)).collect())
}

/// The matching number ν(G).
pub fn nu(g: &Graph) -> usize {
    maximum_matching(g).len()
}

/// Knobs for [`enumerate_maximum_matchings`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EnumOptions {
    /// Refuse graphs with more vertices than this unless `force` is set.
    pub limit: usize,
    pub force: bool,
    /// Search nodes at edge position `>= exact_bound_depth` prune with an
    /// exact matching number of the residual graph; shallower nodes use
    /// twice a greedy maximal matching.
    pub exact_bound_depth: usize,
}

impl Default for EnumOptions {
    fn default() -> Self {
        EnumOptions {
            limit: DEFAULT_ORACLE_LIMIT,
            force: false,
            exact_bound_depth: 4,
        }
    }
}

impl EnumOptions {
    pub fn with_limit(limit: usize) -> Self {
        EnumOptions {
            limit,
            ..Self::default()
        }
    }

    pub fn forced() -> Self {
        EnumOptions {
            force: true,
            ..Self::default()
        }
    }

    pub fn check(&self, g: &Graph) -> Result<()> {
        if !self.force && g.vertex_count() > self.limit {
            Err(Error::SizeGuard {
                n: g.vertex_count(),
                limit: self.limit,
            })
        } else {
            Ok(())
        }
    }
}

#[derive(Clone, Copy, Debug)]
enum Phase {
    Enter,
    Include,
    Exclude,
    Done,
}

/// Lazy stream of all maximum matchings in lexicographic order of their
/// sorted edge lists.
pub struct MaximumMatchings<'g> {
    graph: &'g Graph,
    target: usize,
    exact_depth: usize,
    chosen: Vec<usize>,
    used: Vec<bool>,
    // (edge position, phase, whether this frame included its edge)
    stack: Vec<(usize, Phase, bool)>,
}

/// Enumerates every matching of size ν(G) exactly once.
pub fn enumerate_maximum_matchings<'g>(
    g: &'g Graph,
    opts: &EnumOptions,
) -> Result<MaximumMatchings<'g>> {
    opts.check(g)?;
    Ok(enumerate_with_target(g, nu(g), opts.exact_bound_depth))
}

/// Enumerates every matching of exactly `target` edges that cannot be
/// extended further; with `target = ν(G)` these are the maximum matchings.
pub(crate) fn enumerate_with_target(
    g: &Graph,
    target: usize,
    exact_depth: usize,
) -> MaximumMatchings<'_> {
    MaximumMatchings {
        graph: g,
        target,
        exact_depth,
        chosen: Vec::new(),
        used: vec![false; g.vertex_count()],
        stack: vec![(0, Phase::Enter, false)],
    }
}

impl MaximumMatchings<'_> {
    pub fn target(&self) -> usize {
        self.target
    }

    fn current(&self) -> Matching {
        let edges = self.graph.edges();
        let mut mate = vec![None; self.graph.vertex_count()];
        for &i in &self.chosen {
            let e = edges[i];
            mate[e.0] = Some(e.1);
            mate[e.1] = Some(e.0);
        }
        Matching {
            edges: self.chosen.iter().map(|&i| edges[i]).collect(),
            mate,
        }
    }

    // Upper bound on how many more edges fit using positions `pos..`.
    fn bound(&self, pos: usize) -> usize {
        let edges = &self.graph.edges()[pos..];
        if pos < self.exact_depth {
            let mut taken = self.used.clone();
            let mut greedy = 0;
            for e in edges {
                if !taken[e.0] && !taken[e.1] {
                    taken[e.0] = true;
                    taken[e.1] = true;
                    greedy += 1;
                }
            }
            return 2 * greedy;
        }
        let n = self.graph.vertex_count();
        let mut adj = vec![Vec::new(); n];
        for e in edges {
            if !self.used[e.0] && !self.used[e.1] {
                adj[e.0].push(e.1);
                adj[e.1].push(e.0);
            }
        }
        max_matching_adj(&adj).iter().filter(|&&w| w != NONE).count() / 2
    }
}

impl Iterator for MaximumMatchings<'_> {
    type Item = Matching;

    fn next(&mut self) -> Option<Matching> {
        let m = self.graph.edge_count();
        loop {
            let depth = self.stack.len();
            let (pos, phase, included) = *self.stack.last()?;
            match phase {
                Phase::Enter => {
                    if self.chosen.len() == self.target {
                        let out = self.current();
                        self.stack.pop();
                        return Some(out);
                    }
                    if pos == m || self.chosen.len() + self.bound(pos) < self.target {
                        self.stack.pop();
                        continue;
                    }
                    self.stack[depth - 1].1 = Phase::Include;
                }
                Phase::Include => {
                    self.stack[depth - 1].1 = Phase::Exclude;
                    let e = self.graph.edges()[pos];
                    if !self.used[e.0] && !self.used[e.1] {
                        self.used[e.0] = true;
                        self.used[e.1] = true;
                        self.chosen.push(pos);
                        self.stack[depth - 1].2 = true;
                        self.stack.push((pos + 1, Phase::Enter, false));
                    }
                }
                Phase::Exclude => {
                    self.stack[depth - 1].1 = Phase::Done;
                    if included {
                        let e = self.graph.edges()[pos];
                        self.used[e.0] = false;
                        self.used[e.1] = false;
                        self.chosen.pop();
                        self.stack[depth - 1].2 = false;
                    }
                    self.stack.push((pos + 1, Phase::Enter, false));
                }
                Phase::Done => {
                    self.stack.pop();
                }
            }
        }
    }
}
