#![allow(dead_code)]

use matchgap::generate::{self, shuffle};
use matchgap::{Edge, EdgeSet, Graph, Vertex};
use rand::RngCore;
use rand_chacha::ChaCha8Rng;

pub fn graph(n: usize, edges: &[(usize, usize)]) -> Graph {
    Graph::new(n, edges.iter().copied()).unwrap()
}

pub fn path(n: usize) -> Graph {
    Graph::new(n, (1..n).map(|i| (i - 1, i))).unwrap()
}

pub fn cycle(n: usize) -> Graph {
    Graph::new(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
}

pub fn complete(n: usize) -> Graph {
    Graph::new(n, (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b)))).unwrap()
}

pub fn star(leaves: usize) -> Graph {
    Graph::new(leaves + 1, (1..=leaves).map(|i| (0, i))).unwrap()
}

/// Triangle v=0, w=1, z=2 with the tail z-a-b (a=3, b=4).
pub fn triangle_tail() -> Graph {
    graph(5, &[(0, 1), (0, 2), (1, 2), (2, 3), (3, 4)])
}

/// Triangle 0,1,3 with pendants 4 at 0 and 2 at 1.
pub fn bull() -> Graph {
    graph(5, &[(0, 1), (0, 3), (0, 4), (1, 2), (1, 3)])
}

pub fn k33() -> Graph {
    Graph::new(6, (0..3).flat_map(|a| (3..6).map(move |b| (a, b)))).unwrap()
}

pub fn prism() -> Graph {
    graph(6, &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)])
}

pub fn cube() -> Graph {
    Graph::new(8, (0..8usize).flat_map(|v| (0..3).map(move |b| (v, v ^ (1 << b)))).filter(|&(a, b)| a < b))
        .unwrap()
}

/// Generalized Petersen graph GP(n, k).
pub fn generalized_petersen(n: usize, k: usize) -> Graph {
    let mut edges = Vec::new();
    for i in 0..n {
        edges.push((i, (i + 1) % n));
        edges.push((i, n + i));
        edges.push((n + i, n + (i + k) % n));
    }
    Graph::new(2 * n, edges).unwrap()
}

pub fn petersen() -> Graph {
    generalized_petersen(5, 2)
}

pub fn mobius_kantor() -> Graph {
    generalized_petersen(8, 3)
}

/// Every labeled graph on `n` vertices, indexed by subsets of the pairs of K_n.
pub fn all_labeled(n: usize) -> impl Iterator<Item = Graph> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect();
    let m = pairs.len();
    (0u64..1 << m).map(move |mask| {
        Graph::new(n, pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &e)| e)).unwrap()
    })
}

pub fn connected_labeled_up_to(max_n: usize) -> Vec<Graph> {
    (1..=max_n)
        .flat_map(all_labeled)
        .filter(Graph::is_connected)
        .collect()
}

/// Random connected graph: a random recursive tree plus each remaining
/// pair with probability `p`.
pub fn random_connected(n: usize, p: f64, rng: &mut ChaCha8Rng) -> Graph {
    let mut edges = Vec::new();
    for v in 1..n {
        let parent = (rng.next_u64() % v as u64) as usize;
        edges.push((parent, v));
    }
    let extra = generate::gnp_with(n, p, rng).unwrap();
    edges.extend(extra.edges().iter().map(|e| (e.0, e.1)));
    let mut perm: Vec<usize> = (0..n).collect();
    shuffle(&mut perm, rng);
    Graph::new(n, edges).unwrap().relabel(&perm)
}

/// Corpus of random connected graphs with `n` drawn from `sizes`, cycling
/// through a spread of densities.
pub fn random_connected_corpus(count: usize, sizes: std::ops::RangeInclusive<usize>, seed: u64) -> Vec<Graph> {
    let mut rng = generate::rng(seed);
    let densities = [0.0, 0.05, 0.1, 0.2, 0.35];
    let span = (sizes.end() - sizes.start() + 1) as u64;
    (0..count)
        .map(|i| {
            let n = sizes.start() + (rng.next_u64() % span) as usize;
            random_connected(n, densities[i % densities.len()], &mut rng)
        })
        .collect()
}

pub fn random_permutation(n: usize, rng: &mut ChaCha8Rng) -> Vec<usize> {
    let mut perm: Vec<usize> = (0..n).collect();
    shuffle(&mut perm, rng);
    perm
}

/// ν by exhaustive branching on the lowest vertex: leave it exposed or
/// match it with each free neighbour.
pub fn brute_nu(g: &Graph) -> usize {
    fn go(g: &Graph, used: &mut Vec<bool>, from: usize) -> usize {
        let Some(v) = (from..g.vertex_count()).find(|&v| !used[v]) else {
            return 0;
        };
        used[v] = true;
        let mut best = go(g, used, v + 1);
        for &w in g.neighbors(v) {
            if !used[w] {
                used[w] = true;
                best = best.max(1 + go(g, used, v + 1));
                used[w] = false;
            }
        }
        used[v] = false;
        best
    }
    go(g, &mut vec![false; g.vertex_count()], 0)
}

/// All matchings of size exactly `k`, by brute-force edge subsets of size `k`.
pub fn brute_matchings_of_size(g: &Graph, k: usize) -> Vec<EdgeSet> {
    fn go(edges: &[Edge], start: usize, k: usize, used: &mut Vec<bool>, cur: &mut Vec<Edge>, out: &mut Vec<EdgeSet>) {
        if cur.len() == k {
            out.push(cur.iter().copied().collect());
            return;
        }
        for i in start..edges.len() {
            let e = edges[i];
            if !used[e.0] && !used[e.1] {
                used[e.0] = true;
                used[e.1] = true;
                cur.push(e);
                go(edges, i + 1, k, used, cur, out);
                cur.pop();
                used[e.0] = false;
                used[e.1] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(g.edges(), 0, k, &mut vec![false; g.vertex_count()], &mut Vec::new(), &mut out);
    out
}

/// (L, l) straight from the definition with brute-force primitives only.
pub fn brute_gap(g: &Graph) -> (usize, usize) {
    let nu = brute_nu(g);
    let residuals: Vec<usize> = brute_matchings_of_size(g, nu)
        .iter()
        .map(|f| {
            let rest: Vec<(usize, usize)> = g.edges().iter().filter(|e| !f.contains(e)).map(|e| (e.0, e.1)).collect();
            brute_nu(&Graph::new(g.vertex_count(), rest).unwrap())
        })
        .collect();
    (*residuals.iter().max().unwrap(), *residuals.iter().min().unwrap())
}

/// Random matching: edges in shuffled order, kept greedily, each kept
/// candidate skipped with probability 1/2.
pub fn random_matching(g: &Graph, rng: &mut ChaCha8Rng) -> EdgeSet {
    let mut edges: Vec<Edge> = g.edges().to_vec();
    shuffle(&mut edges, rng);
    let mut used = vec![false; g.vertex_count()];
    let mut out = Vec::new();
    for e in edges {
        if !used[e.0] && !used[e.1] && rng.next_u64().is_multiple_of(2) {
            used[e.0] = true;
            used[e.1] = true;
            out.push(e);
        }
    }
    out.into_iter().collect()
}

/// Searches for `|X|` vertex-disjoint 2-paths by trying every pair of
/// distinct neighbours as endpoints for each vertex of `X` in turn.
pub fn brute_two_path_packing(h: &Graph, x: &[Vertex]) -> bool {
    fn go(h: &Graph, x: &[Vertex], used: &mut Vec<bool>) -> bool {
        let Some((&c, rest)) = x.split_first() else {
            return true;
        };
        let nb = h.neighbors(c);
        for i in 0..nb.len() {
            for j in i + 1..nb.len() {
                let (a, b) = (nb[i], nb[j]);
                if used[a] || used[b] {
                    continue;
                }
                used[a] = true;
                used[b] = true;
                if go(h, rest, used) {
                    return true;
                }
                used[a] = false;
                used[b] = false;
            }
        }
        false
    }
    let mut used = vec![false; h.vertex_count()];
    for &c in x {
        used[c] = true;
    }
    go(h, x, &mut used)
}

/// Any set of |X| vertex-disjoint 2-paths in a bipartite graph, with no
/// restriction on where the centres sit. Exhaustive over path choices.
pub fn brute_any_two_paths(h: &Graph, count: usize) -> bool {
    fn go(h: &Graph, count: usize, used: &mut Vec<bool>, from: usize) -> bool {
        if count == 0 {
            return true;
        }
        for c in from..h.vertex_count() {
            if used[c] {
                continue;
            }
            let nb = h.neighbors(c);
            for i in 0..nb.len() {
                for j in i + 1..nb.len() {
                    let (a, b) = (nb[i], nb[j]);
                    if used[a] || used[b] {
                        continue;
                    }
                    used[a] = true;
                    used[b] = true;
                    used[c] = true;
                    let ok = go(h, count - 1, used, c + 1);
                    used[a] = false;
                    used[b] = false;
                    used[c] = false;
                    if ok {
                        return true;
                    }
                }
            }
        }
        false
    }
    go(h, count, &mut vec![false; h.vertex_count()], 0)
}

/// Random bipartite graph on sides `0..nx` and `nx..nx+ny`.
pub fn random_bipartite(nx: usize, ny: usize, p: f64, rng: &mut ChaCha8Rng) -> Graph {
    let mut edges = Vec::new();
    for a in 0..nx {
        for b in nx..nx + ny {
            if (rng.next_u64() >> 11) as f64 / (1u64 << 53) as f64 <= p {
                edges.push((a, b));
            }
        }
    }
    Graph::new(nx + ny, edges).unwrap()
}

/// 2-factors found by a degree-constrained edge search, independent of
/// any matching code.
pub fn brute_two_factors(g: &Graph) -> Vec<EdgeSet> {
    fn go(g: &Graph, i: usize, deg: &mut Vec<usize>, cur: &mut Vec<Edge>, out: &mut Vec<EdgeSet>) {
        let edges = g.edges();
        if i == edges.len() {
            if deg.iter().all(|&d| d == 2) {
                out.push(cur.iter().copied().collect());
            }
            return;
        }
        let e = edges[i];
        // once every edge at a vertex has been decided, its degree is final
        let closes = |v: usize| g.neighbors(v).iter().all(|&w| Edge::new(v, w) <= e);
        if deg[e.0] < 2 && deg[e.1] < 2 {
            deg[e.0] += 1;
            deg[e.1] += 1;
            cur.push(e);
            if !(closes(e.0) && deg[e.0] != 2 || closes(e.1) && deg[e.1] != 2) {
                go(g, i + 1, deg, cur, out);
            }
            cur.pop();
            deg[e.0] -= 1;
            deg[e.1] -= 1;
        }
        if !(closes(e.0) && deg[e.0] != 2 || closes(e.1) && deg[e.1] != 2) {
            go(g, i + 1, deg, cur, out);
        }
    }
    let mut out = Vec::new();
    go(g, 0, &mut vec![0; g.vertex_count()], &mut Vec::new(), &mut out);
    out
}

/// Cycle lengths by walking the 2-regular subgraph directly.
pub fn walk_cycles(n: usize, factor: &EdgeSet) -> Vec<usize> {
    let mut adj = vec![Vec::new(); n];
    for e in factor.iter() {
        adj[e.0].push(e.1);
        adj[e.1].push(e.0);
    }
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for s in 0..n {
        if seen[s] {
            continue;
        }
        let (mut prev, mut cur, mut len) = (usize::MAX, s, 0);
        loop {
            seen[cur] = true;
            len += 1;
            let next = if adj[cur][0] != prev { adj[cur][0] } else { adj[cur][1] };
            prev = cur;
            cur = next;
            if cur == s {
                break;
            }
        }
        out.push(len);
    }
    out
}

/// 3-edge-colorability through the 2-factor characterization: a cubic
/// graph is class 1 iff some perfect matching leaves only even cycles.
pub fn brute_colorable(g: &Graph) -> bool {
    brute_two_factors(g)
        .iter()
        .any(|f| walk_cycles(g.vertex_count(), f).iter().all(|l| l % 2 == 0))
}

pub mod strategy {
    use matchgap::Graph;
    use proptest::prelude::*;

    /// Graphs on `1..=max_n` vertices, each pair present with probability
    /// `density` per mille.
    pub fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
        (1..=max_n, 0u32..=1000).prop_flat_map(|(n, density)| {
            let pairs = n * (n - 1) / 2;
            proptest::collection::vec(0u32..1000, pairs).prop_map(move |draws| {
                let mut edges = Vec::new();
                let mut k = 0;
                for a in 0..n {
                    for b in a + 1..n {
                        if draws[k] < density {
                            edges.push((a, b));
                        }
                        k += 1;
                    }
                }
                Graph::new(n, edges).unwrap()
            })
        })
    }

    pub fn graph_with_perm(max_n: usize) -> impl Strategy<Value = (Graph, Vec<usize>)> {
        graph(max_n).prop_flat_map(|g| {
            let n = g.vertex_count();
            (Just(g), Just((0..n).collect::<Vec<_>>()).prop_shuffle())
        })
    }
}
