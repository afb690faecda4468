//! Polynomial-time test for `L(G) = 2 l(G)`.
//!
//! The property is decided per connected component. Components on at
//! most two vertices always satisfy it. For larger ones, remove the set
//! `V1` of leaves plus one chosen degree-2 vertex from each triangle with
//! at least two degree-2 vertices; the remainder must be bipartite with
//! sides `(X, Y)` such that `|Y| = |V1|`, every `y` has exactly one
//! neighbor in `V1`, and there are `|X|` vertex-disjoint 2-paths.
//!
//! When the remainder is disconnected each piece may be oriented either
//! way. An orientation is usable if its `Y` side passes the neighbor test
//! and the piece has a full packing centered on its `X` side; a subset-sum
//! table over pieces then looks for a total `|Y|` equal to `|V1|`.

use serde::{Deserialize, Serialize};

use crate::flow::two_path_packing;
use crate::graph::{Bipartition, Graph, Vertex, VertexSet};

/// `V1(G)` together with how it was assembled.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct V1Selection {
    pub degree_one: VertexSet,
    /// Triangles with at least two degree-2 vertices.
    pub qualifying_triangles: Vec<[Vertex; 3]>,
    /// `chosen[i]` is the degree-2 vertex taken from `qualifying_triangles[i]`.
    pub chosen: Vec<Vertex>,
    pub v1: VertexSet,
}

impl V1Selection {
    /// Degree-2 vertices of each qualifying triangle.
    pub fn candidates(g: &Graph) -> Vec<([Vertex; 3], Vec<Vertex>)> {
        g.triangles()
            .into_iter()
            .filter_map(|t| {
                let deg2: Vec<Vertex> = t.iter().copied().filter(|&v| g.neighbors(v).len() == 2).collect();
                (deg2.len() >= 2).then_some((t, deg2))
            })
            .collect()
    }
}

/// `V1(G)` taking the smallest degree-2 vertex of each qualifying triangle.
pub fn v1_set(g: &Graph) -> V1Selection {
    v1_set_with(g, |_, candidates| candidates[0])
}

/// `V1(G)` with a caller-supplied choice per triangle. `pick` receives the
/// triangle and its degree-2 vertices and must return one of them.
pub fn v1_set_with<F>(g: &Graph, mut pick: F) -> V1Selection
where
    F: FnMut(&[Vertex; 3], &[Vertex]) -> Vertex,
{
    let degree_one: VertexSet = (0..g.vertex_count()).filter(|&v| g.neighbors(v).len() == 1).collect();
    let mut qualifying_triangles = Vec::new();
    let mut chosen = Vec::new();
    for (t, cands) in V1Selection::candidates(g) {
        let v = pick(&t, &cands);
        assert!(cands.contains(&v), "chosen vertex {v} is not a degree-2 vertex of {t:?}");
        qualifying_triangles.push(t);
        chosen.push(v);
    }
    let v1 = degree_one.iter().chain(chosen.iter().copied()).collect();
    V1Selection {
        degree_one,
        qualifying_triangles,
        chosen,
        v1,
    }
}

/// Which condition failed, with a witness in the labels of `G`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Refutation {
    pub condition: u8,
    pub reason: String,
    pub witness: Vec<Vertex>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComponentCertificate {
    pub vertices: VertexSet,
    pub verdict: bool,
    pub v1: VertexSet,
    pub x: VertexSet,
    pub y: VertexSet,
    pub packing: Vec<[Vertex; 3]>,
    pub refutation: Option<Refutation>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CharacterizationCertificate {
    pub verdict: bool,
    pub v1: V1Selection,
    /// Union of the per-component sides; only populated for components
    /// whose verdict is true.
    pub x: VertexSet,
    pub y: VertexSet,
    pub packing: Vec<[Vertex; 3]>,
    /// First failing component's reason, if any.
    pub refutation: Option<Refutation>,
    pub components: Vec<ComponentCertificate>,
}

/// Decides `L(G) = 2 l(G)` with the default `V1` choice.
pub fn check_l_eq_2l(g: &Graph) -> CharacterizationCertificate {
    check_l_eq_2l_with(g, v1_set(g))
}

/// Decides `L(G) = 2 l(G)` for a given `V1` selection of `g`.
pub fn check_l_eq_2l_with(g: &Graph, selection: V1Selection) -> CharacterizationCertificate {
    let components: Vec<ComponentCertificate> = g
        .connected_components()
        .into_iter()
        .map(|c| check_component(g, &selection.v1, c))
        .collect();
    let verdict = components.iter().all(|c| c.verdict);
    let refutation = components.iter().find_map(|c| c.refutation.clone());
    let ok = || components.iter().filter(|c| c.verdict);
    let x = ok().flat_map(|c| c.x.iter()).collect();
    let y = ok().flat_map(|c| c.y.iter()).collect();
    let mut packing: Vec<[Vertex; 3]> = ok().flat_map(|c| c.packing.iter().copied()).collect();
    packing.sort_unstable_by_key(|p| p[1]);
    CharacterizationCertificate {
        verdict,
        v1: selection,
        x,
        y,
        packing,
        refutation,
        components,
    }
}

// One usable way of orienting a piece, in G labels.
#[derive(Clone, Debug)]
struct Orientation {
    x: Vec<Vertex>,
    y: Vec<Vertex>,
    packing: Option<Vec<[Vertex; 3]>>,
    neighbor_test: bool,
}

fn check_component(g: &Graph, v1_all: &VertexSet, vertices: VertexSet) -> ComponentCertificate {
    let v1: VertexSet = vertices.iter().filter(|&v| v1_all.contains(v)).collect();
    let mut cert = ComponentCertificate {
        vertices,
        verdict: false,
        v1,
        x: VertexSet::new(),
        y: VertexSet::new(),
        packing: Vec::new(),
        refutation: None,
    };
    if cert.vertices.len() <= 2 {
        cert.verdict = true;
        cert.v1 = VertexSet::new();
        return cert;
    }

    // H = C \ V1, relabeled
    let drop: VertexSet = (0..g.vertex_count())
        .filter(|&v| !cert.vertices.contains(v) || cert.v1.contains(v))
        .collect();
    let h = g.delete_vertices(&drop).expect("vertices in range");
    let to_g = |v: Vertex| h.new_to_old[v];

    let pieces = match h.graph.bipartition() {
        Bipartition::OddCycle(cycle) => {
            cert.refutation = Some(Refutation {
                condition: 1,
                reason: "graph minus V1 has an odd cycle".into(),
                witness: cycle.into_iter().map(to_g).collect(),
            });
            return cert;
        }
        Bipartition::Sides(sides) => sides,
    };

    let v1_neighbors = |v: Vertex| g.neighbors(v).iter().filter(|&&w| cert.v1.contains(w)).count();

    let mut options: Vec<[Orientation; 2]> = Vec::with_capacity(pieces.len());
    for (a, b) in &pieces {
        let members: VertexSet = a.iter().chain(b.iter()).collect();
        let outside: VertexSet = (0..h.graph.vertex_count()).filter(|&v| !members.contains(v)).collect();
        let piece = h.graph.delete_vertices(&outside).expect("vertices in range");
        let local = |s: &VertexSet| -> VertexSet { s.iter().map(|v| piece.old_to_new[v].unwrap()).collect() };
        let (la, lb) = (local(a), local(b));
        let orient = |xs: &VertexSet, ys: &VertexSet, lx: &VertexSet, ly: &VertexSet| {
            let x: Vec<Vertex> = xs.iter().map(to_g).collect();
            let y: Vec<Vertex> = ys.iter().map(to_g).collect();
            let neighbor_test = y.iter().all(|&v| v1_neighbors(v) == 1);
            let packing = if neighbor_test {
                two_path_packing(&piece.graph, lx, ly)
                    .expect("piece sides form a bipartition")
                    .map(|paths| {
                        paths
                            .into_iter()
                            .map(|p| p.map(|v| to_g(piece.new_to_old[v])))
                            .collect()
                    })
            } else {
                None
            };
            Orientation {
                x,
                y,
                packing,
                neighbor_test,
            }
        };
        options.push([orient(a, b, &la, &lb), orient(b, a, &lb, &la)]);
    }

    let target = cert.v1.len();
    if let Some(choice) = choose(&options, target, |o| o.packing.is_some()) {
        for (opts, &k) in options.iter().zip(&choice) {
            let o = &opts[k];
            cert.x = cert.x.iter().chain(o.x.iter().copied()).collect();
            cert.y = cert.y.iter().chain(o.y.iter().copied()).collect();
            cert.packing.extend(o.packing.as_ref().unwrap().iter().copied());
        }
        cert.packing.sort_unstable_by_key(|p| p[1]);
        cert.verdict = true;
        return cert;
    }

    cert.refutation = Some(
        if let Some(opts) = options.iter().find(|o| !o[0].neighbor_test && !o[1].neighbor_test) {
            // both orientations put some vertex with a wrong V1 count into Y
            let bad = opts
                .iter()
                .flat_map(|o| o.y.iter().copied())
                .find(|&v| v1_neighbors(v) != 1)
                .unwrap();
            Refutation {
                condition: 2,
                reason: format!(
                    "vertex {bad} has {} neighbours in V1 on either side of its piece",
                    v1_neighbors(bad)
                ),
                witness: vec![bad],
            }
        } else if choose(&options, target, |o| o.neighbor_test).is_none() {
            Refutation {
                condition: 2,
                reason: format!("no admissible side choice gives |Y| = |V1| = {target}"),
                witness: cert.v1.as_slice().to_vec(),
            }
        } else {
            let centers = options
                .iter()
                .flat_map(|o| o.iter())
                .find(|o| o.neighbor_test && o.packing.is_none())
                .map(|o| o.x.clone())
                .unwrap_or_default();
            Refutation {
                condition: 3,
                reason: "no side choice with |Y| = |V1| admits |X| disjoint 2-paths".into(),
                witness: centers,
            }
        },
    );
    cert
}

/// Picks one orientation per piece, among those passing `usable`, so that
/// the `Y` sizes sum to `target`. Prefers orientation 0 when both work.
fn choose<F>(options: &[[Orientation; 2]], target: usize, usable: F) -> Option<Vec<usize>>
where
    F: Fn(&Orientation) -> bool,
{
    // reach[i][s]: orientation used for piece i-1 to first reach sum s
    let mut reach: Vec<Vec<Option<usize>>> = vec![vec![None; target + 1]; options.len() + 1];
    let mut current = vec![false; target + 1];
    current[0] = true;
    for (i, opts) in options.iter().enumerate() {
        let mut next = vec![false; target + 1];
        for s in (0..=target).filter(|&s| current[s]) {
            for (k, o) in opts.iter().enumerate() {
                let t = s + o.y.len();
                if usable(o) && t <= target && !next[t] {
                    next[t] = true;
                    reach[i + 1][t] = Some(k);
                }
            }
        }
        current = next;
    }
    if !current[target] {
        return None;
    }
    let mut choice = vec![0; options.len()];
    let mut s = target;
    for i in (0..options.len()).rev() {
        let k = reach[i + 1][s].expect("reachable sum has a predecessor");
        choice[i] = k;
        s -= options[i][k].y.len();
    }
    Some(choice)
}
