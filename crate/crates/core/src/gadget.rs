//! Triangle inflation of cubic graphs, 2-factor census and 3-edge-coloring.
//!
//! In a cubic graph the 2-factors are exactly the complements of perfect
//! matchings, so the census runs through the matching enumerator. For an
//! inflation `G△` (bridgeless, so every maximum matching is perfect) the
//! census gives `L = (|V| - w) / 2` and `l = (|V| - W) / 2`, where `w` and
//! `W` are the fewest and most odd cycles in a 2-factor. `G` is
//! 3-edge-colorable exactly when `2L = 3l`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Edge, EdgeSet, Graph, Vertex};
use crate::matching::{enumerate_maximum_matchings, nu, EnumOptions};

/// Default vertex limit for the 2-factor census.
pub const DEFAULT_CENSUS_LIMIT: usize = 36;

/// Enumeration options for the census: limit 36, otherwise defaults.
pub fn census_options() -> EnumOptions {
    EnumOptions::with_limit(DEFAULT_CENSUS_LIMIT)
}

pub fn check_cubic(g: &Graph) -> Result<()> {
    match (0..g.vertex_count()).find(|&v| g.neighbors(v).len() != 3) {
        Some(v) => Err(Error::NotCubic {
            vertex: v,
            degree: g.neighbors(v).len(),
        }),
        None => Ok(()),
    }
}

#[derive(Clone, Debug)]
pub struct Inflation {
    pub base: Graph,
    pub inflated: Graph,
    /// Triangle replacing each base vertex; vertex `v` becomes `3v, 3v+1, 3v+2`.
    pub vertex_map: Vec<[Vertex; 3]>,
    /// Each base edge with the inflated edge that carries it.
    pub edge_map: Vec<(Edge, Edge)>,
}

/// Replaces each vertex of a cubic graph by a triangle. Base edge `(u, v)`
/// attaches at the triangle vertex of `u` indexed by `v`'s rank among
/// `u`'s sorted neighbors.
pub fn inflate(g: &Graph) -> Result<Inflation> {
    check_cubic(g)?;
    let port = |u: Vertex, v: Vertex| {
        3 * u + g.neighbors(u).binary_search(&v).expect("adjacent vertices")
    };
    let vertex_map: Vec<[Vertex; 3]> = (0..g.vertex_count()).map(|v| [3 * v, 3 * v + 1, 3 * v + 2]).collect();
    let edge_map: Vec<(Edge, Edge)> = g
        .edges()
        .iter()
        .map(|e| (*e, Edge::new(port(e.0, e.1), port(e.1, e.0))))
        .collect();
    let triangle_edges = vertex_map
        .iter()
        .flat_map(|t| [(t[0], t[1]), (t[0], t[2]), (t[1], t[2])]);
    let inflated = Graph::new(
        3 * g.vertex_count(),
        edge_map.iter().map(|(_, e)| (e.0, e.1)).chain(triangle_edges),
    )?;
    Ok(Inflation {
        base: g.clone(),
        inflated,
        vertex_map,
        edge_map,
    })
}

/// Every 2-factor of a cubic graph, as the complement of a perfect matching.
pub fn enumerate_2_factors<'g>(
    g: &'g Graph,
    opts: &EnumOptions,
) -> Result<impl Iterator<Item = EdgeSet> + 'g> {
    check_cubic(g)?;
    let matchings = enumerate_maximum_matchings(g, opts)?;
    let perfect = 2 * matchings.target() == g.vertex_count();
    let all = g.edge_set();
    Ok(matchings
        .take_while(move |_| perfect)
        .map(move |m| all.difference(m.edges())))
}

/// Lengths of the cycles of a 2-regular spanning subgraph.
pub fn cycle_lengths(n: usize, factor: &EdgeSet) -> Vec<usize> {
    let h = Graph::new(n, factor.iter().map(|e| (e.0, e.1))).expect("factor edges in range");
    h.connected_components().iter().map(|c| c.len()).collect()
}

pub fn is_two_factor(g: &Graph, factor: &EdgeSet) -> bool {
    factor.is_subset(&g.edge_set())
        && g.spanning_subgraph(factor).map(|h| h.is_regular(2)).unwrap_or(false)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TwoFactorStats {
    pub vertices: usize,
    pub count: usize,
    /// Fewest odd cycles over all 2-factors; `None` when there are none.
    pub w: Option<usize>,
    /// Most odd cycles over all 2-factors.
    #[serde(rename = "W")]
    pub w_max: Option<usize>,
    pub witness_min: Option<EdgeSet>,
    pub witness_max: Option<EdgeSet>,
}

pub fn odd_cycle_stats(g: &Graph, opts: &EnumOptions) -> Result<TwoFactorStats> {
    let n = g.vertex_count();
    let mut stats = TwoFactorStats {
        vertices: n,
        count: 0,
        w: None,
        w_max: None,
        witness_min: None,
        witness_max: None,
    };
    for factor in enumerate_2_factors(g, opts)? {
        let odd = cycle_lengths(n, &factor).into_iter().filter(|l| l % 2 == 1).count();
        stats.count += 1;
        if stats.w.is_none_or(|w| odd < w) {
            stats.w = Some(odd);
            stats.witness_min = Some(factor.clone());
        }
        if stats.w_max.is_none_or(|w| odd > w) {
            stats.w_max = Some(odd);
            stats.witness_max = Some(factor);
        }
    }
    Ok(stats)
}

/// Proper edge coloring with colors 0, 1, 2.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeColoring3 {
    pub colors: Vec<(Edge, u8)>,
}

impl EdgeColoring3 {
    pub fn is_proper_for(&self, g: &Graph) -> bool {
        let mut seen = vec![0u8; g.vertex_count()];
        if self.colors.len() != g.edge_count() {
            return false;
        }
        for &(e, c) in &self.colors {
            if c > 2 || !g.contains_edge(&e) {
                return false;
            }
            for v in [e.0, e.1] {
                if seen[v] & (1 << c) != 0 {
                    return false;
                }
                seen[v] |= 1 << c;
            }
        }
        true
    }

    /// Edges of one color class.
    pub fn class(&self, color: u8) -> EdgeSet {
        self.colors.iter().filter(|(_, c)| *c == color).map(|(e, _)| *e).collect()
    }
}

struct ColorSearch<'a> {
    incident: Vec<Vec<usize>>,
    edges: &'a [Edge],
}

impl ColorSearch<'_> {
    // domains: bitmask of colors still allowed per edge
    fn solve(&self, domains: &mut Vec<u8>, colors: &mut Vec<u8>) -> bool {
        let next = (0..domains.len())
            .filter(|&i| colors[i] == u8::MAX)
            .min_by_key(|&i| domains[i].count_ones());
        let Some(e) = next else {
            return true;
        };
        for c in 0..3u8 {
            if domains[e] & (1 << c) == 0 {
                continue;
            }
            let saved = domains.clone();
            colors[e] = c;
            let mut ok = true;
            let edge = self.edges[e];
            for v in [edge.0, edge.1] {
                for &f in &self.incident[v] {
                    if f != e && colors[f] == u8::MAX {
                        domains[f] &= !(1 << c);
                        if domains[f] == 0 {
                            ok = false;
                        }
                    }
                }
            }
            if ok && self.solve(domains, colors) {
                return true;
            }
            *domains = saved;
            colors[e] = u8::MAX;
        }
        false
    }
}

/// Backtracking with most-constrained-edge ordering and forward checking.
pub fn three_edge_colorable(g: &Graph) -> Result<Option<EdgeColoring3>> {
    check_cubic(g)?;
    let edges = g.edges();
    let mut incident = vec![Vec::new(); g.vertex_count()];
    for (i, e) in edges.iter().enumerate() {
        incident[e.0].push(i);
        incident[e.1].push(i);
    }
    let mut domains = vec![0b111u8; edges.len()];
    let mut colors = vec![u8::MAX; edges.len()];
    // the three edges at vertex 0 may be colored 0, 1, 2 without loss
    if let Some(star) = incident.first() {
        for (c, &e) in star.iter().enumerate() {
            colors[e] = c as u8;
            let edge = edges[e];
            for v in [edge.0, edge.1] {
                for &f in &incident[v] {
                    if f != e {
                        domains[f] &= !(1 << c);
                    }
                }
            }
        }
        let dead = (0..edges.len()).any(|i| colors[i] == u8::MAX && domains[i] == 0);
        if dead {
            return Ok(None);
        }
    }
    let search = ColorSearch { incident, edges };
    if search.solve(&mut domains, &mut colors) {
        Ok(Some(EdgeColoring3 {
            colors: edges.iter().copied().zip(colors).collect(),
        }))
    } else {
        Ok(None)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InflationGap {
    pub vertices: usize,
    pub w: usize,
    #[serde(rename = "W")]
    pub w_max: usize,
    #[serde(rename = "L")]
    pub l_max: usize,
    #[serde(rename = "l")]
    pub l_min: usize,
}

/// `L` and `l` of an inflation from its 2-factor census.
pub fn inflation_l_l(inf: &Inflation, opts: &EnumOptions) -> Result<InflationGap> {
    let g = &inf.inflated;
    let n = g.vertex_count();
    if 2 * nu(g) != n {
        return Err(Error::InvariantViolation(
            "inflated graph has no perfect matching".into(),
        ));
    }
    let stats = odd_cycle_stats(g, opts)?;
    let (Some(w), Some(w_max)) = (stats.w, stats.w_max) else {
        return Err(Error::InvariantViolation("2-factor census came back empty".into()));
    };
    if !(n - w).is_multiple_of(2) || !(n - w_max).is_multiple_of(2) {
        return Err(Error::InvariantViolation(format!(
            "odd-cycle counts {w}, {w_max} do not share the parity of {n}"
        )));
    }
    Ok(InflationGap {
        vertices: n,
        w,
        w_max,
        l_max: (n - w) / 2,
        l_min: (n - w_max) / 2,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReductionReport {
    pub base_vertices: usize,
    pub base_colorable: bool,
    pub inflated_colorable: bool,
    pub gap: InflationGap,
    /// `2L = 3l` for the inflation.
    pub ratio_three_halves: bool,
    /// `W <= |V(G△)| / 3`.
    pub odd_cycle_bound: bool,
    /// Both biconditionals hold and the bound is respected.
    pub consistent: bool,
}

/// Checks `G` 3-edge-colorable ⟺ `2L(G△) = 3l(G△)`, and `w(G△) = 0` ⟺
/// `G△` 3-edge-colorable, for a bridgeless cubic `G`.
pub fn reduction_check(g: &Graph, opts: &EnumOptions) -> Result<ReductionReport> {
    check_cubic(g)?;
    if let Some(b) = g.bridges().first() {
        return Err(Error::HasBridge { u: b.0, v: b.1 });
    }
    let inf = inflate(g)?;
    opts.check(&inf.inflated)?;
    let gap = inflation_l_l(&inf, opts)?;
    let base_colorable = three_edge_colorable(g)?.is_some();
    let inflated_colorable = three_edge_colorable(&inf.inflated)?.is_some();
    let ratio_three_halves = 2 * gap.l_max == 3 * gap.l_min;
    let odd_cycle_bound = 3 * gap.w_max <= gap.vertices;
    Ok(ReductionReport {
        base_vertices: g.vertex_count(),
        base_colorable,
        inflated_colorable,
        consistent: base_colorable == ratio_three_halves
            && (gap.w == 0) == inflated_colorable
            && odd_cycle_bound,
        ratio_three_halves,
        odd_cycle_bound,
        gap,
    })
}
