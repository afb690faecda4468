//! Exact L(G) and l(G) by exhaustive enumeration of maximum matchings.
//!
//! `L(G)` is the largest and `l(G)` the smallest matching number of
//! `G \ F` over maximum matchings `F`. Computing either is NP-hard in
//! general, so everything here is an oracle for small graphs.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{EdgeSet, Graph, Vertex, VertexSet};
use crate::matching::{enumerate_maximum_matchings, nu, EnumOptions, Matching};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GapProfile {
    pub nu: usize,
    #[serde(rename = "L")]
    pub l_max: usize,
    #[serde(rename = "l")]
    pub l_min: usize,
    /// First maximum matching (in enumeration order) attaining `L`.
    #[serde(rename = "F_L")]
    pub witness_max: EdgeSet,
    /// First maximum matching attaining `l`.
    #[serde(rename = "F_l")]
    pub witness_min: EdgeSet,
    pub matchings_examined: usize,
}

impl GapProfile {
    /// `L = 2l`, compared in integers.
    pub fn is_extremal(&self) -> bool {
        self.l_max == 2 * self.l_min
    }
}

/// Every maximum matching paired with `ν(G \ F)`, in enumeration order.
pub fn residual_numbers(g: &Graph, opts: &EnumOptions) -> Result<Vec<(Matching, usize)>> {
    Ok(enumerate_maximum_matchings(g, opts)?
        .map(|f| {
            let r = nu(&g.without_edges(f.edges()));
            (f, r)
        })
        .collect())
}

pub fn gap_profile(g: &Graph, opts: &EnumOptions) -> Result<GapProfile> {
    let all = residual_numbers(g, opts)?;
    profile_from(g, &all)
}

fn profile_from(g: &Graph, all: &[(Matching, usize)]) -> Result<GapProfile> {
    // there is always at least one maximum matching, possibly empty
    let (first, _) = all
        .first()
        .ok_or_else(|| Error::InvariantViolation("no maximum matching enumerated".into()))?;
    let nu_g = first.len();
    let mut hi = 0;
    let mut lo = 0;
    for (i, (_, r)) in all.iter().enumerate() {
        if *r > all[hi].1 {
            hi = i;
        }
        if *r < all[lo].1 {
            lo = i;
        }
    }
    let profile = GapProfile {
        nu: nu_g,
        l_max: all[hi].1,
        l_min: all[lo].1,
        witness_max: all[hi].0.edges().clone(),
        witness_min: all[lo].0.edges().clone(),
        matchings_examined: all.len(),
    };
    // independent re-check of the witnesses
    for (w, expect) in [
        (&profile.witness_max, profile.l_max),
        (&profile.witness_min, profile.l_min),
    ] {
        let residual = g.delete_edges(w)?;
        if nu(&residual) != expect {
            return Err(Error::InvariantViolation(format!(
                "witness {w:?} re-verified to a different residual matching number"
            )));
        }
    }
    if !(profile.l_min <= profile.l_max && profile.l_max <= profile.nu) {
        return Err(Error::InvariantViolation(format!(
            "expected l <= L <= nu, got l={} L={} nu={}",
            profile.l_min, profile.l_max, profile.nu
        )));
    }
    Ok(profile)
}

/// Result of checking `ν(G \ F') <= 2 ν(G \ F)` over all ordered pairs.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairwiseBoundReport {
    pub holds: bool,
    pub pairs_checked: u64,
    /// The pair with the least slack: `f_prime` maximizes the left side,
    /// `f` minimizes the right.
    pub f_prime: EdgeSet,
    pub f: EdgeSet,
    pub lhs: usize,
    pub rhs: usize,
}

pub fn check_pairwise_bound(g: &Graph, opts: &EnumOptions) -> Result<PairwiseBoundReport> {
    let all = residual_numbers(g, opts)?;
    let p = profile_from(g, &all)?;
    let k = all.len() as u64;
    let violations = all
        .iter()
        .map(|(_, a)| all.iter().filter(|(_, b)| *a > 2 * *b).count())
        .sum::<usize>();
    Ok(PairwiseBoundReport {
        holds: violations == 0,
        pairs_checked: k * k,
        f_prime: p.witness_max,
        f: p.witness_min,
        lhs: p.l_max,
        rhs: 2 * p.l_min,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PerfectMatchingBoundReport {
    /// False when `G` has no perfect matching.
    pub applicable: bool,
    #[serde(rename = "L")]
    pub l_max: usize,
    #[serde(rename = "l")]
    pub l_min: usize,
    /// `2L <= 3l`; `None` when not applicable.
    pub holds: Option<bool>,
}

pub fn check_perfect_matching_bound(g: &Graph, opts: &EnumOptions) -> Result<PerfectMatchingBoundReport> {
    let p = gap_profile(g, opts)?;
    let applicable = 2 * p.nu == g.vertex_count();
    Ok(PerfectMatchingBoundReport {
        applicable,
        l_max: p.l_max,
        l_min: p.l_min,
        holds: applicable.then_some(2 * p.l_max <= 3 * p.l_min),
    })
}

/// One removal step: leaves `u < v` hanging off the common neighbor `w`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PendantTriple {
    pub u: Vertex,
    pub v: Vertex,
    pub w: Vertex,
}

#[derive(Clone, Debug)]
pub struct PendantReductionTrace {
    /// Triples in the labels of the input graph, in removal order.
    pub removed: Vec<PendantTriple>,
    pub residual: Graph,
    /// `residual_labels[i]` is the input label of residual vertex `i`.
    pub residual_labels: Vec<Vertex>,
}

impl PendantReductionTrace {
    pub fn k(&self) -> usize {
        self.removed.len()
    }
}

/// Lexicographically least `(w, u, v)` with `u < v` both of degree one
/// and adjacent to `w`.
pub fn find_pendant_siblings(g: &Graph) -> Option<PendantTriple> {
    (0..g.vertex_count()).find_map(|w| {
        let mut leaves = g.neighbors(w).iter().copied().filter(|&x| g.neighbors(x).len() == 1);
        let u = leaves.next()?;
        let v = leaves.next()?;
        Some(PendantTriple { u, v, w })
    })
}

/// Strips pendant-sibling triples until none remain. `L` and `l` of the
/// input equal those of the residual plus the number of steps.
pub fn pendant_reduction(g: &Graph) -> PendantReductionTrace {
    let mut current = g.clone();
    let mut labels: Vec<Vertex> = (0..g.vertex_count()).collect();
    let mut removed = Vec::new();
    while let Some(t) = find_pendant_siblings(&current) {
        removed.push(PendantTriple {
            u: labels[t.u],
            v: labels[t.v],
            w: labels[t.w],
        });
        let sub = current
            .delete_vertices(&VertexSet::from([t.u, t.v, t.w]))
            .expect("triple vertices are in range");
        labels = sub.new_to_old.iter().map(|&i| labels[i]).collect();
        current = sub.graph;
    }
    PendantReductionTrace {
        removed,
        residual: current,
        residual_labels: labels,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PendantRecurrenceReport {
    pub k: usize,
    pub removed: Vec<PendantTriple>,
    #[serde(rename = "L")]
    pub l_max: usize,
    #[serde(rename = "l")]
    pub l_min: usize,
    pub residual_l_max: usize,
    pub residual_l_min: usize,
    pub holds: bool,
}

/// Runs [`pendant_reduction`] and compares the oracle on both ends.
pub fn check_pendant_recurrence(g: &Graph, opts: &EnumOptions) -> Result<PendantRecurrenceReport> {
    let trace = pendant_reduction(g);
    let before = gap_profile(g, opts)?;
    let after = gap_profile(&trace.residual, opts)?;
    let k = trace.k();
    Ok(PendantRecurrenceReport {
        k,
        l_max: before.l_max,
        l_min: before.l_min,
        residual_l_max: after.l_max,
        residual_l_min: after.l_min,
        holds: before.l_max == after.l_max + k && before.l_min == after.l_min + k,
        removed: trace.removed,
    })
}

/// Outcome of the structural assertions that must hold whenever `L = 2l`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExtremalReport {
    pub holds: bool,
    pub max_witnesses: usize,
    pub min_witnesses: usize,
    pub pairs_checked: usize,
    pub complement_matchings_checked: usize,
    pub violations: Vec<String>,
    /// `F_L △ F_l` paths of the first witness pair.
    pub example_two_paths: Vec<[Vertex; 3]>,
}

const MAX_REPORTED_VIOLATIONS: usize = 16;

/// Components of an edge set, each as (vertex count, edge count, a
/// 2-path rendering when it has that shape).
fn two_path_components(n: usize, edges: &EdgeSet) -> Vec<Result<[Vertex; 3], (usize, usize)>> {
    let g = Graph::new(n, edges.iter().map(|e| (e.0, e.1))).expect("edges from a valid graph");
    g.connected_components()
        .into_iter()
        .filter(|c| c.len() > 1)
        .map(|c| {
            let m = c.iter().map(|v| g.neighbors(v).len()).sum::<usize>() / 2;
            let center = c.iter().find(|&v| g.neighbors(v).len() == 2);
            match center {
                Some(x) if c.len() == 3 && m == 2 => {
                    let nb = g.neighbors(x);
                    Ok([nb[0], x, nb[1]])
                }
                _ => Err((c.len(), m)),
            }
        })
        .collect()
}

/// Checks, for every pair of extremal witnesses `F_L`, `F_l` and every
/// maximum matching `H_L` of `G \ F_L`:
/// the witnesses jointly cover `V(G)`; `F_L △ F_l` splits into 2-paths;
/// `F_l \ F_L ⊆ H_L`; `H_L \ F_l` and `F_L \ F_l` are maximum in
/// `G \ F_l`; and `G` has no pendant siblings.
pub fn extremal_structure_check(g: &Graph, opts: &EnumOptions) -> Result<ExtremalReport> {
    let n = g.vertex_count();
    if n < 3 || !g.is_connected() {
        return Err(Error::NotApplicable(
            "structure checks need a connected graph on at least 3 vertices".into(),
        ));
    }
    let all = residual_numbers(g, opts)?;
    let p = profile_from(g, &all)?;
    if !p.is_extremal() {
        return Err(Error::NotApplicable(format!("L = {} is not 2l = {}", p.l_max, 2 * p.l_min)));
    }
    let max_side: Vec<&EdgeSet> = all.iter().filter(|(_, r)| *r == p.l_max).map(|(f, _)| f.edges()).collect();
    let min_side: Vec<&EdgeSet> = all.iter().filter(|(_, r)| *r == p.l_min).map(|(f, _)| f.edges()).collect();

    let mut report = ExtremalReport {
        max_witnesses: max_side.len(),
        min_witnesses: min_side.len(),
        ..Default::default()
    };
    let violate = |report: &mut ExtremalReport, msg: String| {
        if report.violations.len() < MAX_REPORTED_VIOLATIONS {
            report.violations.push(msg);
        }
    };

    if let Some(t) = find_pendant_siblings(g) {
        violate(&mut report, format!("pendant siblings {} and {} at {}", t.u, t.v, t.w));
    }

    let inner = EnumOptions {
        force: true,
        ..*opts
    };
    for f_big in &max_side {
        let without_big = g.without_edges(f_big);
        let complements: Vec<EdgeSet> = enumerate_maximum_matchings(&without_big, &inner)?
            .map(Matching::into_edges)
            .collect();
        report.complement_matchings_checked += complements.len();
        for f_small in &min_side {
            report.pairs_checked += 1;
            let covered: VertexSet = f_big.covered().iter().chain(f_small.covered().iter()).collect();
            if covered.len() != n {
                violate(&mut report, format!("{f_big:?} and {f_small:?} leave a vertex uncovered"));
            }
            let sym = f_big.symmetric_difference(f_small);
            let comps = two_path_components(n, &sym);
            if let Some(Err((vs, es))) = comps.iter().find(|c| c.is_err()) {
                violate(
                    &mut report,
                    format!("{f_big:?} xor {f_small:?} has a component with {vs} vertices and {es} edges"),
                );
            }
            if report.example_two_paths.is_empty() {
                report.example_two_paths = comps.iter().filter_map(|c| c.ok()).collect();
            }
            let small_only = f_small.difference(f_big);
            let big_only = f_big.difference(f_small);
            if big_only.len() != p.l_min {
                violate(
                    &mut report,
                    format!("F_L \\ F_l has {} edges, not maximum in G \\ F_l (l = {})", big_only.len(), p.l_min),
                );
            }
            for h in &complements {
                if !small_only.is_subset(h) {
                    violate(&mut report, format!("F_l \\ F_L not inside H_L = {h:?}"));
                }
                let h_rest = h.difference(f_small);
                if h_rest.len() != p.l_min {
                    violate(
                        &mut report,
                        format!("H_L \\ F_l has {} edges for H_L = {h:?}, expected {}", h_rest.len(), p.l_min),
                    );
                }
            }
        }
    }
    report.holds = report.violations.is_empty();
    Ok(report)
}
