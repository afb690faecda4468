//! One PASS/FAIL line per acceptance criterion. Exits non-zero if any fail.

#[path = "../../core/tests/common/mod.rs"]
mod common;

use std::time::{Duration, Instant};

use common::{
    bull, brute_nu, brute_two_path_packing, connected_labeled_up_to, path, random_bipartite, random_connected,
    random_connected_corpus, random_matching, triangle_tail,
};
use matchgap::gadget::{census_options, inflation_l_l};
use matchgap::gap::{check_pendant_recurrence, check_perfect_matching_bound, extremal_structure_check, find_pendant_siblings};
use matchgap::{
    build_2path_network, check_l_eq_2l, find_augmenting_path, gap_profile, generate, inflate, max_flow, nu,
    odd_cycle_stats, three_edge_colorable, two_path_packing, EnumOptions, Graph, Matching, VertexSet,
};
use rand::RngCore;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn(&Corpus) -> Outcome);

struct Corpus {
    small: Vec<Graph>,
    random_any: Vec<Graph>,
    random_large: Vec<Graph>,
}

fn opts() -> EnumOptions {
    EnumOptions::default()
}

fn within(elapsed: Duration, budget: Duration, detail: String) -> Outcome {
    if elapsed <= budget {
        Ok(format!("{detail}, {:.2}s", elapsed.as_secs_f64()))
    } else {
        Err(format!("{detail}, took {:.2}s over the {}s budget", elapsed.as_secs_f64(), budget.as_secs()))
    }
}

fn first_failures(failures: &[String]) -> String {
    failures.iter().take(3).cloned().collect::<Vec<_>>().join("; ")
}

fn l_at_most_2l(c: &Corpus) -> Outcome {
    let start = Instant::now();
    let mut bad = Vec::new();
    for g in &c.small {
        let p = gap_profile(g, &opts()).map_err(|e| e.to_string())?;
        if p.l_max > 2 * p.l_min {
            bad.push(format!("{:?}", g.edges()));
        }
    }
    if !bad.is_empty() {
        return Err(format!("{} violations: {}", bad.len(), first_failures(&bad)));
    }
    within(start.elapsed(), Duration::from_secs(300), format!("{} connected graphs, 0 violations", c.small.len()))
}

fn perfect_matching_bound(c: &Corpus) -> Outcome {
    let mut applicable = 0;
    let mut bad = Vec::new();
    for g in c.small.iter().chain(&c.random_any) {
        let r = check_perfect_matching_bound(g, &opts()).map_err(|e| e.to_string())?;
        if r.applicable {
            applicable += 1;
            if r.holds != Some(true) {
                bad.push(format!("{:?} L={} l={}", g.edges(), r.l_max, r.l_min));
            }
        }
    }
    if bad.is_empty() {
        Ok(format!("{applicable} graphs with a perfect matching, 0 violations"))
    } else {
        Err(format!("{} violations: {}", bad.len(), first_failures(&bad)))
    }
}

fn verdict_matches_oracle(c: &Corpus) -> Outcome {
    let mut bad = Vec::new();
    let mut extremal = 0;
    for g in c.small.iter().chain(&c.random_large) {
        let p = gap_profile(g, &opts()).map_err(|e| e.to_string())?;
        extremal += p.is_extremal() as usize;
        let verdict = check_l_eq_2l(g).verdict;
        if verdict != p.is_extremal() {
            bad.push(format!("{:?} verdict={verdict} L={} l={}", g.edges(), p.l_max, p.l_min));
        }
    }
    let total = c.small.len() + c.random_large.len();
    if bad.is_empty() {
        Ok(format!("{total} graphs ({extremal} with L = 2l), 0 disagreements"))
    } else {
        Err(format!("{} of {total} disagree, e.g. {}", bad.len(), first_failures(&bad)))
    }
}

fn named_instances(_: &Corpus) -> Outcome {
    let cases = [
        ("P5", path(5), (2, 2, 1), true),
        ("P3", path(3), (1, 1, 1), false),
        ("triangle with tail", triangle_tail(), (2, 2, 1), true),
        ("K4", common::complete(4), (2, 2, 2), false),
    ];
    let mut bad = Vec::new();
    for (name, g, want, verdict) in cases {
        let p = gap_profile(&g, &opts()).map_err(|e| e.to_string())?;
        let got = (p.nu, p.l_max, p.l_min);
        let v = check_l_eq_2l(&g).verdict;
        if got != want || v != verdict {
            bad.push(format!("{name}: got {got:?} verdict {v}, want {want:?} verdict {verdict}"));
        }
    }
    if bad.is_empty() {
        Ok("P5, P3, triangle with tail, K4 exact".into())
    } else {
        Err(bad.join("; "))
    }
}

fn pendant_recurrence(_: &Corpus) -> Outcome {
    let mut rng = generate::rng(0x5eed_0005);
    let mut bad = Vec::new();
    for i in 0..200 {
        let base = random_connected(1 + (rng.next_u64() % 10) as usize, [0.0, 0.15, 0.3, 0.5][i % 4], &mut rng);
        let n = base.vertex_count();
        let hub = (rng.next_u64() % n as u64) as usize;
        let mut edges: Vec<_> = base.edges().iter().map(|e| (e.0, e.1)).collect();
        edges.extend([(hub, n), (hub, n + 1)]);
        let g = Graph::new(n + 2, edges).unwrap();
        let t = find_pendant_siblings(&g).ok_or("constructed graph lost its pendant siblings")?;
        let rest = g.delete_vertices(&VertexSet::from([t.u, t.v, t.w])).unwrap().graph;
        let before = gap_profile(&g, &opts()).map_err(|e| e.to_string())?;
        let after = gap_profile(&rest, &opts()).map_err(|e| e.to_string())?;
        let full = check_pendant_recurrence(&g, &opts()).map_err(|e| e.to_string())?;
        if before.l_max != after.l_max + 1 || before.l_min != after.l_min + 1 || !full.holds {
            bad.push(format!("{:?}", g.edges()));
        }
    }
    if bad.is_empty() {
        Ok("200 graphs, L and l drop by exactly 1 per removed triple".into())
    } else {
        Err(format!("{} violations: {}", bad.len(), first_failures(&bad)))
    }
}

fn k4_inflation(_: &Corpus) -> Outcome {
    let start = Instant::now();
    let inf = inflate(&common::complete(4)).map_err(|e| e.to_string())?;
    let stats = odd_cycle_stats(&inf.inflated, &census_options()).map_err(|e| e.to_string())?;
    let gap = inflation_l_l(&inf, &census_options()).map_err(|e| e.to_string())?;
    let oracle = gap_profile(&inf.inflated, &opts()).map_err(|e| e.to_string())?;
    let got = (stats.vertices, gap.w, gap.w_max, gap.l_max, gap.l_min);
    let detail = format!("(|V|, w, W, L, l) = {got:?}, oracle (L, l) = ({}, {})", oracle.l_max, oracle.l_min);
    if got != (12, 0, 4, 6, 4) || (oracle.l_max, oracle.l_min) != (6, 4) || 2 * gap.l_max != 3 * gap.l_min {
        return Err(detail);
    }
    within(start.elapsed(), Duration::from_secs(60), detail)
}

fn petersen_inflation(_: &Corpus) -> Outcome {
    let start = Instant::now();
    let g = common::petersen();
    let inf = inflate(&g).map_err(|e| e.to_string())?;
    let gap = inflation_l_l(&inf, &census_options()).map_err(|e| e.to_string())?;
    let got = (gap.vertices, gap.w, gap.w_max, gap.l_max, gap.l_min);
    let census = start.elapsed();
    let colorable = three_edge_colorable(&g).map_err(|e| e.to_string())?.is_some();
    let detail = format!("(|V|, w, W, L, l) = {got:?}, 2L = {}, 3l = {}", 2 * gap.l_max, 3 * gap.l_min);
    if got != (30, 2, 10, 14, 10) || colorable {
        return Err(format!("{detail}, Petersen colorable = {colorable}"));
    }
    within(census, Duration::from_secs(300), format!("{detail}, Petersen not 3-edge-colorable"))
}

fn flow_construction(_: &Corpus) -> Outcome {
    let mut rng = generate::rng(0x5eed_0008);
    let mut bad = Vec::new();
    for i in 0..200 {
        let nx = 1 + (rng.next_u64() % 5) as usize;
        let ny = 1 + (rng.next_u64() % 10) as usize;
        let h = random_bipartite(nx, ny, [0.2, 0.35, 0.5, 0.8][i % 4], &mut rng);
        let x: VertexSet = (0..nx).collect();
        let y: VertexSet = (nx..nx + ny).collect();
        let value = max_flow(&build_2path_network(&h, &x, &y).map_err(|e| e.to_string())?).value as usize;
        let found = two_path_packing(&h, &x, &y).map_err(|e| e.to_string())?.is_some();
        if value > 2 * nx || found != brute_two_path_packing(&h, x.as_slice()) {
            bad.push(format!("{:?} |X|={nx}", h.edges()));
        }
    }
    if bad.is_empty() {
        Ok("200 bipartite instances, 0 violations".into())
    } else {
        Err(format!("{} violations: {}", bad.len(), first_failures(&bad)))
    }
}

fn extremal_structure(c: &Corpus) -> Outcome {
    let mut checked = 0;
    let mut bad = Vec::new();
    for g in c.small.iter().chain(&c.random_any).chain(&c.random_large) {
        if g.vertex_count() < 3 || !gap_profile(g, &opts()).map_err(|e| e.to_string())?.is_extremal() {
            continue;
        }
        checked += 1;
        let r = extremal_structure_check(g, &opts()).map_err(|e| e.to_string())?;
        if !r.holds {
            bad.push(format!("{:?}: {}", g.edges(), r.violations.join(", ")));
        }
    }
    if bad.is_empty() {
        Ok(format!("{checked} graphs with L = 2l, 0 violations"))
    } else {
        Err(format!("{} violations: {}", bad.len(), first_failures(&bad)))
    }
}

fn berge_certificate(_: &Corpus) -> Outcome {
    let mut rng = generate::rng(0x5eed_0010);
    let mut bad = Vec::new();
    let mut maximum = 0;
    for i in 0..500 {
        let n = 1 + (rng.next_u64() % 9) as usize;
        let g = generate::gnp_with(n, [0.2, 0.4, 0.6, 0.9][i % 4], &mut rng).unwrap();
        let m = Matching::new(&g, random_matching(&g, &mut rng)).unwrap();
        let is_max = m.len() == brute_nu(&g);
        maximum += is_max as usize;
        let path = find_augmenting_path(&g, &m);
        let valid = path.as_ref().is_none_or(|p| p.is_valid_for(&g, &m));
        if path.is_none() != is_max || !valid || nu(&g) != brute_nu(&g) {
            bad.push(format!("{:?} M={:?}", g.edges(), m.edges()));
        }
    }
    if bad.is_empty() {
        Ok(format!("500 pairs ({maximum} maximum), 0 violations"))
    } else {
        Err(format!("{} violations: {}", bad.len(), first_failures(&bad)))
    }
}

fn main() {
    let corpus = Corpus {
        small: connected_labeled_up_to(6),
        random_any: random_connected_corpus(300, 2..=12, 0x5eed_0002),
        random_large: random_connected_corpus(300, 7..=12, 0x5eed_0003),
    };
    // sanity: the known counterexample family is inside the small corpus
    assert!(corpus.small.contains(&bull()));

    let criteria: [Criterion; 10] = [
        ("L <= 2l on all connected graphs with n <= 6", l_at_most_2l),
        ("2L <= 3l under a perfect matching", perfect_matching_bound),
        ("L = 2l verdict agrees with the oracle", verdict_matches_oracle),
        ("named instances", named_instances),
        ("pendant-sibling recurrence", pendant_recurrence),
        ("K4 inflation", k4_inflation),
        ("Petersen inflation", petersen_inflation),
        ("2-path flow construction", flow_construction),
        ("structure of extremal graphs", extremal_structure),
        ("Berge certificate", berge_certificate),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        match check(&corpus) {
            Ok(detail) => println!("PASS {:>2} {name}: {detail}", i + 1),
            Err(detail) => {
                failed += 1;
                println!("FAIL {:>2} {name}: {detail}", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
