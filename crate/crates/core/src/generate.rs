//! Seeded random graphs.
//!
//! Both generators draw only 64-bit words from ChaCha8 (`rand_chacha`),
//! seeded with `seed_from_u64`, so a seed fixes the output on every
//! platform. A probability test uses the top 53 bits of one word as a
//! uniform value in `[0, 1)`; a shuffle is Fisher–Yates from the back,
//! taking `word % (i + 1)` as the swap index.

use rand::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::Graph;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn unit(rng: &mut impl RngCore) -> f64 {
    (rng.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
}

/// Erdős–Rényi `G(n, p)`: pairs `(a, b)`, `a < b`, visited in
/// lexicographic order, one draw each.
pub fn random_gnp(n: usize, p: f64, seed: u64) -> Result<Graph> {
    gnp_with(n, p, &mut rng(seed))
}

pub fn gnp_with(n: usize, p: f64, rng: &mut impl RngCore) -> Result<Graph> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::InvalidArgument(format!("probability {p} outside [0, 1]")));
    }
    let mut edges = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            if unit(rng) < p {
                edges.push((a, b));
            }
        }
    }
    Graph::new(n, edges)
}

pub fn shuffle<T>(items: &mut [T], rng: &mut impl RngCore) {
    for i in (1..items.len()).rev() {
        let j = (rng.next_u64() % (i as u64 + 1)) as usize;
        items.swap(i, j);
    }
}

/// Default number of pairing-model samples before giving up.
pub const DEFAULT_CUBIC_ATTEMPTS: usize = 100_000;

/// Connected bridgeless cubic graph from the pairing model: `3n` points
/// are shuffled and paired consecutively; samples with loops, parallel
/// edges, a bridge or more than one component are rejected.
pub fn random_cubic_bridgeless(n: usize, seed: u64, max_attempts: usize) -> Result<Graph> {
    if n < 4 || !n.is_multiple_of(2) {
        return Err(Error::InvalidArgument(format!(
            "cubic graphs need an even vertex count of at least 4, got {n}"
        )));
    }
    let mut rng = rng(seed);
    let mut points: Vec<usize> = (0..3 * n).collect();
    'sample: for _ in 0..max_attempts {
        for (i, p) in points.iter_mut().enumerate() {
            *p = i;
        }
        shuffle(&mut points, &mut rng);
        let mut edges = Vec::with_capacity(3 * n / 2);
        for pair in points.chunks(2) {
            let (a, b) = (pair[0] / 3, pair[1] / 3);
            if a == b {
                continue 'sample;
            }
            edges.push((a.min(b), a.max(b)));
        }
        let g = Graph::new(n, edges).expect("endpoints in range, no loops");
        if g.edge_count() == 3 * n / 2 && g.is_connected() && g.is_bridgeless() {
            return Ok(g);
        }
    }
    Err(Error::GiveUp {
        attempts: max_attempts,
    })
}
