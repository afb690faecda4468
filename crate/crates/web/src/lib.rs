//! Browser bindings. Every export takes and returns plain strings (edge
//! lists in, JSON out) so the same functions run natively in tests.

use matchgap::gadget::{census_options, reduction_check};
use matchgap::generate::{random_cubic_bridgeless, random_gnp, DEFAULT_CUBIC_ATTEMPTS};
use matchgap::{check_l_eq_2l, gap_profile, parse_edgelist, write_edgelist, EnumOptions, Graph};
use serde_json::{json, Value};
use wasm_bindgen::prelude::wasm_bindgen;

fn parse(text: &str) -> Result<Graph, Value> {
    parse_edgelist(text).map_err(|e| json!({ "error": e.to_string() }))
}

fn respond(v: Result<Value, Value>) -> String {
    v.unwrap_or_else(|e| e).to_string()
}

/// ν, L, l with witnesses, next to the polynomial-time L = 2l verdict.
#[wasm_bindgen]
pub fn analyze(text: &str) -> String {
    respond(parse(text).and_then(|g| {
        let cert = check_l_eq_2l(&g);
        let profile = gap_profile(&g, &EnumOptions::default()).map_err(|e| json!({ "error": e.to_string() }))?;
        Ok(json!({
            "profile": profile,
            "certificate": cert,
            "agrees": profile.is_extremal() == cert.verdict,
        }))
    }))
}

/// Triangle inflation census for a bridgeless cubic graph.
#[wasm_bindgen]
pub fn reduce(text: &str) -> String {
    respond(parse(text).and_then(|g| {
        let r = reduction_check(&g, &census_options()).map_err(|e| json!({ "error": e.to_string() }))?;
        Ok(json!(r))
    }))
}

/// Seeded random edge list: `kind` is "gnp" (edge probability
/// `per_mille / 1000`) or "cubic" (bridgeless).
#[wasm_bindgen]
pub fn generate(kind: &str, n: u32, per_mille: u32, seed: u32) -> String {
    let g = match kind {
        "gnp" => random_gnp(n as usize, per_mille.min(1000) as f64 / 1000.0, seed as u64),
        "cubic" => random_cubic_bridgeless(n as usize, seed as u64, DEFAULT_CUBIC_ATTEMPTS),
        other => return format!("c unknown generator {other}\n"),
    };
    match g {
        Ok(g) => write_edgelist(&g),
        Err(e) => format!("c {e}\n"),
    }
}
