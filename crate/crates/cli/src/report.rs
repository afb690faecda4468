use serde::{Deserialize, Serialize};
use serde_json::Value;
use sha2::{Digest, Sha256};

/// Envelope printed by every subcommand. Keys come out sorted because
/// `serde_json::Map` is a `BTreeMap` without the `preserve_order` feature.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub command: String,
    /// `sha256:<hex>` of the input file bytes; null for `gen`.
    pub input_digest: Option<String>,
    pub result: Value,
    pub elapsed_ms: u64,
    pub version: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
}

impl Report {
    pub fn new(command: &str, input: Option<&[u8]>, result: Value) -> Self {
        Report {
            command: command.to_string(),
            input_digest: input.map(digest),
            result,
            elapsed_ms: 0,
            version: concat!("matchgap ", env!("CARGO_PKG_VERSION")).to_string(),
            seed: None,
        }
    }

    pub fn to_json(&self) -> String {
        let value = serde_json::to_value(self).expect("report is plain data");
        let mut out = serde_json::to_string(&value).expect("value serializes");
        out.push('\n');
        out
    }
}

pub fn digest(bytes: &[u8]) -> String {
    format!("sha256:{:x}", Sha256::digest(bytes))
}

/// True if `v` holds no floating-point numbers anywhere.
pub fn integers_only(v: &Value) -> bool {
    match v {
        Value::Number(n) => !n.is_f64(),
        Value::Array(items) => items.iter().all(integers_only),
        Value::Object(map) => map.values().all(integers_only),
        _ => true,
    }
}
