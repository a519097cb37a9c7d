//! Expression language, graph6 codec and the JSON report envelope.

pub mod expr;
pub mod graph6;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::Result;
use crate::graph::Graph;

pub use expr::{eval_expr, eval_str, parse_expr, GraphExpr, ParseError};
pub use graph6::{graph6_decode, graph6_encode};

/// Reads a graph from either the JSON graph format or graph6.
pub fn read_graph_bytes(bytes: &[u8]) -> Result<Graph> {
    let first = bytes.iter().find(|b| !b.is_ascii_whitespace());
    if first == Some(&b'{') {
        Ok(serde_json::from_slice(bytes)?)
    } else {
        let trimmed = bytes.trim_ascii_end();
        let mut record = trimmed.to_vec();
        record.push(b'\n');
        graph6_decode(&record)
    }
}

/// Self-describing wrapper around any command output.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub command: Vec<String>,
    pub inputs: Value,
    pub outputs: Value,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    pub version: String,
}

impl Report {
    pub fn new(command: Vec<String>, inputs: Value, outputs: Value, seed: Option<u64>) -> Self {
        Report {
            command,
            inputs,
            outputs,
            seed,
            version: env!("CARGO_PKG_VERSION").to_string(),
        }
    }
}
