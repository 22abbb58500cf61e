//! JSON reports, schema version 1.
//!
//! ```json
//! {
//!   "schema": 1,
//!   "command": "arrows",
//!   "inputs": [{"role": "f", "path": "c5.g6", "sha256": "…"}],
//!   "verdict": { … command specific … },
//!   "nodes_explored": 12,
//!   "elapsed_ms": 0,
//!   "seed": null
//! }
//! ```
//!
//! Everything except `elapsed_ms` is a function of the inputs and seed.

use serde::Serialize;
use serde_json::Value;
use sha2::{Digest, Sha256};

pub const SCHEMA: u32 = 1;

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct InputDigest {
    pub role: String,
    pub path: String,
    pub sha256: String,
}

impl InputDigest {
    pub fn new(role: &str, path: &str, contents: &[u8]) -> Self {
        InputDigest { role: role.into(), path: path.into(), sha256: sha256_hex(contents) }
    }
}

pub fn sha256_hex(bytes: &[u8]) -> String {
    Sha256::digest(bytes).iter().map(|b| format!("{b:02x}")).collect()
}

#[derive(Clone, Debug, Serialize, PartialEq)]
pub struct Report {
    pub schema: u32,
    pub command: String,
    pub inputs: Vec<InputDigest>,
    pub verdict: Value,
    pub nodes_explored: u64,
    pub elapsed_ms: u64,
    pub seed: Option<u64>,
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn digest_of_empty_input() {
        assert_eq!(sha256_hex(b""), "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
    }
}
