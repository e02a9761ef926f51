//! Run reports: command echo, input digest, results and timing.

use serde::Serialize;
use serde_json::Value;
use sha2::{Digest, Sha256};

#[derive(Clone, Debug, Serialize)]
pub struct RunReport {
    pub command: String,
    pub arguments: Vec<String>,
    /// SHA-256 over the command, its arguments and the contents of every
    /// input file, in order.
    pub inputs_digest: String,
    pub results: Value,
    pub wall_time_ms: f64,
}

/// Accumulates the digest of a run's inputs.
#[derive(Clone, Default)]
pub struct InputDigest(Sha256);

impl InputDigest {
    pub fn new() -> Self {
        Self(Sha256::new())
    }

    pub fn add(&mut self, part: &[u8]) {
        // Length-prefixed so that part boundaries matter.
        self.0.update((part.len() as u64).to_le_bytes());
        self.0.update(part);
    }

    pub fn finish(self) -> String {
        hex::encode(self.0.finalize())
    }
}

/// A report with its timing removed, for comparisons across runs.
pub fn without_timing(mut report: Value) -> Value {
    if let Some(map) = report.as_object_mut() {
        map.remove("wall_time_ms");
    }
    report
}
