use std::time::Instant;

use serde::Serialize;
use serde_json::{Map, Value};

/// Outcome of one theorem check.
#[derive(Clone, Debug, Serialize)]
pub struct CheckReport {
    pub claim: String,
    pub params: Map<String, Value>,
    pub passed: bool,
    pub counterexample: Option<String>,
    pub elapsed_ms: u128,
}

impl CheckReport {
    /// Runs `body`, which returns the first counterexample or `None`.
    pub fn run(claim: &str, params: Value, body: impl FnOnce() -> Option<String>) -> Self {
        let start = Instant::now();
        let counterexample = body();
        CheckReport {
            claim: claim.to_string(),
            params: match params {
                Value::Object(m) => m,
                other => Map::from_iter([("value".to_string(), other)]),
            },
            passed: counterexample.is_none(),
            counterexample,
            elapsed_ms: start.elapsed().as_millis(),
        }
    }

    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("reports serialize")
    }

    /// The report without its timing, for byte-stable output.
    pub fn without_timing(&self) -> Value {
        let mut v = serde_json::to_value(self).expect("reports serialize");
        v.as_object_mut().expect("object").remove("elapsed_ms");
        v
    }
}
