//! The JSON result envelope printed by `--json`.

use std::time::Duration;

use serde::Serialize;
use serde_json::Value;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Serialize)]
pub struct Envelope<'a> {
    pub schema_version: u32,
    pub command: &'a str,
    pub inputs: &'a Value,
    pub result: &'a Value,
    pub timing: Timing,
}

#[derive(Debug, Serialize)]
pub struct Timing {
    pub wall_seconds: f64,
}

/// A finished command: the machine-readable payload, the text rendering and
/// the exit code.
#[derive(Debug)]
pub struct Report {
    pub inputs: Value,
    pub result: Value,
    pub text: String,
    pub exit: u8,
}

impl Report {
    pub fn to_json(&self, command: &str, elapsed: Duration) -> String {
        let envelope = Envelope {
            schema_version: SCHEMA_VERSION,
            command,
            inputs: &self.inputs,
            result: &self.result,
            timing: Timing {
                wall_seconds: elapsed.as_secs_f64(),
            },
        };
        serde_json::to_string_pretty(&envelope).expect("envelope serializes")
    }
}
