pub mod analyze;
pub mod export;
pub mod feasible;
pub mod synthesize;
pub mod table;

use qgf_core::{BigUint, ParityVerdict, Sign};
use serde_json::{json, Value};

pub fn sign_json(s: Sign) -> Value {
    json!(s.as_i8())
}

/// Exact counts go out as decimal strings so no reader has to round them.
pub fn count_json(n: &BigUint) -> Value {
    json!(n.to_string())
}

pub fn verdict_json(v: &ParityVerdict) -> Value {
    json!({
        "obstructed": v.obstructed,
        "target_signature": sign_json(v.target_signature),
        "generator_signatures": v.generator_signatures.iter()
            .map(|(name, s)| json!({"name": name, "signature": sign_json(*s)}))
            .collect::<Vec<_>>(),
    })
}

pub fn verdict_text(v: &ParityVerdict) -> String {
    let gens: Vec<String> = v
        .generator_signatures
        .iter()
        .map(|(name, s)| format!("{name} {s}"))
        .collect();
    format!(
        "target signature {}; generators {}",
        v.target_signature,
        gens.join(", ")
    )
}
