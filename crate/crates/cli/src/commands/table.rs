use std::ops::RangeInclusive;

use qgf_core::parity::{closed_form_for, gate_stats};
use qgf_core::GateId;
use serde_json::json;

use super::{count_json, sign_json};
use crate::args::Global;
use crate::envelope::Report;
use crate::error::{CliError, EXIT_OK};
use crate::register;

pub const HEADER: [&str; 7] = [
    "d",
    "gate",
    "fixed_points",
    "transpositions",
    "signature",
    "d_mod_4",
    "source",
];

pub fn run(
    global: &Global,
    gate: &GateId,
    range: &RangeInclusive<usize>,
) -> Result<Report, CliError> {
    let mut rows = Vec::new();
    let mut csv = csv::Writer::from_writer(Vec::new());
    csv.write_record(HEADER).expect("in-memory write");
    for d in range.clone() {
        let n = register::width(global, d, [gate]);
        // closed forms need no register, so they work past the point ceiling
        let stats = match closed_form_for(gate, d, n) {
            Some(stats) => stats,
            None => gate_stats(gate, &register::system(global, d, n)?)?,
        };
        let fixed = stats.fixed_points.to_string();
        let transpositions = stats.transposition_count.to_string();
        csv.write_record([
            d.to_string(),
            gate.to_string(),
            fixed,
            transpositions,
            stats.signature.to_string(),
            (d % 4).to_string(),
            stats.source.as_str().to_string(),
        ])
        .expect("in-memory write");
        rows.push(json!({
            "d": d,
            "n": n,
            "fixed_points": count_json(&stats.fixed_points),
            "transpositions": count_json(&stats.transposition_count),
            "signature": sign_json(stats.signature),
            "d_mod_4": d % 4,
            "source": stats.source.as_str(),
        }));
    }
    let text = String::from_utf8(csv.into_inner().expect("in-memory flush")).expect("ascii csv");
    Ok(Report {
        inputs: json!({
            "gate": gate.to_string(),
            "d_range": [range.start(), range.end()],
            "n": global.n,
            "point_ceiling": global.point_ceiling,
        }),
        result: json!({ "columns": HEADER, "rows": rows }),
        text,
        exit: EXIT_OK,
    })
}
