use std::fmt::Write;

use qgf_core::parity::closed_form_for;
use qgf_core::{GateId, GateStats};
use serde_json::{json, Value};

use crate::args::Global;
use crate::envelope::Report;
use crate::error::{CliError, EXIT_OK};
use crate::register;

/// Cycle types with more cycles than this are shown as length counts.
pub const FULL_LISTING_LIMIT: usize = 64;

pub fn run(global: &Global, gate: &GateId) -> Result<Report, CliError> {
    let d = register::require_d(global)?;
    let n = register::width(global, d, [gate]);
    let system = register::system(global, d, n)?;
    let perm = gate.realize(&system)?;
    let data = perm.cycle_decomposition();
    let lengths = data.length_counts();
    let listed = global.full || data.cycle_count() <= FULL_LISTING_LIMIT;

    let direct = GateStats::direct(d, gate.clone(), &perm);
    let closed_form = match closed_form_for(gate, d, n) {
        Some(c) if c.same_statistics(&direct) => "agrees",
        Some(_) => "disagrees",
        None => "not_applicable",
    };

    let result = json!({
        "points": system.point_count(),
        "fixed_points": data.fixed_points,
        "cycle_count": data.cycle_count(),
        "cycle_lengths": lengths.iter().map(|(l, c)| (l.to_string(), json!(c))).collect::<serde_json::Map<_, _>>(),
        "cycle_type": if listed { json!(data.cycle_type) } else { Value::Null },
        "transpositions": data.transposition_count,
        "signature": data.signature.as_i8(),
        "closed_form": closed_form,
    });

    let mut text = String::new();
    let cycle_type = if listed {
        let parts: Vec<String> = data.cycle_type.iter().map(usize::to_string).collect();
        format!("({})", parts.join(","))
    } else {
        let parts: Vec<String> = lengths.iter().map(|(l, c)| format!("{l}^{c}")).collect();
        format!("{} (length^count; --full lists all)", parts.join(" "))
    };
    writeln!(text, "gate            {gate}").unwrap();
    writeln!(
        text,
        "register        d={d} n={n}, {} points",
        system.point_count()
    )
    .unwrap();
    writeln!(text, "fixed points    {}", data.fixed_points).unwrap();
    writeln!(text, "cycles          {}", data.cycle_count()).unwrap();
    writeln!(text, "cycle type      {cycle_type}").unwrap();
    writeln!(text, "transpositions  {}", data.transposition_count).unwrap();
    writeln!(text, "signature       {}", data.signature).unwrap();
    writeln!(text, "closed form     {}", closed_form.replace('_', " ")).unwrap();

    Ok(Report {
        inputs: json!({
            "gate": gate.to_string(),
            "d": d,
            "n": n,
            "point_ceiling": global.point_ceiling,
            "full": global.full,
        }),
        result,
        text,
        exit: EXIT_OK,
    })
}
