use std::fmt::Write;

use qgf_core::{parity_feasible, GateId};
use serde_json::{json, Value};

use super::{count_json, verdict_json, verdict_text};
use crate::args::{Global, Method};
use crate::cache::{self, Want};
use crate::envelope::Report;
use crate::error::{CliError, EXIT_INFEASIBLE, EXIT_OK};
use crate::register;

pub fn run(
    global: &Global,
    target: &GateId,
    generators: &[GateId],
    method: Method,
) -> Result<Report, CliError> {
    let d = register::require_d(global)?;
    let n = register::width(global, d, generators.iter().chain([target]));
    let system = register::system(global, d, n)?;
    let gens = register::generator_set(&system, generators)?;
    let target_perm = target.realize(&system)?;

    let inputs = json!({
        "target": target.to_string(),
        "generators": generators.iter().map(ToString::to_string).collect::<Vec<_>>(),
        "d": d,
        "n": n,
        "method": method.as_str(),
        "enum_cap": global.enum_cap,
        "point_ceiling": global.point_ceiling,
    });

    let verdict = parity_feasible(&target_perm, &gens)?;
    let mut text = String::new();
    writeln!(text, "parity          {}", verdict_text(&verdict)).unwrap();
    if verdict.obstructed {
        writeln!(
            text,
            "verdict         infeasible (parity obstruction: odd target, even generators)"
        )
        .unwrap();
        return Ok(Report {
            inputs,
            result: json!({
                "feasible": false,
                "verdict": "parity_obstructed",
                "parity": verdict_json(&verdict),
                "membership": Value::Null,
            }),
            text,
            exit: EXIT_INFEASIBLE,
        });
    }

    let want = match method {
        Method::Auto => Want::Auto,
        Method::Enumerate => Want::Elements,
        Method::Chain => Want::Chain,
    };
    let group = cache::obtain(global.cache_dir.as_deref(), &gens, global.enum_cap, want)?;
    let member = group.contains(&target_perm)?;
    let chain = group.chain();
    writeln!(
        text,
        "group           order {} ({}), base {:?}, orbits {:?}",
        group.order(),
        group.method().as_str().replace('_', " "),
        chain.base(),
        chain.orbit_lengths()
    )
    .unwrap();
    writeln!(
        text,
        "verdict         {}",
        if member {
            "feasible (target is in the group)"
        } else {
            "infeasible (target is not in the group)"
        }
    )
    .unwrap();

    Ok(Report {
        inputs,
        result: json!({
            "feasible": member,
            "verdict": if member { "member" } else { "not_in_group" },
            "parity": verdict_json(&verdict),
            "membership": {
                "method": group.method().as_str(),
                "group_order": count_json(&group.order()),
                "base": chain.base(),
                "orbit_lengths": chain.orbit_lengths(),
                "member": member,
            },
        }),
        text,
        exit: if member { EXIT_OK } else { EXIT_INFEASIBLE },
    })
}
