use std::fmt::Write;

use qgf_core::diagram::render_circuit;
use qgf_core::synth::NotInGroupMethod;
use qgf_core::{synthesize, GateId, SynthesisOptions, SynthesisResult};
use serde_json::json;

use super::{count_json, verdict_json, verdict_text};
use crate::args::Global;
use crate::envelope::Report;
use crate::error::{CliError, EXIT_CAP, EXIT_INFEASIBLE, EXIT_OK};
use crate::register;

pub fn run(global: &Global, target: &GateId, generators: &[GateId]) -> Result<Report, CliError> {
    let d = register::require_d(global)?;
    let n = register::width(global, d, generators.iter().chain([target]));
    let system = register::system(global, d, n)?;
    let gens = register::generator_set(&system, generators)?;
    let target_perm = target.realize(&system)?;

    let options = SynthesisOptions {
        max_depth: global.max_depth,
        node_cap: global.enum_cap,
        ..SynthesisOptions::default()
    };
    let outcome = synthesize(&gens, &target_perm, &options)?;

    let mut text = String::new();
    let (result, exit) = match &outcome {
        SynthesisResult::Synthesized(word) => {
            let gates: Vec<GateId> = word
                .letters()
                .iter()
                .map(|l| generators[gens.index_of(l).expect("letters name generators")].clone())
                .collect();
            let circuit = render_circuit(n, &gates);
            let shown = if word.is_empty() {
                "(empty)".to_string()
            } else {
                word.to_string()
            };
            writeln!(text, "word      {shown}").unwrap();
            writeln!(text, "length    {}", word.len()).unwrap();
            if !word.is_empty() {
                writeln!(text).unwrap();
                text.push_str(&circuit);
            }
            (
                json!({
                    "status": "synthesized",
                    "word": word.letters(),
                    "length": word.len(),
                    "circuit": circuit,
                }),
                EXIT_OK,
            )
        }
        SynthesisResult::ParityObstructed(verdict) => {
            writeln!(text, "status    parity obstructed").unwrap();
            writeln!(text, "parity    {}", verdict_text(verdict)).unwrap();
            (
                json!({ "status": "parity_obstructed", "parity": verdict_json(verdict) }),
                EXIT_INFEASIBLE,
            )
        }
        SynthesisResult::NotInGroup { order, method } => {
            let method = match method {
                NotInGroupMethod::Membership(m) => m.as_str(),
                NotInGroupMethod::ExhaustedSearch => "exhausted_search",
            };
            writeln!(
                text,
                "status    not in the group of order {order} ({})",
                method.replace('_', " ")
            )
            .unwrap();
            (
                json!({ "status": "not_in_group", "group_order": count_json(order), "method": method }),
                EXIT_INFEASIBLE,
            )
        }
        SynthesisResult::DepthExceeded { max_depth } => {
            writeln!(
                text,
                "status    no word of length <= {max_depth}; raise --max-depth"
            )
            .unwrap();
            (
                json!({ "status": "depth_exceeded", "max_depth": max_depth }),
                EXIT_CAP,
            )
        }
    };

    Ok(Report {
        inputs: json!({
            "target": target.to_string(),
            "generators": generators.iter().map(ToString::to_string).collect::<Vec<_>>(),
            "d": d,
            "n": n,
            "max_depth": global.max_depth,
            "enum_cap": global.enum_cap,
            "point_ceiling": global.point_ceiling,
        }),
        result,
        text,
        exit,
    })
}
