mod args;
mod cache;
mod commands;
mod envelope;
mod error;
mod register;

use std::io::Write;
use std::process::ExitCode;
use std::time::Instant;

use clap::Parser;

use crate::args::{Cli, Command};
use crate::envelope::Report;
use crate::error::CliError;

fn run(cli: &Cli) -> Result<Report, CliError> {
    let g = &cli.global;
    match &cli.command {
        Command::Analyze { gate } => commands::analyze::run(g, gate),
        Command::Feasible {
            target,
            generators,
            method,
        } => commands::feasible::run(g, target, &generators.0, *method),
        Command::Synthesize { target, generators } => {
            commands::synthesize::run(g, target, &generators.0)
        }
        Command::Table { gate, d_range } => commands::table::run(g, gate, d_range),
        Command::ExportMatrix {
            gate,
            convention,
            format,
            output,
        } => commands::export::run(g, gate, (*convention).into(), *format, output.as_deref()),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let start = Instant::now();
    match run(&cli) {
        Ok(report) => {
            let elapsed = start.elapsed();
            let out = if cli.global.json {
                report.to_json(cli.command.name(), elapsed) + "\n"
            } else {
                report.text.clone()
            };
            let mut stdout = std::io::stdout().lock();
            if stdout
                .write_all(out.as_bytes())
                .and_then(|()| stdout.flush())
                .is_err()
            {
                return ExitCode::from(error::EXIT_USAGE);
            }
            ExitCode::from(report.exit)
        }
        Err(e) => {
            eprintln!("qgf: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
