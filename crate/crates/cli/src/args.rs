use std::ops::RangeInclusive;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use qgf_core::gates::DEFAULT_POINT_CEILING;
use qgf_core::group::DEFAULT_ENUM_CAP;
use qgf_core::{Convention, GateId};

/// Qudit gates as permutations: parity analysis, feasibility and synthesis
/// over CNOT-style gate sets.
#[derive(Debug, Parser)]
#[command(name = "qgf", version)]
pub struct Cli {
    #[command(flatten)]
    pub global: Global,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct Global {
    /// Dimension of each subsystem.
    #[arg(long, global = true)]
    pub d: Option<usize>,

    /// Number of subsystems. Defaults to `d` when a shift is involved, to
    /// one past the largest embed position, and to 2 otherwise.
    #[arg(long, global = true)]
    pub n: Option<usize>,

    /// Print one JSON result envelope instead of text.
    #[arg(long, global = true)]
    pub json: bool,

    /// Directory for cached group data. Without it nothing touches the disk.
    #[arg(long, global = true, env = "QGF_CACHE_DIR")]
    pub cache_dir: Option<PathBuf>,

    /// Largest register size `d^n` a gate may be realized on.
    #[arg(long, global = true, env = "QGF_POINT_CEILING", default_value_t = DEFAULT_POINT_CEILING)]
    pub point_ceiling: usize,

    /// Largest number of group elements to store.
    #[arg(long, global = true, env = "QGF_ENUM_CAP", default_value_t = DEFAULT_ENUM_CAP)]
    pub enum_cap: usize,

    /// Longest word the synthesizer searches for.
    #[arg(long, global = true, default_value_t = 64)]
    pub max_depth: usize,

    /// List every cycle length instead of a length-to-count summary.
    #[arg(long, global = true)]
    pub full: bool,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Cycle structure and signature of one gate.
    Analyze {
        #[arg(long, value_parser = parse_gate)]
        gate: GateId,
    },
    /// Decide whether the target is a product of the generators.
    Feasible {
        #[arg(long, value_parser = parse_gate)]
        target: GateId,
        /// Comma-separated gate specs.
        #[arg(long, value_parser = parse_gate_list)]
        generators: GateList,
        #[arg(long, value_enum, default_value_t = Method::Auto)]
        method: Method,
    },
    /// Find a shortest word in the generators equal to the target.
    Synthesize {
        #[arg(long, value_parser = parse_gate)]
        target: GateId,
        /// Comma-separated gate specs.
        #[arg(long, value_parser = parse_gate_list)]
        generators: GateList,
    },
    /// CSV of gate statistics over a range of dimensions.
    Table {
        #[arg(long, value_parser = parse_gate)]
        gate: GateId,
        /// Inclusive range such as `2..9`.
        #[arg(long, value_parser = parse_d_range)]
        d_range: RangeInclusive<usize>,
    },
    /// Write the 0/1 matrix of a gate.
    #[command(alias = "export")]
    ExportMatrix {
        #[arg(long, value_parser = parse_gate)]
        gate: GateId,
        #[arg(long, value_enum)]
        convention: ConventionArg,
        #[arg(long, value_enum, default_value_t = Format::Dense)]
        format: Format,
        /// Write here instead of standard output.
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Analyze { .. } => "analyze",
            Command::Feasible { .. } => "feasible",
            Command::Synthesize { .. } => "synthesize",
            Command::Table { .. } => "table",
            Command::ExportMatrix { .. } => "export-matrix",
        }
    }
}

/// Newtype so clap treats the list as one value.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GateList(pub Vec<GateId>);

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    /// Enumerate when the group fits under the cap, else use the chain.
    Auto,
    /// Always enumerate; fails with exit code 3 past the cap.
    Enumerate,
    /// Always use the stabilizer chain.
    Chain,
}

impl Method {
    pub fn as_str(self) -> &'static str {
        match self {
            Method::Auto => "auto",
            Method::Enumerate => "enumerate",
            Method::Chain => "chain",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ConventionArg {
    ColumnIsInput,
    RowIsInput,
}

impl From<ConventionArg> for Convention {
    fn from(c: ConventionArg) -> Convention {
        match c {
            ConventionArg::ColumnIsInput => Convention::ColumnIsInput,
            ConventionArg::RowIsInput => Convention::RowIsInput,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    /// Comma-separated 0/1 rows.
    Dense,
    /// One `row,col` line per nonzero entry, sorted by row.
    Sparse,
}

impl Format {
    pub fn as_str(self) -> &'static str {
        match self {
            Format::Dense => "dense",
            Format::Sparse => "sparse",
        }
    }
}

fn parse_gate(text: &str) -> Result<GateId, String> {
    text.parse().map_err(|e| format!("{e}"))
}

/// Splits at commas outside parentheses, so embed positions stay intact.
fn parse_gate_list(text: &str) -> Result<GateList, String> {
    let mut gates = Vec::new();
    let mut depth = 0usize;
    let mut start = 0;
    for (i, c) in text.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth = depth.checked_sub(1).ok_or("unbalanced parentheses")?,
            ',' if depth == 0 => {
                gates.push(parse_gate(&text[start..i])?);
                start = i + 1;
            }
            _ => {}
        }
    }
    if depth != 0 {
        return Err("unbalanced parentheses".into());
    }
    gates.push(parse_gate(&text[start..])?);
    Ok(GateList(gates))
}

fn parse_d_range(text: &str) -> Result<RangeInclusive<usize>, String> {
    let (lo, hi) = text
        .split_once("..")
        .ok_or_else(|| format!("expected LO..HI, got {text:?}"))?;
    let bound = |s: &str| {
        s.trim()
            .parse::<usize>()
            .map_err(|_| format!("bad bound {s:?}"))
    };
    let (lo, hi) = (bound(lo)?, bound(hi.strip_prefix('=').unwrap_or(hi))?);
    if lo < 2 {
        return Err(format!("dimensions start at 2, got {lo}"));
    }
    if hi < lo {
        return Err(format!("range {lo}..{hi} is descending"));
    }
    Ok(lo..=hi)
}
