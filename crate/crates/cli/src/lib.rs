//! Command-line frontend for the `penthex` binary.
//!
//! [`run`] parses arguments, executes one subcommand and returns the text to
//! emit; `main` only prints it and maps errors to exit codes.

mod bench;
mod record;

use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use penthex_core::oracle::{default_budget, SearchConfig};
use penthex_core::patch_graph::{to_svg, PatchSetRecord};
use penthex_core::{parse, BoundaryCode, Oracle, ParseError, Solver, SolverConfig, SolverError};
use thiserror::Error;

pub use bench::{corpus, BenchRow};
pub use record::{CountRecord, RunRecord};

#[derive(Debug, Parser)]
#[command(name = "penthex", version, about = "Decide whether a 2/3 sequence bounds a fullerene patch")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Answer yes or no.
    Decide(SolveArgs),
    /// Decide and, on yes, build a patch with the given boundary.
    Witness(SolveArgs),
    /// Count distinct patches, saturating at the cap.
    Count(CountArgs),
    /// Run the exhaustive face search instead of the solver.
    Oracle(OracleArgs),
    /// Compare solver and face search over a corpus of codes.
    Bench(BenchArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Record,
    Drawing,
}

#[derive(Debug, Args)]
pub struct Common {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Write output to this file instead of standard output.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct SolveArgs {
    /// Boundary code, e.g. 322232222 or 3,2,2,2,3,2,2,2,2.
    pub code: String,
    /// Allow f5 > 5 using d = max(n - 3, 10); negative answers become conditional.
    #[arg(long)]
    pub conjecture: bool,
    /// Maximum length of type I operations (default n - 3).
    #[arg(long = "d", value_parser = clap::value_parser!(u64).range(1..))]
    pub d: Option<u64>,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Debug, Args)]
pub struct CountArgs {
    pub code: String,
    #[arg(long, default_value_t = 50, value_parser = clap::value_parser!(u64).range(1..))]
    pub cap: u64,
    #[arg(long = "d", value_parser = clap::value_parser!(u64).range(1..))]
    pub d: Option<u64>,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Debug, Args)]
pub struct OracleArgs {
    pub code: String,
    /// Largest number of inner faces considered (default n^2).
    #[arg(long)]
    pub budget: Option<usize>,
    #[arg(long, default_value_t = 50, value_parser = clap::value_parser!(u64).range(1..))]
    pub cap: u64,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Debug, Args)]
pub struct BenchArgs {
    #[arg(long, default_value_t = 5)]
    pub n_min: usize,
    #[arg(long, default_value_t = 9)]
    pub n_max: usize,
    /// Random codes per length above 14; shorter lengths are enumerated exhaustively.
    #[arg(long, default_value_t = 20)]
    pub samples: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Stop the solver on a code after this many expanded nodes.
    #[arg(long, default_value_t = 2_000_000)]
    pub node_limit: u64,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Debug, Error)]
pub enum CliError {
    /// Help or version text was requested.
    #[error("{0}")]
    Help(String),
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("{0}")]
    Unsupported(SolverError),
    #[error("cannot write {path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("internal error: {0}")]
    Internal(String),
}

impl CliError {
    /// 0 for help, 1 for bad input, 2 for internal failures.
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Help(_) => 0,
            CliError::Internal(_) => 2,
            _ => 1,
        }
    }
}

impl From<SolverError> for CliError {
    fn from(e: SolverError) -> Self {
        match e {
            SolverError::Unsupported(_) => CliError::Unsupported(e),
            other => CliError::Internal(other.to_string()),
        }
    }
}

/// Parses `args` (program name first) and runs the subcommand.
pub fn run<I, T>(args: I) -> Result<String, CliError>
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = Cli::try_parse_from(args).map_err(|e| match e.kind() {
        clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => CliError::Help(e.to_string()),
        _ => CliError::Usage(e.render().to_string()),
    })?;
    execute(&cli.command)
}

/// Runs a parsed command, writing to `--out` when given. Returns what should
/// go to standard output.
pub fn execute(cmd: &Command) -> Result<String, CliError> {
    let (text, common) = match cmd {
        Command::Decide(a) => (solve(a, false)?, &a.common),
        Command::Witness(a) => (solve(a, true)?, &a.common),
        Command::Count(a) => (count(a)?, &a.common),
        Command::Oracle(a) => (oracle(a)?, &a.common),
        Command::Bench(a) => (bench::run(a)?, &a.common),
    };
    match &common.out {
        Some(path) => {
            std::fs::write(path, &text).map_err(|source| CliError::Io { path: path.clone(), source })?;
            Ok(String::new())
        }
        None => Ok(text),
    }
}

fn single_code(text: &str) -> Result<BoundaryCode, CliError> {
    let list = parse(text)?;
    match list.items() {
        [c] => Ok(c.clone()),
        items => Err(ParseError::NotSingle(items.len()).into()),
    }
}

fn solve(a: &SolveArgs, want_witness: bool) -> Result<String, CliError> {
    let code = single_code(&a.code)?;
    let cfg = SolverConfig {
        d_override: a.d.map(|d| d as usize),
        conjecture_mode: a.conjecture,
        want_witness: want_witness || a.common.format == Format::Drawing,
        ..SolverConfig::default()
    };
    let ans = Solver::new().decide(&code, &cfg)?;
    let witness = ans.witness.as_ref().map(|ps| PatchSetRecord::new(ps));
    if let Some(ps) = &ans.witness {
        let codes: Vec<_> = ps.iter().map(|p| p.boundary_code()).collect();
        if codes.len() != 1 || !codes[0].rotation_equivalent(&code) {
            return Err(CliError::Internal(format!("witness boundary {codes:?} does not match {code}")));
        }
    }
    let rec = RunRecord {
        answer: answer_word(ans.exists).to_string(),
        conditional: ans.stats.conditional,
        f5: code.f5(),
        n: code.len(),
        d: Some(ans.d),
        nodes: ans.stats.nodes,
        time_ms: ans.stats.elapsed.as_millis() as u64,
        witness,
    };
    Ok(match a.common.format {
        Format::Record => rec.to_line(),
        Format::Drawing => match &ans.witness {
            Some(ps) => to_svg(ps),
            None => return Err(CliError::Usage(format!("no patch has boundary {code}; nothing to draw"))),
        },
        Format::Text => {
            let mut out = rec.answer_line();
            if let Some(trace) = &ans.trace {
                for step in &trace.steps {
                    out.push_str(&format!("step {}\n", step.op));
                }
            }
            if let Some(ps) = &ans.witness {
                for (i, p) in ps.iter().enumerate() {
                    out.push_str(&format!(
                        "patch {i}: {} vertices, {} inner faces, {} pentagons\n",
                        p.vertex_count(),
                        p.face_count(),
                        p.f5()
                    ));
                }
            }
            out
        }
    })
}

fn answer_word(exists: bool) -> &'static str {
    if exists {
        "yes"
    } else {
        "no"
    }
}

fn count(a: &CountArgs) -> Result<String, CliError> {
    let code = single_code(&a.code)?;
    let cfg = SolverConfig { d_override: a.d.map(|d| d as usize), ..SolverConfig::default() };
    let d = Solver::parameter(&code, &cfg)?;
    let start = Instant::now();
    let cap = a.cap as usize;
    let count = Solver::new().count_solutions(&code, cap, &cfg)?;
    let rec = CountRecord {
        count,
        saturated: count >= cap,
        cap,
        f5: code.f5(),
        n: code.len(),
        d: Some(d),
        time_ms: start.elapsed().as_millis() as u64,
    };
    match a.common.format {
        Format::Record => Ok(rec.to_line()),
        Format::Text => Ok(format!("{count}\n")),
        Format::Drawing => Err(CliError::Usage("count has no drawing output".into())),
    }
}

fn oracle(a: &OracleArgs) -> Result<String, CliError> {
    let code = single_code(&a.code)?;
    let start = Instant::now();
    let cap = a.cap as usize;
    let cfg = SearchConfig {
        face_budget: a.budget.unwrap_or_else(|| default_budget(&code)),
        witness_cap: cap,
        ..SearchConfig::for_code(&code)
    };
    let found = Oracle::new().fill_search(&code, &cfg).map_err(|e| CliError::Usage(e.to_string()))?;
    let rec = RunRecord {
        answer: answer_word(!found.is_empty()).to_string(),
        conditional: false,
        f5: code.f5(),
        n: code.len(),
        d: None,
        nodes: 0,
        time_ms: start.elapsed().as_millis() as u64,
        witness: found.first().map(|p| PatchSetRecord::new(std::slice::from_ref(p))),
    };
    Ok(match a.common.format {
        Format::Record => rec.to_line(),
        Format::Drawing => match found.first() {
            Some(p) => to_svg(std::slice::from_ref(p)),
            None => return Err(CliError::Usage(format!("no patch within budget has boundary {code}"))),
        },
        Format::Text => {
            let k = found.len();
            let noun = if k == 1 { "solution" } else { "solutions" };
            let more = if k >= cap { " (cap reached)" } else { "" };
            format!("{k} {noun}{more}\n")
        }
    })
}
