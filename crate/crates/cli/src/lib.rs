//! Library side of the `ttmin` binary: argument parsing, dispatch to the
//! minimizers and oracles, instance generation and the check suites.
//!
//! [`run`] never exits the process; it returns the exit code together with
//! everything that should go to stdout and stderr, so tests can drive it
//! directly.

use std::path::PathBuf;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand};
use ttmin_core::TruthTable;

mod analyze;
mod generate;
mod models;
pub mod suites;

pub use models::Model;
pub use suites::{run_suite, Suite, SuiteOptions, SuiteReport};

/// Exit code for a function outside the requested model class.
pub const EXIT_REJECT: i32 = 2;
/// Exit code for usage and cap errors.
pub const EXIT_USAGE: i32 = 1;
/// Exit code for a suite that found discrepancies.
pub const EXIT_SUITE_FAILED: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "ttmin", version, about = "Exact minimization of boolean functions given as truth tables")]
#[command(after_help = "Tables are written x1-first: entry i is f at the assignment whose bit j-1 is x_j.\n\
Exit codes: 0 success, 1 usage or cap error, 2 function outside the model class, 3 suite failure.\n\
TTMIN_THREADS caps the worker threads used by sweeps and suites.")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Minimize a function in a model.
    Min(TableArgs),
    /// Minimum size from brute-force enumeration (tiny n only).
    Oracle(TableArgs),
    /// Emit reduced instances of the hardness reductions.
    Gen(GenArgs),
    /// Decide whether a function (or instance) has a model of size <= k.
    Verify(TableArgs),
    /// Structural facts about a function; with --a, its value at a point.
    Eval(TableArgs),
    /// Run a check suite and print its JSON report.
    #[command(name = "run_suite", alias = "suite")]
    RunSuite(SuiteArgs),
}

#[derive(clap::Args, Debug, Clone)]
pub struct TableArgs {
    /// Model to use.
    #[arg(long, value_enum)]
    pub model: Option<Model>,
    /// Inline truth table, e.g. 0110.
    #[arg(long, conflicts_with = "file")]
    pub tt: Option<String>,
    /// File holding a truth table (or, for set-cover models, an instance).
    #[arg(long)]
    pub file: Option<PathBuf>,
    /// Size bound for `verify`.
    #[arg(long)]
    pub k: Option<usize>,
    /// Maximum test weight for LDT.
    #[arg(long)]
    pub c: Option<usize>,
    /// Variable order for OBDD, 1-based and comma separated.
    #[arg(long)]
    pub order: Option<String>,
    /// Bit vector, x1 first: negation pattern for rofxor-a, point for eval.
    #[arg(long)]
    pub a: Option<String>,
    /// Print JSON instead of text.
    #[arg(long)]
    pub json: bool,
}

#[derive(clap::Args, Debug, Clone)]
pub struct GenArgs {
    #[arg(value_enum)]
    pub kind: generate::GenKind,
    /// Universe size.
    #[arg(long)]
    pub m: Option<usize>,
    /// One set per occurrence, elements comma separated; `;` also splits sets.
    #[arg(long, value_delimiter = ';')]
    pub sets: Vec<String>,
    /// Block (1, 2 or 3) of each element for three-partite instances.
    #[arg(long)]
    pub partition: Option<String>,
    #[arg(long)]
    pub k: Option<usize>,
    /// Instance file instead of --m/--sets/--k.
    #[arg(long)]
    pub file: Option<PathBuf>,
    /// Seed for the random generators.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Largest universe for the random generators.
    #[arg(long = "max-n", default_value_t = 6)]
    pub max_n: usize,
    /// Write `<out>.tt` and `<out>.json` instead of printing.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Print the sidecar only, as JSON.
    #[arg(long)]
    pub json: bool,
}

#[derive(clap::Args, Debug, Clone)]
pub struct SuiteArgs {
    #[arg(value_enum)]
    pub name: Suite,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Override the suite's largest n.
    #[arg(long = "max-n")]
    pub max_n: Option<usize>,
    /// Accepted for symmetry; reports are always JSON.
    #[arg(long)]
    pub json: bool,
}

/// Result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome { code: 0, stdout, stderr: String::new() }
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run_args<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run(&cli),
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => Outcome::ok(text),
                _ => Outcome { code: EXIT_USAGE, stdout: String::new(), stderr: text },
            }
        }
    }
}

pub fn run(cli: &Cli) -> Outcome {
    let res = match &cli.command {
        Command::Min(a) => models::minimize(a),
        Command::Oracle(a) => models::oracle(a),
        Command::Verify(a) => models::verify(a),
        Command::Eval(a) => analyze::eval(a),
        Command::Gen(a) => generate::generate(a),
        Command::RunSuite(a) => {
            let opts = SuiteOptions { seed: a.seed, max_n: a.max_n };
            return match run_suite(a.name, &opts) {
                Ok(report) => Outcome {
                    code: if report.passed { 0 } else { EXIT_SUITE_FAILED },
                    stdout: report.to_json(),
                    stderr: String::new(),
                },
                Err(e) => usage_error(&e),
            };
        }
    };
    match res {
        Ok(out) => Outcome::ok(out),
        Err(e) => match e.downcast_ref::<ttmin_core::Error>().and_then(ttmin_core::Error::reject) {
            Some(r) => Outcome {
                code: EXIT_REJECT,
                stdout: reject_text(cli, r),
                stderr: String::new(),
            },
            None => usage_error(&e),
        },
    }
}

fn usage_error(e: &anyhow::Error) -> Outcome {
    Outcome {
        code: EXIT_USAGE,
        stdout: String::new(),
        stderr: format!("error: {e:#}\n"),
    }
}

fn reject_text(cli: &Cli, r: ttmin_core::Reject) -> String {
    let json = matches!(&cli.command, Command::Min(a) | Command::Oracle(a) | Command::Verify(a) | Command::Eval(a) if a.json);
    if json {
        let mut s = serde_json::json!({ "reject": r.as_str() }).to_string();
        s.push('\n');
        s
    } else {
        format!("reject: {r}\n")
    }
}

pub(crate) fn read_input(a: &TableArgs) -> Result<String> {
    match (&a.tt, &a.file) {
        (Some(t), _) => Ok(t.clone()),
        (None, Some(p)) => std::fs::read_to_string(p).with_context(|| format!("reading {}", p.display())),
        (None, None) => bail!("give a table with --tt or --file"),
    }
}

pub(crate) fn read_table(a: &TableArgs) -> Result<TruthTable> {
    let text = read_input(a)?;
    Ok(text.trim().parse::<TruthTable>()?)
}

/// `0110` style bit vector, x1 first.
pub(crate) fn parse_point(s: &str, n: usize) -> Result<usize> {
    let s = s.trim();
    if s.len() != n {
        bail!("--a needs {n} bits, got {:?}", s);
    }
    s.chars().enumerate().try_fold(0usize, |acc, (i, ch)| match ch {
        '0' => Ok(acc),
        '1' => Ok(acc | 1 << i),
        _ => bail!("bad bit {ch:?} in --a"),
    })
}

/// Caps the worker pool from `TTMIN_THREADS` when it is set.
pub fn configure_from_env() -> Result<()> {
    if let Ok(v) = std::env::var("TTMIN_THREADS") {
        let t: usize = v.trim().parse().with_context(|| format!("TTMIN_THREADS={v:?}"))?;
        ttmin_core::par::configure_threads(t);
    }
    Ok(())
}
