//! Command-line front end for the `cvm` binary.
//!
//! ```text
//! cvm <build|invert|det|solve|interpolate|bench> --in <path> --out <path>
//!     [--sizes 64,128,256] [--mode single-root|distinct-roots|mixed]
//! ```
//!
//! Matrices are written as CSV (`,` separated, `\n` terminated, no header),
//! scalars and vectors one value per line. Numbers use the shortest decimal
//! string that parses back to the same `f64`.
//!
//! Exit codes: 0 success, 2 parse or validation error, 3 I/O error.

mod problem;

use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use clap::{Parser, ValueEnum};
use thiserror::Error;

pub use problem::ProblemSpec;

use crate::bench::{format_report, run_bench, BenchMode};
use crate::cvm::{build_cvm, cvm_det, invert_cvm, solve_cvm};
use crate::densemat::DenseMatrix;
use crate::hermite::{hermite_interpolate, HermiteData};

pub const EXIT_OK: u8 = 0;
pub const EXIT_INVALID: u8 = 2;
pub const EXIT_IO: u8 = 3;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("validation error: {0}")]
    Validation(String),
    #[error("missing required section `{0}` in problem file")]
    MissingSection(&'static str),
    #[error("missing required argument {0}")]
    MissingArgument(&'static str),
    #[error("I/O error: {0}")]
    Io(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Io(_) => EXIT_IO,
            _ => EXIT_INVALID,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Command {
    Build,
    Invert,
    Det,
    Solve,
    Interpolate,
    Bench,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ModeArg {
    SingleRoot,
    DistinctRoots,
    Mixed,
}

impl From<ModeArg> for BenchMode {
    fn from(m: ModeArg) -> Self {
        match m {
            ModeArg::SingleRoot => BenchMode::SingleRoot,
            ModeArg::DistinctRoots => BenchMode::DistinctRoots,
            ModeArg::Mixed => BenchMode::Mixed,
        }
    }
}

/// Confluent Vandermonde matrix toolkit.
#[derive(Debug, Parser)]
#[command(name = "cvm", version)]
pub struct Args {
    #[arg(value_enum)]
    pub command: Command,
    /// Problem file (JSON); not used by `bench`.
    #[arg(long = "in", value_name = "PATH")]
    pub input: Option<PathBuf>,
    /// Output file; stdout when omitted.
    #[arg(long, value_name = "PATH")]
    pub out: Option<PathBuf>,
    /// Benchmark sizes.
    #[arg(long, value_delimiter = ',', default_value = "64,128,256")]
    pub sizes: Vec<usize>,
    #[arg(long, value_enum, default_value = "single-root")]
    mode: ModeArg,
}

impl Args {
    pub fn bench_mode(&self) -> BenchMode {
        self.mode.into()
    }
}

/// Shortest round-trip decimal form of `x`.
pub fn format_number(x: f64) -> String {
    format!("{x}")
}

pub fn matrix_to_csv(m: &DenseMatrix) -> String {
    let mut out = String::new();
    for i in 0..m.rows() {
        let line: Vec<String> = m.row(i).iter().map(|&x| format_number(x)).collect();
        out.push_str(&line.join(","));
        out.push('\n');
    }
    out
}

fn lines(values: &[f64]) -> String {
    values.iter().fold(String::new(), |mut s, &x| {
        let _ = writeln!(s, "{}", format_number(x));
        s
    })
}

fn load(path: Option<&Path>) -> Result<ProblemSpec, CliError> {
    let path = path.ok_or(CliError::MissingArgument("--in"))?;
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
    ProblemSpec::from_json(&text)
}

/// Runs one command and returns its full output text.
pub fn render(args: &Args) -> Result<String, CliError> {
    if args.command == Command::Bench {
        if let Some(&bad) = args.sizes.iter().find(|&&n| n == 0) {
            return Err(CliError::Validation(format!(
                "--sizes entries must be positive, got {bad}"
            )));
        }
        let mode = args.bench_mode();
        return Ok(format_report(&run_bench(&args.sizes, mode), mode));
    }
    let problem = load(args.input.as_deref())?;
    let spec = &problem.roots;
    let text = match args.command {
        Command::Build => matrix_to_csv(&build_cvm(spec)),
        Command::Invert => matrix_to_csv(&invert_cvm(spec)),
        Command::Det => lines(&[cvm_det(spec)]),
        Command::Solve => {
            let rhs = problem
                .rhs
                .as_ref()
                .ok_or(CliError::MissingSection("rhs"))?;
            let x = solve_cvm(spec, rhs).map_err(|e| CliError::Validation(e.to_string()))?;
            lines(&x)
        }
        Command::Interpolate => {
            let values = problem
                .hermite
                .clone()
                .ok_or(CliError::MissingSection("hermite"))?;
            let data = HermiteData::new(spec.clone(), values)
                .map_err(|e| CliError::Validation(e.to_string()))?;
            lines(&hermite_interpolate(&data))
        }
        Command::Bench => unreachable!(),
    };
    Ok(text)
}

/// Runs a command, writing to `--out` or stdout.
pub fn run(args: &Args) -> Result<(), CliError> {
    let text = render(args)?;
    match &args.out {
        Some(path) => {
            std::fs::write(path, text).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))
        }
        None => {
            use std::io::Write;
            let mut stdout = std::io::stdout().lock();
            stdout
                .write_all(text.as_bytes())
                .and_then(|_| stdout.flush())
                .map_err(|e| CliError::Io(e.to_string()))
        }
    }
}

/// Parses `argv`, runs, reports errors on stderr, and returns the exit code.
pub fn main_with_args<I, T>(argv: I) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let args = match Args::try_parse_from(argv) {
        Ok(a) => a,
        Err(e) => {
            let code = if e.use_stderr() {
                EXIT_INVALID
            } else {
                EXIT_OK
            };
            let _ = e.print();
            return code;
        }
    };
    match run(&args) {
        Ok(()) => EXIT_OK,
        Err(e) => {
            eprintln!("cvm: {e}");
            e.exit_code()
        }
    }
}
