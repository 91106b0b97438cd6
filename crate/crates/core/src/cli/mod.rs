//! The `efros` command line: `eval`, `tabulate`, `verify` and `selftest`.
//!
//! Exit status is 0 on success, 1 when a verification or self-test check
//! fails, 2 for usage and parameter-domain errors and 3 for numerical
//! failures.

mod config;
mod functions;
mod output;
mod selftest;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::identities::{self, Variant, DEFAULT_TOLERANCE};

pub use config::{RunConfig, THREADS_ENV};
pub use functions::{evaluate, EvalRecord, Function, Method, NamedParams};
pub use output::Format;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_NUMERICAL: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "efros", version, about = "Evaluate f_{nu,mu}(t) = L^-1{s^-mu exp(-s^nu)} and check its integral identities")]
struct Cli {
    /// Worker threads (overrides EFROS_THREADS and the config file).
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    /// Write output here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// key=value file with defaults for threads, rel_tol, abs_tol, format and out.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    #[arg(long, global = true)]
    rel_tol: Option<f64>,
    #[arg(long, global = true)]
    abs_tol: Option<f64>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Evaluate one function at one point.
    Eval {
        #[arg(value_enum)]
        function: Function,
        #[command(flatten)]
        params: NamedParams,
        /// Argument (t for the kernel, z or x for the special functions).
        #[arg(long = "t", visible_aliases = ["z", "x"], allow_negative_numbers = true)]
        t: f64,
        #[arg(long, value_enum)]
        method: Option<Method>,
    },
    /// Evaluate one function on a grid of arguments.
    Tabulate {
        #[arg(value_enum)]
        function: Function,
        #[command(flatten)]
        params: NamedParams,
        #[arg(long, allow_negative_numbers = true)]
        t_min: f64,
        #[arg(long, allow_negative_numbers = true)]
        t_max: f64,
        #[arg(long, default_value_t = 50)]
        points: usize,
        #[arg(long, value_enum, default_value_t = Spacing::Linear)]
        spacing: Spacing,
        #[arg(long, value_enum)]
        method: Option<Method>,
    },
    /// Check catalog identities on their default grids.
    Verify(VerifyArgs),
    /// Run the built-in consistency checks.
    Selftest,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    /// Identity id such as ID-07.
    #[arg(long, conflicts_with = "all")]
    identity: Option<String>,
    /// Every identity (the default when no id is given).
    #[arg(long)]
    all: bool,
    #[arg(long, default_value_t = DEFAULT_TOLERANCE)]
    tol: f64,
    /// Right-hand side to use; only meaningful with --identity.
    #[arg(long, value_enum, default_value_t = VariantArg::Standard, requires = "identity")]
    variant: VariantArg,
    /// Print the catalog as JSON and exit.
    #[arg(long, conflicts_with_all = ["identity", "all"])]
    catalog: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Spacing {
    Linear,
    Log,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum VariantArg {
    Standard,
    Printed,
    Alternate,
}

impl From<VariantArg> for Variant {
    fn from(v: VariantArg) -> Self {
        match v {
            VariantArg::Standard => Variant::Standard,
            VariantArg::Printed => Variant::Printed,
            VariantArg::Alternate => Variant::Alternate,
        }
    }
}

/// Exit status for an error.
pub fn exit_code(e: &Error) -> i32 {
    if e.is_usage() {
        EXIT_USAGE
    } else {
        EXIT_NUMERICAL
    }
}

/// Runs the process: arguments, `EFROS_THREADS` and standard streams.
pub fn main() -> i32 {
    let env_threads = std::env::var(THREADS_ENV).ok();
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run(std::env::args_os(), env_threads.as_deref(), &mut stdout.lock(), &mut stderr.lock())
}

/// Runs one invocation against the given streams and returns its exit
/// status. `args` includes the program name.
pub fn run<I, T>(args: I, env_threads: Option<&str>, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{}", e.render());
                    return EXIT_OK;
                }
                _ => EXIT_USAGE,
            };
            let _ = write!(err, "{}", e.render());
            return code;
        }
    };
    match dispatch(cli, env_threads, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

fn dispatch(cli: Cli, env_threads: Option<&str>, out: &mut dyn Write) -> Result<i32> {
    let file = match &cli.config {
        Some(path) => Some(config::ConfigFile::load(path)?),
        None => None,
    };
    let cfg = RunConfig::resolve(
        config::Overrides {
            threads: cli.threads,
            rel_tol: cli.rel_tol,
            abs_tol: cli.abs_tol,
            format: cli.format,
            out: cli.out.clone(),
        },
        env_threads,
        file.as_ref(),
    )?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cfg.threads)
        .build()
        .map_err(|e| Error::Usage(format!("cannot start {} threads: {e}", cfg.threads)))?;
    let mut buf = Vec::new();
    let code = pool.install(|| execute(&cli.command, &cfg, &mut buf))?;
    match &cfg.output_path {
        Some(path) => std::fs::write(path, &buf)?,
        None => out.write_all(&buf)?,
    }
    Ok(code)
}

fn execute(command: &Command, cfg: &RunConfig, out: &mut Vec<u8>) -> Result<i32> {
    let spec = cfg.spec();
    match command {
        Command::Eval { function, params, t, method } => {
            let rec = evaluate(*function, params, *t, *method, &spec)?;
            output::records(out, cfg.output_format, std::slice::from_ref(&rec), false)?;
            Ok(EXIT_OK)
        }
        Command::Tabulate { function, params, t_min, t_max, points, spacing, method } => {
            let grid = abscissae(*t_min, *t_max, *points, *spacing)?;
            let rows: Vec<Result<EvalRecord>> =
                grid.par_iter().map(|&t| evaluate(*function, params, t, *method, &spec)).collect();
            let rows = rows.into_iter().collect::<Result<Vec<_>>>()?;
            output::records(out, cfg.output_format, &rows, true)?;
            Ok(EXIT_OK)
        }
        Command::Verify(v) => verify(v, cfg, out),
        Command::Selftest => {
            let rows = selftest::run(&spec);
            output::selftest(out, cfg.output_format, &rows)?;
            Ok(if rows.iter().all(|r| r.passed) { EXIT_OK } else { EXIT_FAILED })
        }
    }
}

fn verify(v: &VerifyArgs, cfg: &RunConfig, out: &mut Vec<u8>) -> Result<i32> {
    let spec = cfg.spec();
    if v.catalog {
        out.extend_from_slice(identities::catalog_json().as_bytes());
        out.push(b'\n');
        return Ok(EXIT_OK);
    }
    let reports = match &v.identity {
        Some(id) => vec![identities::verify_variant(id, v.variant.into(), None, v.tol, &spec)?],
        None => identities::verify_all(v.tol, &spec)?,
    };
    output::reports(out, cfg.output_format, &reports, v.identity.is_none())?;
    Ok(if reports.iter().all(|r| r.passed) { EXIT_OK } else { EXIT_FAILED })
}

/// `points` abscissae from `t_min` to `t_max` inclusive.
fn abscissae(t_min: f64, t_max: f64, points: usize, spacing: Spacing) -> Result<Vec<f64>> {
    if !(t_min < t_max) || !t_min.is_finite() || !t_max.is_finite() {
        return Err(Error::Usage(format!("need finite t_min < t_max, got {t_min} and {t_max}")));
    }
    if points < 2 {
        return Err(Error::Usage(format!("points must be >= 2, got {points}")));
    }
    if spacing == Spacing::Log && !(t_min > 0.0) {
        return Err(Error::Usage(format!("log spacing needs t_min > 0, got {t_min}")));
    }
    let last = (points - 1) as f64;
    let mut grid: Vec<f64> = (0..points)
        .map(|i| {
            let s = i as f64 / last;
            match spacing {
                Spacing::Linear => t_min + s * (t_max - t_min),
                Spacing::Log => (t_min.ln() + s * (t_max.ln() - t_min.ln())).exp(),
            }
        })
        .collect();
    grid[0] = t_min;
    grid[points - 1] = t_max;
    Ok(grid)
}
