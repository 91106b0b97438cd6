//! Run configuration: flags, then `EFROS_THREADS`, then a key=value file.

use std::path::{Path, PathBuf};

use super::Format;
use crate::error::{Error, Result};
use crate::quad::QuadratureSpec;

pub const THREADS_ENV: &str = "EFROS_THREADS";

/// Settings shared by every subcommand.
#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub threads: usize,
    pub rel_tol: Option<f64>,
    pub abs_tol: Option<f64>,
    pub output_format: Format,
    pub output_path: Option<PathBuf>,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            threads: std::thread::available_parallelism().map_or(1, |n| n.get()),
            rel_tol: None,
            abs_tol: None,
            output_format: Format::Csv,
            output_path: None,
        }
    }
}

impl RunConfig {
    /// The default quadrature spec with this run's tolerance overrides.
    pub fn spec(&self) -> QuadratureSpec {
        let mut s = QuadratureSpec::default();
        if let Some(r) = self.rel_tol {
            s.rel_tol = r;
        }
        if let Some(a) = self.abs_tol {
            s.abs_tol = a;
        }
        s
    }

    pub(crate) fn resolve(flags: Overrides, env_threads: Option<&str>, file: Option<&ConfigFile>) -> Result<Self> {
        let mut cfg = RunConfig::default();
        let file = file.cloned().unwrap_or_default();
        // The environment is only consulted when the flag is absent.
        let threads = match (flags.threads, env_threads.map(str::trim).filter(|s| !s.is_empty())) {
            (Some(n), _) => Some(n),
            (None, Some(s)) => Some(parse_threads(s, THREADS_ENV)?),
            (None, None) => file.threads,
        };
        if let Some(n) = threads {
            cfg.threads = n;
        }
        cfg.rel_tol = flags.rel_tol.or(file.rel_tol);
        cfg.abs_tol = flags.abs_tol.or(file.abs_tol);
        if let Some(f) = flags.format.or(file.format) {
            cfg.output_format = f;
        }
        cfg.output_path = flags.out.or(file.out);
        cfg.validate()?;
        Ok(cfg)
    }

    fn validate(&self) -> Result<()> {
        if self.threads < 1 {
            return Err(Error::Usage("threads must be >= 1".into()));
        }
        for (name, v) in [("rel_tol", self.rel_tol), ("abs_tol", self.abs_tol)] {
            if let Some(v) = v {
                if !(v > 0.0 && v.is_finite()) {
                    return Err(Error::Usage(format!("{name} must be positive, got {v}")));
                }
            }
        }
        Ok(())
    }
}

/// Values given on the command line.
#[derive(Debug, Default)]
pub(crate) struct Overrides {
    pub threads: Option<usize>,
    pub rel_tol: Option<f64>,
    pub abs_tol: Option<f64>,
    pub format: Option<Format>,
    pub out: Option<PathBuf>,
}

/// Contents of a config file. Blank lines and lines starting with `#` are
/// skipped.
#[derive(Debug, Default, Clone, PartialEq)]
pub(crate) struct ConfigFile {
    threads: Option<usize>,
    rel_tol: Option<f64>,
    abs_tol: Option<f64>,
    format: Option<Format>,
    out: Option<PathBuf>,
}

impl ConfigFile {
    pub(crate) fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Usage(format!("cannot read config {}: {e}", path.display())))?;
        Self::parse(&text)
    }

    pub(crate) fn parse(text: &str) -> Result<Self> {
        let mut c = ConfigFile::default();
        for (n, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| Error::Usage(format!("config line {}: expected key=value", n + 1)))?;
            let (key, value) = (key.trim(), value.trim());
            let real = |what: &str| {
                value
                    .parse::<f64>()
                    .map_err(|_| Error::Usage(format!("config line {}: {what} is not a number: {value}", n + 1)))
            };
            match key {
                "threads" => c.threads = Some(parse_threads(value, "config threads")?),
                "rel_tol" => c.rel_tol = Some(real("rel_tol")?),
                "abs_tol" => c.abs_tol = Some(real("abs_tol")?),
                "format" | "output_format" => {
                    c.format = Some(match value {
                        "csv" => Format::Csv,
                        "json" => Format::Json,
                        _ => return Err(Error::Usage(format!("config line {}: unknown format {value}", n + 1))),
                    })
                }
                "out" | "output_path" => c.out = Some(PathBuf::from(value)),
                _ => return Err(Error::Usage(format!("config line {}: unknown key {key}", n + 1))),
            }
        }
        Ok(c)
    }
}

fn parse_threads(s: &str, source: &str) -> Result<usize> {
    match s.trim().parse::<usize>() {
        Ok(n) if n >= 1 => Ok(n),
        _ => Err(Error::Usage(format!("{source} must be a positive integer, got {s:?}"))),
    }
}
