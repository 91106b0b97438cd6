//! CSV and JSON emitters. Floats are written in shortest round-trip form.

use std::io::Write;

use clap::ValueEnum;
use serde::Serialize;

use super::functions::EvalRecord;
use super::selftest::Check;
use crate::error::{Error, Result};
use crate::identities::IdentityReport;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

fn csv_rows<T: Serialize>(out: &mut dyn Write, rows: impl IntoIterator<Item = T>, header: &[&str]) -> Result<()> {
    let mut w = csv::WriterBuilder::new().has_headers(false).from_writer(out);
    w.write_record(header).map_err(csv_err)?;
    for r in rows {
        w.serialize(r).map_err(csv_err)?;
    }
    w.flush()?;
    Ok(())
}

fn csv_err(e: csv::Error) -> Error {
    Error::Io(e.to_string())
}

fn json<T: Serialize + ?Sized>(out: &mut dyn Write, v: &T) -> Result<()> {
    serde_json::to_writer_pretty(&mut *out, v).map_err(|e| Error::Io(e.to_string()))?;
    writeln!(out)?;
    Ok(())
}

pub(crate) fn records(out: &mut dyn Write, format: Format, rows: &[EvalRecord], as_array: bool) -> Result<()> {
    match format {
        Format::Csv => csv_rows(out, rows, &["function", "t", "value", "err_estimate", "method", "evaluations"]),
        Format::Json if as_array => json(out, rows),
        Format::Json => json(out, &rows[0]),
    }
}

#[derive(Serialize)]
struct PointRow<'a> {
    id: &'a str,
    variant: &'static str,
    identity_passed: bool,
    nu: f64,
    mu: f64,
    lambda: Option<f64>,
    alpha: Option<f64>,
    beta: Option<f64>,
    rho: Option<f64>,
    xi: Option<f64>,
    t: f64,
    lhs: f64,
    rhs: f64,
    abs_residual: f64,
    rel_residual: f64,
    error: Option<&'a str>,
}

pub(crate) fn reports(out: &mut dyn Write, format: Format, reports: &[IdentityReport], as_array: bool) -> Result<()> {
    match format {
        Format::Csv => {
            let rows = reports.iter().flat_map(|r| {
                r.points.iter().map(move |p| PointRow {
                    id: &r.id,
                    variant: r.variant.as_str(),
                    identity_passed: r.passed,
                    nu: p.params.nu,
                    mu: p.params.mu,
                    lambda: p.params.lambda,
                    alpha: p.params.alpha,
                    beta: p.params.beta,
                    rho: p.params.rho,
                    xi: p.params.xi,
                    t: p.t,
                    lhs: p.lhs,
                    rhs: p.rhs,
                    abs_residual: p.abs_residual,
                    rel_residual: p.rel_residual,
                    error: p.error.as_deref(),
                })
            });
            csv_rows(
                out,
                rows,
                &[
                    "id",
                    "variant",
                    "identity_passed",
                    "nu",
                    "mu",
                    "lambda",
                    "alpha",
                    "beta",
                    "rho",
                    "xi",
                    "t",
                    "lhs",
                    "rhs",
                    "abs_residual",
                    "rel_residual",
                    "error",
                ],
            )
        }
        Format::Json if as_array => json(out, reports),
        Format::Json => json(out, &reports[0]),
    }
}

pub(crate) fn selftest(out: &mut dyn Write, format: Format, rows: &[Check]) -> Result<()> {
    match format {
        Format::Csv => csv_rows(
            out,
            rows,
            &["check", "case", "value", "reference", "rel_error", "tolerance", "passed", "note"],
        ),
        Format::Json => json(out, rows),
    }
}
