//! Efros integral identities for the kernel family.
//!
//! Each identity equates an integral of a weight g(u) against the
//! two-argument kernel K(t, u) = L⁻¹{e^{-u s^ν} s^{-μ}}(t) with an
//! expression in t alone: ∫ g(u) K(t, u) du = L⁻¹{G(s^ν) s^{-μ}}(t).
//! The catalog lists 24 of them together with parameter domains and
//! default evaluation grids; [`verify_identity`] compares both sides.

mod catalog;
mod eval;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::quad::QuadratureSpec;

pub use catalog::{catalog, catalog_json, find, CATALOG_SIZE};
pub use eval::{efros_lhs, rhs_value, rhs_variant};

/// Parameters of one identity evaluation. ν and μ are the kernel
/// parameters; the rest belong to the weight and are present only where
/// the identity uses them.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct IdentityParams {
    pub nu: f64,
    pub mu: f64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lambda: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub alpha: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub beta: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rho: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub xi: Option<f64>,
}

impl IdentityParams {
    pub fn new(nu: f64, mu: f64) -> Self {
        IdentityParams { nu, mu, ..Default::default() }
    }

    pub fn lambda(mut self, v: f64) -> Self {
        self.lambda = Some(v);
        self
    }

    pub fn alpha(mut self, v: f64) -> Self {
        self.alpha = Some(v);
        self
    }

    pub fn beta(mut self, v: f64) -> Self {
        self.beta = Some(v);
        self
    }

    pub fn rho(mut self, v: f64) -> Self {
        self.rho = Some(v);
        self
    }

    pub fn xi(mut self, v: f64) -> Self {
        self.xi = Some(v);
        self
    }

    fn get(&self, p: Param) -> Option<f64> {
        match p {
            Param::Lambda => self.lambda,
            Param::Alpha => self.alpha,
            Param::Beta => self.beta,
            Param::Rho => self.rho,
            Param::Xi => self.xi,
        }
    }

    /// The named weight parameter, or a domain error saying which identity
    /// needed it.
    pub(crate) fn require(&self, p: Param, id: &str) -> Result<f64> {
        self.get(p)
            .ok_or_else(|| Error::domain(format!("{id} needs parameter {}", p.name())))
    }
}

/// Optional weight parameters.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Param {
    Lambda,
    Alpha,
    Beta,
    Rho,
    Xi,
}

impl Param {
    pub fn name(self) -> &'static str {
        match self {
            Param::Lambda => "lambda",
            Param::Alpha => "alpha",
            Param::Beta => "beta",
            Param::Rho => "rho",
            Param::Xi => "xi",
        }
    }
}

/// One evaluation point.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GridPoint {
    #[serde(flatten)]
    pub params: IdentityParams,
    pub t: f64,
}

/// How the right-hand side is built.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum RhsKind {
    ClosedForm,
    Convolution,
    KernelValue,
    VolterraRecurrence,
}

/// Integration range of the weight.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum WeightRange {
    /// (0, ∞)
    Positive,
    /// (0, λ)
    BelowLambda,
    /// (λ, ∞)
    AboveLambda,
    /// (0, 1)
    Unit,
    /// No Efros integral: the left side is a convolution or a plain value.
    None,
}

/// Which right-hand side to evaluate. `Standard` is the form derived from
/// the transform pair and is what verification uses; `Printed` and
/// `Alternate` keep the commonly quoted misprints of a few identities so
/// that their failure stays demonstrable.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Variant {
    Standard,
    Printed,
    Alternate,
}

impl Variant {
    pub fn as_str(self) -> &'static str {
        match self {
            Variant::Standard => "standard",
            Variant::Printed => "printed",
            Variant::Alternate => "alternate",
        }
    }
}

/// A named validity condition on the parameters.
#[derive(Clone, Copy)]
pub struct Constraint {
    pub name: &'static str,
    check: fn(&IdentityParams) -> bool,
}

impl Constraint {
    pub(crate) const fn new(name: &'static str, check: fn(&IdentityParams) -> bool) -> Self {
        Constraint { name, check }
    }

    pub fn holds(&self, p: &IdentityParams) -> bool {
        (self.check)(p)
    }
}

impl std::fmt::Debug for Constraint {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name)
    }
}

/// One catalog entry.
#[derive(Debug, Clone)]
pub struct Identity {
    pub id: &'static str,
    /// The identity as an equation.
    pub paper_eq: &'static str,
    /// The transform pair g(t) ↔ G(s) it rests on.
    pub quote: &'static str,
    pub weight_desc: &'static str,
    pub range: WeightRange,
    pub rhs_kind: RhsKind,
    pub params: &'static [Param],
    pub param_domain: Vec<Constraint>,
    pub default_grid: Vec<GridPoint>,
    /// Right-hand sides available; the first is [`Variant::Standard`].
    pub variants: &'static [Variant],
    pub(crate) form: eval::Form,
}

impl Identity {
    /// Checks that every parameter the identity uses is present and that
    /// the point satisfies each constraint.
    pub fn check_domain(&self, p: &IdentityParams, t: f64) -> Result<()> {
        if !(t > 0.0 && t.is_finite()) {
            return Err(Error::domain(format!("{}: t must be finite and > 0, got {t}", self.id)));
        }
        if !(p.nu > 0.0 && p.nu < 1.0) {
            return Err(Error::domain(format!("{}: nu must satisfy 0 < nu < 1, got {}", self.id, p.nu)));
        }
        for &q in self.params {
            let v = p.require(q, self.id)?;
            if !v.is_finite() {
                return Err(Error::domain(format!("{}: {} must be finite", self.id, q.name())));
            }
        }
        for c in &self.param_domain {
            if !c.holds(p) {
                return Err(Error::domain(format!("{}: constraint {} violated at {p:?}", self.id, c.name)));
            }
        }
        Ok(())
    }
}

/// Both sides of an identity at one point.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ResidualPoint {
    pub params: IdentityParams,
    pub t: f64,
    pub lhs: f64,
    pub rhs: f64,
    pub abs_residual: f64,
    pub rel_residual: f64,
    /// Set when either side failed to evaluate; the point then fails.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

/// Result of checking one identity over a grid.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct IdentityReport {
    pub id: String,
    pub variant: Variant,
    pub points: Vec<ResidualPoint>,
    pub max_rel_residual: f64,
    pub passed: bool,
    pub tolerance_used: f64,
}

/// Below this |rhs| a point is judged on its absolute residual.
pub const NEAR_ZERO_RHS: f64 = 1e-10;

pub const DEFAULT_TOLERANCE: f64 = 1e-6;

fn evaluate_point(identity: &Identity, variant: Variant, g: &GridPoint, spec: &QuadratureSpec) -> ResidualPoint {
    let both = efros_lhs(identity, &g.params, g.t, spec)
        .and_then(|l| rhs_variant(identity, variant, &g.params, g.t, spec).map(|r| (l, r)));
    match both {
        Ok((lhs, rhs)) => {
            let abs_residual = (lhs - rhs).abs();
            let rel_residual = if rhs != 0.0 { abs_residual / rhs.abs() } else { f64::INFINITY };
            ResidualPoint { params: g.params, t: g.t, lhs, rhs, abs_residual, rel_residual, error: None }
        }
        Err(e) => ResidualPoint {
            params: g.params,
            t: g.t,
            lhs: f64::NAN,
            rhs: f64::NAN,
            abs_residual: f64::NAN,
            rel_residual: f64::NAN,
            error: Some(match e {
                Error::Identity { .. } => e.to_string(),
                e => Error::Identity { id: identity.id.to_string(), source: Box::new(e) }.to_string(),
            }),
        },
    }
}

fn assemble(identity: &Identity, variant: Variant, points: Vec<ResidualPoint>, tol: f64) -> IdentityReport {
    let scale = points.iter().filter(|p| p.error.is_none()).map(|p| p.rhs.abs()).fold(0.0, f64::max);
    let point_ok = |p: &ResidualPoint| {
        p.error.is_none()
            && (p.rel_residual <= tol || (p.rhs.abs() < NEAR_ZERO_RHS && p.abs_residual <= tol * scale.min(1.0)))
    };
    let passed = !points.is_empty() && points.iter().all(point_ok);
    let max_rel_residual = points
        .iter()
        .map(|p| if p.error.is_some() { f64::INFINITY } else { p.rel_residual })
        .fold(0.0, f64::max);
    IdentityReport {
        id: identity.id.to_string(),
        variant,
        points,
        max_rel_residual,
        passed,
        tolerance_used: tol,
    }
}

fn grid_for<'a>(identity: &'a Identity, grid: Option<&'a [GridPoint]>) -> Result<&'a [GridPoint]> {
    let grid = grid.unwrap_or(&identity.default_grid);
    for g in grid {
        identity.check_domain(&g.params, g.t)?;
    }
    Ok(grid)
}

/// Evaluates both sides of identity `id` on `grid` (its default grid when
/// `None`). Points are evaluated in parallel on the current rayon pool;
/// the report keeps grid order.
pub fn verify_identity(
    id: &str,
    grid: Option<&[GridPoint]>,
    tol: f64,
    spec: &QuadratureSpec,
) -> Result<IdentityReport> {
    verify_variant(id, Variant::Standard, grid, tol, spec)
}

/// As [`verify_identity`], for a chosen right-hand side.
pub fn verify_variant(
    id: &str,
    variant: Variant,
    grid: Option<&[GridPoint]>,
    tol: f64,
    spec: &QuadratureSpec,
) -> Result<IdentityReport> {
    spec.validate()?;
    if !(tol > 0.0) {
        return Err(Error::domain(format!("tolerance must be > 0, got {tol}")));
    }
    let identity = find(id)?;
    if !identity.variants.contains(&variant) {
        return Err(Error::domain(format!("{id} has no {} variant", variant.as_str())));
    }
    let grid = grid_for(identity, grid)?;
    let points = grid.par_iter().map(|g| evaluate_point(identity, variant, g, spec)).collect();
    Ok(assemble(identity, variant, points, tol))
}

/// Every catalog identity on its default grid, in catalog order. Failures
/// are recorded in the reports rather than aborting the run.
pub fn verify_all(tol: f64, spec: &QuadratureSpec) -> Result<Vec<IdentityReport>> {
    spec.validate()?;
    if !(tol > 0.0) {
        return Err(Error::domain(format!("tolerance must be > 0, got {tol}")));
    }
    let cat = catalog();
    // Flatten to (identity, point) pairs so that long identities do not
    // serialize the pool.
    let jobs: Vec<(usize, &GridPoint)> =
        cat.iter().enumerate().flat_map(|(i, id)| id.default_grid.iter().map(move |g| (i, g))).collect();
    let results: Vec<ResidualPoint> =
        jobs.par_iter().map(|&(i, g)| evaluate_point(&cat[i], Variant::Standard, g, spec)).collect();
    let mut it = results.into_iter();
    Ok(cat
        .iter()
        .map(|id| {
            let points = it.by_ref().take(id.default_grid.len()).collect();
            assemble(id, Variant::Standard, points, tol)
        })
        .collect())
}
