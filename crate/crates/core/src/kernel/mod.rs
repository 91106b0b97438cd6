//! The kernel f_{ν,μ}(t) = L⁻¹{s^{-μ} e^{-s^ν}}(t) and everything built on it.
//!
//! Each representation has its own evaluator so they can be compared
//! against each other; [`eval_auto`] picks one per call.

mod auto;
mod calculus;
mod extended;
mod integral;
mod series;

use serde::Serialize;

use crate::error::{Error, Result};

pub use auto::{eval_auto, eval_auto_with_floor};
pub use calculus::{antiderivative, d_dmu, d_dnu, derivative_n, recurrence_residual};
pub use extended::{eval_extended, eval_extended_split, kernel_scaled, kernel_scaled_with_floor};
pub use integral::{
    eval_mikusinski_cos, eval_mikusinski_finite, eval_mikusinski_laplace, eval_stankovic, CosVariant,
};
pub use series::{closed_form, eval_asymptotic, eval_wright_route, WRIGHT_ROUTE_MAX_Z};

/// The pair (ν, μ). ν lies strictly inside (0, 1); μ may be any finite real,
/// although the direct integral routes need μ < 1.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct KernelParams {
    pub nu: f64,
    pub mu: f64,
}

impl KernelParams {
    pub fn new(nu: f64, mu: f64) -> Result<Self> {
        let p = KernelParams { nu, mu };
        p.validate()?;
        Ok(p)
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.nu > 0.0 && self.nu < 1.0) {
            return Err(Error::domain(format!("nu must satisfy 0 < nu < 1, got {}", self.nu)));
        }
        if !self.mu.is_finite() {
            return Err(Error::domain(format!("mu must be finite, got {}", self.mu)));
        }
        Ok(())
    }

    /// Same ν, different μ.
    pub fn with_mu(self, mu: f64) -> Self {
        KernelParams { nu: self.nu, mu }
    }
}

/// Which representation produced a value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    Stankovic,
    MikusinskiLaplace,
    MikusinskiCos,
    MikusinskiFinite,
    WrightSeries,
    Asymptotic,
    ClosedForm,
    ExtendedConvolution,
}

impl Method {
    pub fn as_str(self) -> &'static str {
        match self {
            Method::Stankovic => "stankovic",
            Method::MikusinskiLaplace => "mikusinski_laplace",
            Method::MikusinskiCos => "mikusinski_cos",
            Method::MikusinskiFinite => "mikusinski_finite",
            Method::WrightSeries => "wright_series",
            Method::Asymptotic => "asymptotic",
            Method::ClosedForm => "closed_form",
            Method::ExtendedConvolution => "extended_convolution",
        }
    }
}

impl std::fmt::Display for Method {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// One kernel value with its provenance.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct KernelEval {
    pub t: f64,
    pub params: KernelParams,
    pub value: f64,
    pub err_estimate: f64,
    pub method: Method,
    /// Integrand evaluations or series terms spent.
    pub evaluations: usize,
}

fn check_t(t: f64) -> Result<()> {
    if t > 0.0 && t.is_finite() {
        Ok(())
    } else {
        Err(Error::domain(format!("t must be finite and > 0, got {t}")))
    }
}

/// f_{ν,μ}(x) as a convolution factor: quadrature nodes may round onto
/// x = 0, where the kernel vanishes faster than any power.
pub(crate) fn factor_value(p: KernelParams, x: f64, spec: &crate::quad::QuadratureSpec, floor: f64) -> Result<f64> {
    if x == 0.0 {
        return Ok(0.0);
    }
    eval_auto_with_floor(p, x, spec, floor).map(|e| e.value)
}

/// Relative accuracy below which nested quadratures are not attempted:
/// their inner values carry rounding noise of about this size.
pub const NESTED_REL_FLOOR: f64 = 1e-13;

/// Panel budget for convolutions whose integrand is itself a kernel
/// evaluation. They settle in a handful of panels; a target they cannot
/// reach should fail quickly rather than multiply the inner cost.
pub(crate) fn nested_spec(spec: &crate::quad::QuadratureSpec) -> crate::quad::QuadratureSpec {
    crate::quad::QuadratureSpec { max_subdivisions: spec.max_subdivisions.min(100), ..*spec }
}

/// Exponent A of the small-t decay f ≈ C·A^k·e^{-A}.
pub(crate) fn saddle_exponent(nu: f64, t: f64) -> f64 {
    (1.0 - nu) * nu.powf(nu / (1.0 - nu)) * t.powf(-nu / (1.0 - nu))
}

/// Leading-order estimate of ln|f_{ν,μ}(t)| for small t, from the saddle
/// point of the inversion integral. Exact for ν = 1/2, μ = 0.
pub(crate) fn saddle_ln_estimate(p: KernelParams, t: f64) -> f64 {
    let nu = p.nu;
    let a = saddle_exponent(nu, t);
    -a + (1.0 - p.mu - 0.5 * nu) / nu * (a / (1.0 - nu)).ln()
        - 0.5 * (2.0 * std::f64::consts::PI * nu * (1.0 - nu)).ln()
}

/// Below this log-magnitude the kernel is returned as 0.
pub(crate) const LN_UNDERFLOW: f64 = -750.0;
