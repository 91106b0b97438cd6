//! Functions reachable from `eval` and `tabulate`.

use clap::{Args, ValueEnum};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::kernel::{self, CosVariant, KernelEval, KernelParams};
use crate::quad::QuadratureSpec;
use crate::specfun::{self, SeriesResult};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Function {
    /// f_{ν,μ}(t); needs --nu, --mu.
    F,
    /// Wright function W_{λ,μ}(z); needs --lambda, --mu.
    Wright,
    /// Mainardi F_ν(t); needs --nu.
    #[value(name = "mainardi_f", alias = "mainardi-f")]
    MainardiF,
    /// Mainardi M_ν(z); needs --nu.
    #[value(name = "mainardi_m", alias = "mainardi-m")]
    MainardiM,
    /// Mittag-Leffler E_{α,β}(z); needs --alpha, --beta.
    Mlf,
    /// Volterra ν(t).
    #[value(name = "volterra_nu", alias = "volterra-nu")]
    VolterraNu,
    /// Volterra ν(t, α); needs --alpha.
    #[value(name = "volterra_nu_alpha", alias = "volterra-nu-alpha")]
    VolterraNuAlpha,
    /// Volterra μ(t, β, α); needs --beta, --alpha.
    #[value(name = "volterra_mu", alias = "volterra-mu")]
    VolterraMu,
    /// Modified Bessel K_order(x); needs --order.
    #[value(name = "bessel_k", alias = "bessel-k")]
    BesselK,
}

impl Function {
    pub fn name(self) -> &'static str {
        match self {
            Function::F => "f",
            Function::Wright => "wright",
            Function::MainardiF => "mainardi_f",
            Function::MainardiM => "mainardi_m",
            Function::Mlf => "mlf",
            Function::VolterraNu => "volterra_nu",
            Function::VolterraNuAlpha => "volterra_nu_alpha",
            Function::VolterraMu => "volterra_mu",
            Function::BesselK => "bessel_k",
        }
    }
}

/// Kernel evaluation route for `f`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Auto,
    Stankovic,
    Wright,
    /// Three-term large-t expansion.
    Asymptotic,
    /// μ = 0 only.
    Laplace,
    /// μ = 0 only.
    Cos,
    /// μ = 0 only; the cosine form with both coefficients cos(πν/2).
    #[value(name = "cos_printed", alias = "cos-printed")]
    CosPrinted,
    /// μ = 0 only.
    Finite,
    Extended,
    #[value(name = "closed_form", alias = "closed-form")]
    ClosedForm,
}

/// Named parameters; each function reads the ones it needs.
#[derive(Debug, Clone, Default, Args)]
pub struct NamedParams {
    #[arg(long, allow_negative_numbers = true)]
    pub nu: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    pub mu: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    pub alpha: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    pub beta: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    pub lambda: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    pub order: Option<f64>,
}

impl NamedParams {
    fn need(&self, v: Option<f64>, name: &str, f: Function) -> Result<f64> {
        v.ok_or_else(|| Error::Usage(format!("{} needs --{name}", f.name())))
    }
}

/// One evaluated point.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EvalRecord {
    pub function: &'static str,
    pub t: f64,
    pub value: f64,
    /// Absent where the routine gives no error estimate.
    pub err_estimate: Option<f64>,
    pub method: String,
    pub evaluations: usize,
}

fn from_kernel(e: KernelEval) -> EvalRecord {
    EvalRecord {
        function: "f",
        t: e.t,
        value: e.value,
        err_estimate: Some(e.err_estimate),
        method: e.method.as_str().to_string(),
        evaluations: e.evaluations,
    }
}

fn from_series(f: Function, t: f64, s: SeriesResult) -> EvalRecord {
    EvalRecord {
        function: f.name(),
        t,
        value: s.value,
        err_estimate: Some(s.value.abs() * s.rel_error_estimate()),
        method: "series".into(),
        evaluations: s.terms_used,
    }
}

fn plain(f: Function, t: f64, value: f64, method: &str) -> EvalRecord {
    EvalRecord { function: f.name(), t, value, err_estimate: None, method: method.into(), evaluations: 0 }
}

/// Evaluates `f` at `t`. `method` applies to the kernel only.
pub fn evaluate(
    f: Function,
    p: &NamedParams,
    t: f64,
    method: Option<Method>,
    spec: &QuadratureSpec,
) -> Result<EvalRecord> {
    spec.validate()?;
    if method.is_some() && f != Function::F {
        return Err(Error::Usage(format!("--method applies to f only, not {}", f.name())));
    }
    Ok(match f {
        Function::F => {
            let kp = KernelParams::new(p.need(p.nu, "nu", f)?, p.need(p.mu, "mu", f)?)?;
            from_kernel(kernel_route(kp, t, method.unwrap_or(Method::Auto), spec)?)
        }
        Function::Wright => from_series(f, t, specfun::wright(p.need(p.lambda, "lambda", f)?, p.need(p.mu, "mu", f)?, t)?),
        Function::MainardiF => plain(f, t, specfun::mainardi_f(p.need(p.nu, "nu", f)?, t)?, "series"),
        Function::MainardiM => plain(f, t, specfun::mainardi_m(p.need(p.nu, "nu", f)?, t)?, "series"),
        Function::Mlf => {
            from_series(f, t, specfun::mittag_leffler(p.need(p.alpha, "alpha", f)?, p.need(p.beta, "beta", f)?, t)?)
        }
        Function::VolterraNu => plain(f, t, specfun::volterra_nu(t)?, "quadrature"),
        Function::VolterraNuAlpha => {
            plain(f, t, specfun::volterra_nu_alpha(t, p.need(p.alpha, "alpha", f)?)?, "quadrature")
        }
        Function::VolterraMu => plain(
            f,
            t,
            specfun::volterra_mu(t, p.need(p.beta, "beta", f)?, p.need(p.alpha, "alpha", f)?)?,
            "quadrature",
        ),
        Function::BesselK => plain(f, t, specfun::bessel_k(p.need(p.order, "order", f)?, t)?, "bessel"),
    })
}

fn kernel_route(p: KernelParams, t: f64, method: Method, spec: &QuadratureSpec) -> Result<KernelEval> {
    let zero_mu = || {
        if p.mu == 0.0 {
            Ok(p.nu)
        } else {
            Err(Error::domain(format!("method {method:?} needs mu = 0, got {}", p.mu)))
        }
    };
    match method {
        Method::Auto => kernel::eval_auto(p, t, spec),
        Method::Stankovic => kernel::eval_stankovic(p, t, spec),
        Method::Wright => kernel::eval_wright_route(p, t),
        Method::Asymptotic => kernel::eval_asymptotic(p, t, 3),
        Method::Laplace => kernel::eval_mikusinski_laplace(zero_mu()?, t, spec),
        Method::Cos => kernel::eval_mikusinski_cos(zero_mu()?, t, CosVariant::SinCorrected, spec),
        Method::CosPrinted => kernel::eval_mikusinski_cos(zero_mu()?, t, CosVariant::Printed, spec),
        Method::Finite => kernel::eval_mikusinski_finite(zero_mu()?, t, spec),
        Method::Extended => kernel::eval_extended(p, t, spec),
        Method::ClosedForm => kernel::closed_form(p, t)?
            .ok_or_else(|| Error::domain(format!("no closed form for nu = {}, mu = {}", p.nu, p.mu))),
    }
}
