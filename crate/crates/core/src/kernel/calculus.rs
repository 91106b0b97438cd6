//! Derivatives, antiderivative, recurrence and parameter derivatives.

use super::{check_t, eval_auto, eval_extended, eval_stankovic, factor_value, nested_spec, KernelParams};
use crate::error::{Error, ErrorTrap, Result};
use crate::quad::{convolve, QuadratureSpec};
use crate::specfun::EULER_GAMMA;

/// d^n f_{ν,μ}/dt^n = f_{ν,μ-n}(t), by the Stanković integral; n ≤ 4.
pub fn derivative_n(p: KernelParams, t: f64, n: u32, spec: &QuadratureSpec) -> Result<f64> {
    if n > 4 {
        return Err(Error::domain(format!("derivative order n must be <= 4, got {n}")));
    }
    Ok(eval_stankovic(p.with_mu(p.mu - n as f64), t, spec)?.value)
}

/// t f_{ν,μ-1}(t) - (μ-1) f_{ν,μ}(t) - ν f_{ν,μ-ν}(t), each term by the
/// Stanković integral. Zero up to quadrature error.
pub fn recurrence_residual(p: KernelParams, t: f64, spec: &QuadratureSpec) -> Result<f64> {
    let f = |mu: f64| eval_stankovic(p.with_mu(mu), t, spec).map(|e| e.value);
    Ok(t * f(p.mu - 1.0)? - (p.mu - 1.0) * f(p.mu)? - p.nu * f(p.mu - p.nu)?)
}

/// ∫₀^t f_{ν,μ}(u) du = f_{ν,μ+1}(t).
pub fn antiderivative(p: KernelParams, t: f64, spec: &QuadratureSpec) -> Result<f64> {
    let q = p.with_mu(p.mu + 1.0);
    if q.mu >= 1.0 {
        Ok(eval_extended(q, t, spec)?.value)
    } else {
        Ok(eval_stankovic(q, t, spec)?.value)
    }
}

/// (ln ★ f_{ν,m})(t) + γ f_{ν,m+1}(t).
///
/// The transform of ln t is -(ln s + γ)/s, so this is the inverse transform
/// of -ln s · s^{-m-1} e^{-s^ν}.
fn log_convolution(p: KernelParams, m: f64, t: f64, spec: &QuadratureSpec) -> Result<f64> {
    check_t(t)?;
    let inner = p.with_mu(m);
    let trap = ErrorTrap::new();
    let floor = spec.abs_tol;
    let kernel = |x: f64| trap.take(|| factor_value(inner, x, spec, floor));
    let r = convolve(f64::ln, kernel, t, 0.0, 0.0, &nested_spec(spec));
    let conv = trap.check(r)?.require("log convolution")?.value;
    Ok(conv + EULER_GAMMA * eval_auto(p.with_mu(m + 1.0), t, spec)?.value)
}

/// ∂f_{ν,μ}/∂ν = ln t ★ f_{ν,μ-ν-1}(t) + γ f_{ν,μ-ν}(t).
pub fn d_dnu(p: KernelParams, t: f64, spec: &QuadratureSpec) -> Result<f64> {
    p.validate()?;
    log_convolution(p, p.mu - p.nu - 1.0, t, spec)
}

/// ∂f_{ν,μ}/∂μ = ln t ★ f_{ν,μ-1}(t) + γ f_{ν,μ}(t).
///
/// The transform of the left side is -ln s · s^{-μ} e^{-s^ν}, which fixes
/// the overall sign as +.
pub fn d_dmu(p: KernelParams, t: f64, spec: &QuadratureSpec) -> Result<f64> {
    p.validate()?;
    log_convolution(p, p.mu - 1.0, t, spec)
}
