//! μ ≥ 1 through power convolution, and the two-argument kernel.

use super::{check_t, eval_auto_with_floor, factor_value, nested_spec, KernelEval, KernelParams, Method};
use crate::error::{Error, ErrorTrap, Result};
use crate::quad::{convolve, QuadratureSpec};
use crate::specfun::{gamma, recip_gamma};

/// f_{ν,ρ}(t) for ρ ≥ 1, as (t^{λ-1}/Γ(λ)) ★ f_{ν,ρ-λ} with λ = ⌈ρ - 1/2⌉,
/// which leaves the inner order ρ - λ in [-1/2, 1/2). For ρ = 1 this is the
/// running integral ∫₀^t f_{ν,0}.
pub fn eval_extended(p: KernelParams, t: f64, spec: &QuadratureSpec) -> Result<KernelEval> {
    p.validate()?;
    if !(p.mu >= 1.0) {
        return Err(Error::domain(format!("eval_extended needs mu >= 1, got {}", p.mu)));
    }
    eval_extended_split(p, (p.mu - 0.5).ceil(), t, spec)
}

/// (t^{λ-1}/Γ(λ)) ★ f_{ν,μ-λ} with a caller-chosen λ > 0 such that μ - λ < 1.
/// Any admissible λ gives the same function; comparing two splits is a
/// consistency check.
pub fn eval_extended_split(p: KernelParams, lambda: f64, t: f64, spec: &QuadratureSpec) -> Result<KernelEval> {
    p.validate()?;
    check_t(t)?;
    if !(lambda > 0.0) {
        return Err(Error::domain(format!("split order lambda must be > 0, got {lambda}")));
    }
    let inner = p.with_mu(p.mu - lambda);
    if !(inner.mu < 1.0) {
        return Err(Error::domain(format!(
            "split leaves inner order mu - lambda = {} >= 1",
            inner.mu
        )));
    }
    split_with_floor(p, lambda, t, spec, spec.abs_tol)
}

/// [`eval_extended_split`] with the inner kernel needed only to absolute
/// accuracy `inner_floor`. Validation is left to the callers.
pub(crate) fn split_with_floor(
    p: KernelParams,
    lambda: f64,
    t: f64,
    spec: &QuadratureSpec,
    inner_floor: f64,
) -> Result<KernelEval> {
    let inner = p.with_mu(p.mu - lambda);
    let g_lambda = gamma(lambda)?;
    let power = move |x: f64| if lambda == 1.0 { 1.0 } else { x.powf(lambda - 1.0) / g_lambda };
    let trap = ErrorTrap::new();
    let kernel = |x: f64| trap.take(|| factor_value(inner, x, spec, inner_floor));
    let r = convolve(power, kernel, t, lambda - 1.0, 0.0, &nested_spec(spec));
    let r = trap.check(r)?.require("power convolution")?;
    Ok(KernelEval {
        t,
        params: p,
        value: r.value,
        err_estimate: r.err_estimate,
        method: Method::ExtendedConvolution,
        evaluations: r.evaluations,
    })
}

/// K(t, u) = L⁻¹{e^{-u s^ν} s^{-μ}}(t) = u^{(μ-1)/ν} f_{ν,μ}(t u^{-1/ν}),
/// with the limit K(t, 0) = t^{μ-1}/Γ(μ).
pub fn kernel_scaled(p: KernelParams, t: f64, u: f64, spec: &QuadratureSpec) -> Result<f64> {
    kernel_scaled_with_floor(p, t, u, spec, 0.0)
}

/// [`kernel_scaled`] needed only to absolute accuracy `floor`; see
/// [`eval_auto_with_floor`](super::eval_auto_with_floor).
pub fn kernel_scaled_with_floor(p: KernelParams, t: f64, u: f64, spec: &QuadratureSpec, floor: f64) -> Result<f64> {
    p.validate()?;
    check_t(t)?;
    if !(u >= 0.0) || !u.is_finite() {
        return Err(Error::domain(format!("kernel scale u must be finite and >= 0, got {u}")));
    }
    if u == 0.0 {
        return Ok(t.powf(p.mu - 1.0) * recip_gamma(p.mu));
    }
    let ln_u = u.ln();
    let arg = t * (-ln_u / p.nu).exp();
    if arg == 0.0 {
        return Ok(0.0);
    }
    if !arg.is_finite() {
        return Ok(t.powf(p.mu - 1.0) * recip_gamma(p.mu));
    }
    let ln_scale = (p.mu - 1.0) / p.nu * ln_u;
    let inner_floor = if floor > 0.0 { (floor.ln() - ln_scale).exp() } else { 0.0 };
    let v = eval_auto_with_floor(p, arg, spec, inner_floor)?.value;
    if v == 0.0 {
        return Ok(0.0);
    }
    // u^{(μ-1)/ν} can overflow on its own while the product is moderate.
    Ok(v.signum() * (v.abs().ln() + ln_scale).exp())
}
