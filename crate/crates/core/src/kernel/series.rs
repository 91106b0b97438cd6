//! Series, asymptotic and closed-form routes.

use std::f64::consts::PI;

use super::{check_t, KernelEval, KernelParams, Method};
use crate::error::{Error, Result};
use crate::specfun::{bessel_k, recip_gamma, wright};

/// Largest |z| = t^{-ν} for which [`eval_auto`](super::eval_auto) tries the
/// Wright series before switching to an integral.
pub const WRIGHT_ROUTE_MAX_Z: f64 = 15.0;

/// Largest ratio of the biggest series term to the result that the Wright
/// route accepts.
pub const WRIGHT_ROUTE_MAX_LOSS: f64 = 1e14;

/// f_{ν,μ}(t) = t^{μ-1} W_{-ν,μ}(-t^{-ν}). Valid for every real μ.
pub fn eval_wright_route(p: KernelParams, t: f64) -> Result<KernelEval> {
    p.validate()?;
    check_t(t)?;
    let s = wright(-p.nu, p.mu, -t.powf(-p.nu))?;
    // The terms are summed in double-double once the loss passes 1e3, so
    // only a loss near the double-double limit is refused.
    if s.max_term > WRIGHT_ROUTE_MAX_LOSS * s.value.abs() {
        return Err(Error::Cancellation(format!(
            "Wright series at nu = {}, t = {t}: largest term {:e} against value {:e}",
            p.nu, s.max_term, s.value
        )));
    }
    let scale = t.powf(p.mu - 1.0);
    let value = scale * s.value;
    Ok(KernelEval {
        t,
        params: p,
        value,
        err_estimate: value.abs() * s.rel_error_estimate(),
        method: Method::WrightSeries,
        evaluations: s.terms_used,
    })
}

fn asymptotic_term(p: KernelParams, t: f64, k: usize) -> f64 {
    let mut fact = 1.0;
    for j in 2..=k {
        fact *= j as f64;
    }
    let sign = if k.is_multiple_of(2) { 1.0 } else { -1.0 };
    sign * t.powf(p.mu - 1.0 - k as f64 * p.nu) * recip_gamma(p.mu - k as f64 * p.nu) / fact
}

/// Large-t expansion t^{μ-1} Σ_{k<n} (-t^{-ν})^k / (k! Γ(μ - kν)), n ∈ [1, 3].
///
/// The error estimate is the first omitted term that is not zero; terms with
/// μ - kν at a pole of Γ vanish and say nothing about the remainder.
pub fn eval_asymptotic(p: KernelParams, t: f64, n_terms: usize) -> Result<KernelEval> {
    p.validate()?;
    check_t(t)?;
    if t < 10.0 {
        return Err(Error::domain(format!("the asymptotic expansion needs t >= 10, got {t}")));
    }
    if !(1..=3).contains(&n_terms) {
        return Err(Error::domain(format!("n_terms must lie in [1, 3], got {n_terms}")));
    }
    let value: f64 = (0..n_terms).map(|k| asymptotic_term(p, t, k)).sum();
    let err = (n_terms..n_terms + 8)
        .map(|k| asymptotic_term(p, t, k))
        .find(|x| *x != 0.0)
        .unwrap_or(0.0)
        .abs();
    Ok(KernelEval { t, params: p, value, err_estimate: err, method: Method::Asymptotic, evaluations: n_terms })
}

fn is(x: f64, y: f64) -> bool {
    (x - y).abs() <= 4.0 * f64::EPSILON
}

/// Known closed forms, or `None`:
/// - ν = 1/2, μ = 0: e^{-1/(4t)} / (2√π t^{3/2})
/// - ν = 1/2, μ = 1/2: e^{-1/(4t)} / √(πt)
/// - ν = 1/3, μ = 2/3: K_{1/3}(2/√(27t)) / (π√t)
pub fn closed_form(p: KernelParams, t: f64) -> Result<Option<KernelEval>> {
    p.validate()?;
    check_t(t)?;
    let value = if is(p.nu, 0.5) && p.mu == 0.0 {
        (-0.25 / t).exp() / (2.0 * PI.sqrt() * t.powf(1.5))
    } else if is(p.nu, 0.5) && is(p.mu, 0.5) {
        (-0.25 / t).exp() / (PI * t).sqrt()
    } else if is(p.nu, 1.0 / 3.0) && is(p.mu, 2.0 / 3.0) {
        let x = 2.0 / (27.0 * t).sqrt();
        // K_{1/3}(x) ~ e^{-x} underflows long before t reaches 0.
        if x > 700.0 {
            0.0
        } else {
            bessel_k(1.0 / 3.0, x)? / (PI * t.sqrt())
        }
    } else {
        return Ok(None);
    };
    Ok(Some(KernelEval {
        t,
        params: p,
        value,
        err_estimate: 1e-14 * value.abs(),
        method: Method::ClosedForm,
        evaluations: 1,
    }))
}
