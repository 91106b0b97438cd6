//! Volterra functions ν(t), ν(t, α) and μ(t, β, α).

use serde::{Deserialize, Serialize};

use super::gamma::{digamma, ln_gamma_positive};
use crate::error::{Error, Result};
use crate::quad::{integrate_panels, QuadratureSpec};

/// Parameters of the Volterra family: shift α, power β and argument scale λ.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct VolterraParams {
    pub alpha: f64,
    pub beta: f64,
    pub lambda: f64,
}

impl VolterraParams {
    pub fn validate(&self) -> Result<()> {
        if !(self.alpha >= 0.0) {
            return Err(Error::domain(format!("Volterra alpha must be >= 0, got {}", self.alpha)));
        }
        if !(self.beta >= 0.0) {
            return Err(Error::domain(format!("Volterra beta must be >= 0, got {}", self.beta)));
        }
        if !(self.lambda > 0.0) {
            return Err(Error::domain(format!("Volterra lambda must be > 0, got {}", self.lambda)));
        }
        Ok(())
    }
}

const SEARCH_LIMIT: f64 = 1e4;
/// ln(1e-16): tail cutoff relative to the peak.
const LN_CUTOFF: f64 = -36.841_361_487_904_734;

/// ∫₀^∞ u^β t^{u+α} / Γ(u+α+1) du, without the 1/Γ(β+1) factor.
fn volterra_integral(t: f64, beta: f64, alpha: f64) -> Result<f64> {
    if !(t > 0.0) || !t.is_finite() {
        return Err(Error::domain(format!("Volterra functions require t > 0, got {t}")));
    }
    if !(alpha >= 0.0) {
        return Err(Error::domain(format!("Volterra alpha must be >= 0, got {alpha}")));
    }
    if !(beta >= 0.0) {
        return Err(Error::domain(format!("Volterra beta must be >= 0, got {beta}")));
    }
    let ln_t = t.ln();
    let log_integrand = |u: f64| -> f64 {
        let pow = if beta == 0.0 { 0.0 } else { beta * u.ln() };
        pow + (u + alpha) * ln_t - ln_gamma_positive(u + alpha + 1.0)
    };
    // d/du of the log integrand, decreasing in u.
    let slope = |u: f64| -> f64 {
        let psi = digamma(u + alpha + 1.0).unwrap_or(f64::NAN);
        ln_t + if beta == 0.0 { 0.0 } else { beta / u } - psi
    };

    let u_peak = if beta == 0.0 && slope(0.0) <= 0.0 {
        0.0
    } else {
        let mut hi = 1.0;
        while slope(hi) > 0.0 {
            hi *= 2.0;
            if hi > SEARCH_LIMIT {
                return Err(Error::TailNotFound { searched_to: hi });
            }
        }
        let mut lo = 0.0;
        for _ in 0..80 {
            let mid = 0.5 * (lo + hi);
            if slope(mid) > 0.0 {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        0.5 * (lo + hi)
    };
    let ln_peak = log_integrand(u_peak.max(f64::MIN_POSITIVE));
    let mut step = 1.0;
    let u_cut = loop {
        let u = u_peak + step;
        if u > SEARCH_LIMIT {
            return Err(Error::TailNotFound { searched_to: u });
        }
        if log_integrand(u) < ln_peak + LN_CUTOFF {
            break u;
        }
        step *= 1.5;
    };

    let mut points = vec![0.0];
    if u_peak > 0.0 {
        points.push(u_peak);
    }
    points.push(u_cut);
    let spec = QuadratureSpec { rel_tol: 1e-12, abs_tol: 1e-300, ..Default::default() };
    let integrand = |u: f64| {
        if u == 0.0 && beta > 0.0 {
            return 0.0;
        }
        log_integrand(u).exp()
    };
    let r = integrate_panels(integrand, &points, &spec)?.require("volterra")?;
    Ok(r.value)
}

/// ν(t) = ∫₀^∞ t^u / Γ(u+1) du.
pub fn volterra_nu(t: f64) -> Result<f64> {
    volterra_integral(t, 0.0, 0.0)
}

/// ν(t, α) = ∫₀^∞ t^{u+α} / Γ(u+α+1) du.
pub fn volterra_nu_alpha(t: f64, alpha: f64) -> Result<f64> {
    volterra_integral(t, 0.0, alpha)
}

/// μ(t, β, α) = ∫₀^∞ u^β t^{u+α} / (Γ(β+1) Γ(u+α+1)) du.
pub fn volterra_mu(t: f64, beta: f64, alpha: f64) -> Result<f64> {
    let raw = volterra_integral(t, beta, alpha)?;
    Ok(raw * (-ln_gamma_positive(beta + 1.0)).exp())
}
