//! Wright function W_{λ,μ}(z) = Σ z^k / (k! Γ(λk + μ)) and the Mainardi
//! functions F_ν, M_ν.

use super::series::{power_gamma_series, SeriesResult};
use crate::error::{Error, Result};

/// Wright function of the first (λ ≥ 0) or second (-1 < λ < 0) kind.
pub fn wright(lambda: f64, mu: f64, z: f64) -> Result<SeriesResult> {
    if !(lambda > -1.0) {
        return Err(Error::domain(format!("wright requires lambda > -1, got {lambda}")));
    }
    power_gamma_series(z, mu, lambda, true, "wright")
}

fn check_nu(nu: f64, t: f64) -> Result<()> {
    if !(nu > 0.0 && nu < 1.0) {
        return Err(Error::domain(format!("Mainardi functions require 0 < nu < 1, got {nu}")));
    }
    if !(t >= 0.0) {
        return Err(Error::domain(format!("Mainardi functions require t >= 0, got {t}")));
    }
    Ok(())
}

fn reliable(r: SeriesResult, what: &str) -> Result<f64> {
    if r.cancellation_flag {
        return Err(Error::Cancellation(format!(
            "{what}: series terms reach {:e} against a sum of {:e}",
            r.max_term, r.value
        )));
    }
    Ok(r.value)
}

/// F_ν(t) = W_{-ν,0}(-t).
pub fn mainardi_f(nu: f64, t: f64) -> Result<f64> {
    check_nu(nu, t)?;
    reliable(wright(-nu, 0.0, -t)?, "mainardi_f")
}

/// M_ν(t) = W_{-ν,1-ν}(-t).
pub fn mainardi_m(nu: f64, t: f64) -> Result<f64> {
    check_nu(nu, t)?;
    reliable(wright(-nu, 1.0 - nu, -t)?, "mainardi_m")
}
