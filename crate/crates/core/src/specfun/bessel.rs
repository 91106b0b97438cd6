//! Modified Bessel function of the second kind for real order.

use crate::error::{Error, Result};
use crate::quad::{integrate_finite, QuadratureSpec};

/// K_ρ(x) = ∫₀^∞ e^{-x cosh θ} cosh(ρθ) dθ, x > 0.
///
/// The factor e^{-x} is pulled out of the integrand so that the quadrature
/// works on O(1) numbers; the range is cut where the scaled integrand has
/// dropped by e^{-45}.
pub fn bessel_k(order: f64, x: f64) -> Result<f64> {
    if !(x > 0.0) || !x.is_finite() {
        return Err(Error::domain(format!("bessel_k requires x > 0, got {x}")));
    }
    if !order.is_finite() {
        return Err(Error::domain("bessel_k order must be finite"));
    }
    let rho = order.abs();
    let log_scaled = |th: f64| -x * (th.cosh() - 1.0) + rho * th;
    let mut th_max = 1.0;
    while log_scaled(th_max) > -45.0 {
        th_max *= 1.5;
    }
    let integrand = |th: f64| {
        let e = -x * (th.cosh() - 1.0);
        // cosh(ρθ) e^{e} without overflowing the cosh.
        0.5 * ((e + rho * th).exp() + (e - rho * th).exp())
    };
    let spec = QuadratureSpec { rel_tol: 1e-13, abs_tol: 1e-300, ..Default::default() };
    let r = integrate_finite(integrand, 0.0, th_max, &spec)?.require("bessel_k")?;
    Ok(r.value * (-x).exp())
}
