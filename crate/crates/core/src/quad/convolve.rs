use std::f64::consts::FRAC_PI_4;

use super::adaptive::integrate_panels;
use super::{QuadResult, QuadratureSpec};
use crate::error::{Error, Result};

/// Grading exponent for a half whose integrand behaves like θ^(2s+1) at the
/// endpoint. With θ = (π/4)·w^q, q = 1/(2s+2) the leading behaviour becomes
/// w⁰; when 2s+1 is already a nonnegative integer no grading is needed.
fn grading(s: f64) -> f64 {
    let e = 2.0 * s + 1.0;
    if e >= 0.0 && (e - e.round()).abs() < 1e-12 {
        1.0
    } else {
        1.0 / (2.0 * s + 2.0)
    }
}

/// Laplace convolution (f ★ g)(t) = ∫₀^t f(t − ξ) g(ξ) dξ.
///
/// `sing_f` and `sing_g` are the exponents of the power-law behaviour of f
/// and g at the origin (f(x) ~ x^sing_f); both must exceed -1. The integral
/// is taken over θ with ξ = t·sin²θ, split at π/4, each half graded toward
/// its endpoint according to the exponent that lives there.
pub fn convolve(
    f: impl Fn(f64) -> f64,
    g: impl Fn(f64) -> f64,
    t: f64,
    sing_f: f64,
    sing_g: f64,
    spec: &QuadratureSpec,
) -> Result<QuadResult> {
    if !(t > 0.0) || !t.is_finite() {
        return Err(Error::domain(format!("convolution needs t > 0, got {t}")));
    }
    for (name, s) in [("sing_f", sing_f), ("sing_g", sing_g)] {
        if !(s > -1.0) {
            return Err(Error::domain(format!(
                "{name} = {s}: convolution factor is not integrable at the origin (needs > -1)"
            )));
        }
    }
    let qg = grading(sing_g);
    let qf = grading(sing_f);

    // w ∈ (0, 1): θ = (π/4) w^qg near ξ = 0.
    // w ∈ (1, 2): φ = (π/4) (2 - w)^qf near ξ = t, with θ = π/2 - φ.
    let integrand = |w: f64| -> f64 {
        let (xi, t_minus_xi, jac) = if w < 1.0 {
            let th = FRAC_PI_4 * w.powf(qg);
            let dth = FRAC_PI_4 * qg * w.powf(qg - 1.0);
            let (s, c) = th.sin_cos();
            (t * s * s, t * c * c, dth * 2.0 * t * s * c)
        } else {
            let v = 2.0 - w;
            let ph = FRAC_PI_4 * v.powf(qf);
            let dph = FRAC_PI_4 * qf * v.powf(qf - 1.0);
            let (s, c) = ph.sin_cos();
            // ξ = t cos²φ, t − ξ = t sin²φ
            (t * c * c, t * s * s, dph * 2.0 * t * s * c)
        };
        if jac == 0.0 {
            return 0.0;
        }
        let fv = f(t_minus_xi);
        if fv == 0.0 {
            return 0.0;
        }
        let gv = g(xi);
        fv * gv * jac
    };
    integrate_panels(integrand, &[0.0, 1.0, 2.0], spec)
}
