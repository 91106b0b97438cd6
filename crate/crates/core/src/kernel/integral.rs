//! Real-axis integral representations of f_{ν,μ}(t).

use std::f64::consts::{FRAC_PI_2, PI};

use num_complex::Complex64;
use serde::Serialize;

use super::{check_t, saddle_exponent, KernelEval, KernelParams, Method};
use crate::error::{Error, Result};
use crate::quad::{integrate_finite, integrate_panels, integrate_semi_infinite, QuadratureSpec};

fn check_nu(nu: f64) -> Result<()> {
    KernelParams::new(nu, 0.0).map(|_| ())
}

/// ln of the largest value e^{-u^ν cos πν - ut} reaches when cos πν < 0.
fn growth_exponent(nu: f64, t: f64) -> f64 {
    let c = (PI * nu).cos();
    if c >= 0.0 {
        0.0
    } else {
        (-c).powf(1.0 / (1.0 - nu)) * saddle_exponent(nu, t)
    }
}

fn check_growth(nu: f64, t: f64, what: &str) -> Result<()> {
    let g = growth_exponent(nu, t);
    if g > 690.0 {
        return Err(Error::Cancellation(format!(
            "{what}: integrand grows to e^{g:.0} at nu = {nu}, t = {t}"
        )));
    }
    Ok(())
}

/// f_{ν,μ}(t) = (1/π) ∫₀^∞ e^{-ut - u^ν cos πν} u^{-μ} sin(u^ν sin πν + πμ) du, μ < 1.
///
/// For 0 < μ < 1 the substitution u = v^{1/(1-μ)} removes the u^{-μ}
/// singularity at the origin.
pub fn eval_stankovic(p: KernelParams, t: f64, spec: &QuadratureSpec) -> Result<KernelEval> {
    p.validate()?;
    check_t(t)?;
    if !(p.mu < 1.0) {
        return Err(Error::domain(format!(
            "the Stankovic integral needs mu < 1, got {}",
            p.mu
        )));
    }
    check_growth(p.nu, t, "Stankovic integral")?;
    let (nu, mu) = (p.nu, p.mu);
    let (spn, cpn) = (PI * nu).sin_cos();
    let phase = PI * mu;
    let r = if mu > 0.0 {
        let q = 1.0 / (1.0 - mu);
        let g = move |v: f64| {
            let u = v.powf(q);
            let un = v.powf(q * nu);
            q * (-u * t - un * cpn).exp() * (un * spn + phase).sin()
        };
        integrate_semi_infinite(g, 0.0, spec)?
    } else {
        let g = move |u: f64| {
            let un = u.powf(nu);
            (-u * t - un * cpn).exp() * u.powf(-mu) * (un * spn + phase).sin()
        };
        integrate_semi_infinite(g, 0.0, spec)?
    };
    let r = r.require("Stankovic integral")?;
    Ok(KernelEval {
        t,
        params: p,
        value: r.value / PI,
        err_estimate: r.err_estimate / PI,
        method: Method::Stankovic,
        evaluations: r.evaluations,
    })
}

/// f_{ν,0}(t) = (1/π) ∫₀^∞ e^{-ut} e^{-u^ν cos πν} sin(u^ν sin πν) du.
pub fn eval_mikusinski_laplace(nu: f64, t: f64, spec: &QuadratureSpec) -> Result<KernelEval> {
    check_nu(nu)?;
    check_t(t)?;
    check_growth(nu, t, "Laplace-form integral")?;
    let (spn, cpn) = (PI * nu).sin_cos();
    let g = move |u: f64| {
        let un = u.powf(nu);
        (-u * t).exp() * (-un * cpn).exp() * (un * spn).sin()
    };
    let r = integrate_semi_infinite(g, 0.0, spec)?.require("Laplace-form integral")?;
    Ok(KernelEval {
        t,
        params: KernelParams { nu, mu: 0.0 },
        value: r.value / PI,
        err_estimate: r.err_estimate / PI,
        method: Method::MikusinskiLaplace,
        evaluations: r.evaluations,
    })
}

/// The two readings of the cosine representation
/// f_{ν,0}(t) = (2/π) ∫₀^∞ e^{-a u^ν} cos(b u^ν) cos(ut) du.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CosVariant {
    /// a = cos(πν/2), b = sin(πν/2): the real part of e^{-(iu)^ν}.
    SinCorrected,
    /// a = b = cos(πν/2). Coincides with the other reading only at ν = 1/2.
    Printed,
}

impl CosVariant {
    pub fn as_str(self) -> &'static str {
        match self {
            CosVariant::SinCorrected => "sin_corrected",
            CosVariant::Printed => "printed",
        }
    }

    /// h(u) = Re e^{-c u^ν}.
    fn coefficient(self, nu: f64) -> Complex64 {
        let a = (FRAC_PI_2 * nu).cos();
        match self {
            CosVariant::SinCorrected => Complex64::from_polar(1.0, FRAC_PI_2 * nu),
            CosVariant::Printed => Complex64::new(a, a),
        }
    }
}

/// Number of integration-by-parts terms in the cosine tail.
const COS_TAIL_TERMS: usize = 12;

/// u·t at which the cosine integral is cut and the tail is summed.
const COS_CUT_PHASE: f64 = 200.0;

/// Derivatives g, g', …, g^{(n-1)} of g(u) = e^{-c u^ν} at u.
fn exp_power_derivatives(c: Complex64, nu: f64, u: f64, n: usize) -> Vec<Complex64> {
    // φ = -c u^ν; φ^{(j)} = -c ν(ν-1)…(ν-j+1) u^{ν-j}
    let mut phi = Vec::with_capacity(n);
    let mut falling = 1.0;
    for j in 0..n {
        phi.push(-c * falling * u.powf(nu - j as f64));
        falling *= nu - j as f64;
    }
    let mut g = vec![phi[0].exp()];
    // g^{(m+1)} = Σ_j C(m, j) φ^{(j+1)} g^{(m-j)}
    for m in 0..n - 1 {
        let mut binom = 1.0;
        let mut acc = Complex64::new(0.0, 0.0);
        for j in 0..=m {
            acc += phi[j + 1] * g[m - j] * binom;
            binom *= (m - j) as f64 / (j + 1) as f64;
        }
        g.push(acc);
    }
    g
}

/// f_{ν,0}(t) = (2/π) ∫₀^∞ Re(e^{-c u^ν}) cos(ut) du.
///
/// The integrand decays like e^{-a u^ν}, far too slowly to truncate, so the
/// range stops at U = 200/t and ∫_U^∞ is summed by repeated integration by
/// parts: -Re Σ_k (-1)^k h^{(k)}(U) e^{iUt}/(it)^{k+1}.
pub fn eval_mikusinski_cos(nu: f64, t: f64, variant: CosVariant, spec: &QuadratureSpec) -> Result<KernelEval> {
    check_nu(nu)?;
    check_t(t)?;
    let c = variant.coefficient(nu);
    let h = move |u: f64| (-c * u.powf(nu)).exp().re * (u * t).cos();
    let cut = COS_CUT_PHASE / t;
    let half_period = PI / t;
    let panels = (cut / half_period).ceil() as usize;
    let points: Vec<f64> = (0..=panels).map(|i| (i as f64 * half_period).min(cut)).collect();
    let r = integrate_panels(h, &points, spec)?.require("cosine-form integral")?;

    let derivs = exp_power_derivatives(c, nu, cut, COS_TAIL_TERMS);
    let e = Complex64::from_polar(1.0, cut * t);
    let it = Complex64::new(0.0, t);
    let mut tail = 0.0;
    let mut last = 0.0;
    let mut denom = it;
    for (k, d) in derivs.iter().enumerate() {
        let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
        last = -(sign * d.re * e / denom).re;
        tail += last;
        denom *= it;
    }
    Ok(KernelEval {
        t,
        params: KernelParams { nu, mu: 0.0 },
        value: 2.0 / PI * (r.value + tail),
        err_estimate: 2.0 / PI * (r.err_estimate + last.abs()),
        method: Method::MikusinskiCos,
        evaluations: r.evaluations,
    })
}

/// f_{ν,0}(t) = ν/(π(1-ν)t) ∫₀^π ξ e^{-ξ} du with
/// ξ(u) = t^{-ν/(1-ν)} (sin νu / sin u)^{ν/(1-ν)} sin((1-ν)u) / sin u.
///
/// ξ increases from ξ(0+) = ν^{ν/(1-ν)}(1-ν) t^{-ν/(1-ν)} to ∞ at u = π,
/// so the integrand is positive and e^{-ξ(0+)} is factored out: small t
/// costs nothing in relative accuracy.
pub fn eval_mikusinski_finite(nu: f64, t: f64, spec: &QuadratureSpec) -> Result<KernelEval> {
    check_nu(nu)?;
    check_t(t)?;
    let k = nu / (1.0 - nu);
    let scale = t.powf(-k);
    let xi0 = saddle_exponent(nu, t);
    let prefactor = nu / (PI * (1.0 - nu) * t);
    let params = KernelParams { nu, mu: 0.0 };
    if xi0 > 745.0 {
        return Ok(KernelEval { t, params, value: 0.0, err_estimate: 0.0, method: Method::MikusinskiFinite, evaluations: 0 });
    }
    let g = move |u: f64| {
        if u <= 0.0 {
            return xi0;
        }
        if u >= PI {
            return 0.0;
        }
        let s = u.sin();
        let xi = scale * ((nu * u).sin() / s).powf(k) * ((1.0 - nu) * u).sin() / s;
        let d = xi - xi0;
        if d > 745.0 {
            0.0
        } else {
            xi * (-d).exp()
        }
    };
    let r = integrate_finite(g, 0.0, PI, spec)?.require("finite-range integral")?;
    let e0 = (-xi0).exp();
    Ok(KernelEval {
        t,
        params,
        value: prefactor * e0 * r.value,
        err_estimate: prefactor * e0 * r.err_estimate,
        method: Method::MikusinskiFinite,
        evaluations: r.evaluations,
    })
}
