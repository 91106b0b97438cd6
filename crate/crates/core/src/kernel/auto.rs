//! Route selection.

use std::f64::consts::PI;

use std::collections::HashMap;

use super::extended::split_with_floor;
use super::integral::{eval_mikusinski_finite, eval_stankovic};
use super::series::{closed_form, eval_asymptotic, eval_wright_route, WRIGHT_ROUTE_MAX_Z};
use super::{check_t, saddle_exponent, saddle_ln_estimate, KernelEval, KernelParams, Method, LN_UNDERFLOW,
    NESTED_REL_FLOOR};
use crate::error::{Error, Result};
use crate::quad::QuadratureSpec;
use crate::specfun::gamma;

/// ln of the factor by which the Stanković integrand can exceed 1.
fn growth(p: KernelParams, t: f64) -> f64 {
    let c = (PI * p.nu).cos();
    if c < 0.0 {
        (-c).powf(1.0 / (1.0 - p.nu)) * saddle_exponent(p.nu, t)
    } else {
        0.0
    }
}

/// f_{ν,μ}(t) by the cheapest route expected to meet `spec.rel_tol`:
///
/// 1. closed form for (ν, μ) ∈ {(1/2, 0), (1/2, 1/2), (1/3, 2/3)};
/// 2. three-term large-t expansion for t ≥ 10⁴ if its error is small enough;
/// 3. Wright series for t^{-ν} ≤ 15 unless it loses too many digits;
/// 4. 0 once the small-t estimate drops below e^{-750};
/// 5. μ ≥ 1: power convolution;
/// 6. μ < 1: the Stanković integral, or, where its oscillating integrand
///    would cancel below the tolerance, the finite-range form (μ = 0) or a
///    power convolution of it (0 < μ < 1).
pub fn eval_auto(p: KernelParams, t: f64, spec: &QuadratureSpec) -> Result<KernelEval> {
    eval_auto_with_floor(p, t, spec, 0.0)
}

/// As [`eval_auto`], for callers that only need the value to an absolute
/// accuracy `floor` (an integrand, typically). Values the small-t estimate
/// puts well below `floor` come back as 0, and the cheaper Stanković
/// integral is accepted wherever its rounding error stays under `floor`.
pub fn eval_auto_with_floor(p: KernelParams, t: f64, spec: &QuadratureSpec, floor: f64) -> Result<KernelEval> {
    p.validate()?;
    check_t(t)?;
    spec.validate()?;
    if let Some(e) = closed_form(p, t)? {
        return Ok(e);
    }
    if t >= 1e4 {
        let a = eval_asymptotic(p, t, 3)?;
        if a.value != 0.0 && a.err_estimate <= 0.1 * spec.rel_tol * a.value.abs() {
            return Ok(a);
        }
    }
    let ln_est = saddle_ln_estimate(p, t);
    // The largest Wright term is about e^A against a sum of about
    // e^{ln_est} t^{1-μ}; past e^30 the series would only be refused after
    // many terms.
    let wright_loss = saddle_exponent(p.nu, t) - ln_est + (p.mu - 1.0) * t.ln();
    if t.powf(-p.nu) <= WRIGHT_ROUTE_MAX_Z && wright_loss <= 30.0 {
        if let Ok(e) = eval_wright_route(p, t) {
            if e.err_estimate <= (0.1 * spec.rel_tol * e.value.abs()).max(floor) {
                return Ok(e);
            }
        }
    }
    let ln_floor = if floor > 0.0 { floor.ln() } else { f64::NEG_INFINITY };
    // The estimate is leading order only; keep a factor e^3 in hand. It is
    // a small-t expansion, so only trusted while the exponent A exceeds 1.
    if saddle_exponent(p.nu, t) >= 1.0 && ln_est < LN_UNDERFLOW.max(ln_floor - 3.0) {
        return Ok(KernelEval {
            t,
            params: p,
            value: 0.0,
            err_estimate: ln_est.exp(),
            method: Method::Asymptotic,
            evaluations: 0,
        });
    }
    let ln_target = (spec.rel_tol.ln() + ln_est).max(ln_floor);
    if p.mu >= 1.0 {
        return power_convolution(p, (p.mu - 0.5).ceil(), t, spec, ln_target);
    }
    // Rounding in the Stanković sum is about ε times the integrand's L1
    // norm, which is at most e^{growth} · max(1, t^{μ-1}).
    let ln_round = f64::EPSILON.ln() + growth(p, t) + ((p.mu - 1.0) * t.ln()).max(0.0);
    if ln_round > ln_target {
        if p.mu == 0.0 {
            return eval_mikusinski_finite(p.nu, t, spec);
        }
        if p.mu > 0.0 {
            return power_convolution(p, p.mu, t, spec, ln_target);
        }
        return by_recurrence(p, t, spec);
    }
    let local = spec.with_abs_tol(spec.abs_tol.min(ln_target.exp()).max(f64::MIN_POSITIVE));
    eval_stankovic(p, t, &local)
}

/// (t^{λ-1}/Γ(λ)) ★ f_{ν,μ-λ}, to absolute accuracy e^{ln_target}.
///
/// Runs at no less than [`NESTED_REL_FLOOR`] and fails if that misses the
/// target, so an unattainable tolerance is reported instead of ground out.
fn power_convolution(p: KernelParams, lambda: f64, t: f64, spec: &QuadratureSpec, ln_target: f64) -> Result<KernelEval> {
    let wanted = ln_target.exp().max(f64::MIN_POSITIVE);
    let work = spec.with_rel_tol(spec.rel_tol.max(NESTED_REL_FLOOR));
    let target = wanted * work.rel_tol / spec.rel_tol;
    let local = work.with_abs_tol(work.abs_tol.min(target));
    // An error δ in the inner kernel moves the result by at most δ t^λ/Γ(λ+1).
    let inner_floor = work.abs_tol.min(0.1 * target * gamma(lambda + 1.0)? * t.powf(-lambda));
    let e = split_with_floor(p, lambda, t, &local, inner_floor)?;
    if e.err_estimate > wanted.max(spec.rel_tol * e.value.abs()) {
        return Err(Error::QuadratureNonConvergence {
            what: format!(
                "f_{{{}, {}}}({t}) to rel_tol {:e}: below the rounding floor of the convolution",
                p.nu, p.mu, spec.rel_tol
            ),
            value: e.value,
            err: e.err_estimate,
        });
    }
    Ok(e)
}

/// f_{ν,μ} for μ < 0 from orders in [0, 1) through
/// t f_{ν,m-1} = (m-1) f_{ν,m} + ν f_{ν,m-ν}, applied with m - 1 = μ.
/// Where the Stanković integrand cancels, t is small and the ν f_{ν,m-ν}
/// term dominates, so the sum loses nothing.
fn by_recurrence(p: KernelParams, t: f64, spec: &QuadratureSpec) -> Result<KernelEval> {
    // Orders reached are μ + a + b(1-ν); key on (a, b) so rounding in the
    // order cannot split one node in two.
    struct Walk<'a> {
        p: KernelParams,
        t: f64,
        spec: &'a QuadratureSpec,
        memo: HashMap<(u32, u32), (f64, f64)>,
        leaf: Option<Method>,
        evaluations: usize,
    }
    impl Walk<'_> {
        fn node(&mut self, a: u32, b: u32) -> Result<(f64, f64)> {
            if let Some(&v) = self.memo.get(&(a, b)) {
                return Ok(v);
            }
            let mut m = self.p.mu + a as f64 + b as f64 * (1.0 - self.p.nu);
            // An order that should be 0 can round to ±1e-16, and a tiny
            // positive order means a near-singular power convolution.
            if m.abs() < 1e-12 {
                m = 0.0;
            }
            let v = if m >= 0.0 {
                let e = eval_auto(self.p.with_mu(m), self.t, self.spec)?;
                self.leaf.get_or_insert(e.method);
                self.evaluations += e.evaluations;
                (e.value, e.err_estimate)
            } else {
                let (f1, e1) = self.node(a + 1, b)?;
                let (f2, e2) = self.node(a, b + 1)?;
                let (x, y) = (m * f1, self.p.nu * f2);
                let err = (m.abs() * e1 + self.p.nu * e2 + f64::EPSILON * (x.abs() + y.abs())) / self.t;
                ((x + y) / self.t, err)
            };
            self.memo.insert((a, b), v);
            Ok(v)
        }
    }
    let mut w = Walk { p, t, spec, memo: HashMap::new(), leaf: None, evaluations: 0 };
    let (value, err_estimate) = w.node(0, 0)?;
    Ok(KernelEval {
        t,
        params: p,
        value,
        err_estimate,
        method: w.leaf.unwrap_or(Method::Stankovic),
        evaluations: w.evaluations,
    })
}
