use super::adaptive::integrate_panels;
use super::{QuadResult, QuadratureSpec};
use crate::error::{Error, Result};

/// Offsets (relative to the distance from `a`) probed after a sample falls
/// below the cutoff, so that a zero of an oscillating integrand is not
/// mistaken for the end of its support.
const TAIL_PROBES: [f64; 5] = [1.13, 1.29, 1.51, 1.77, 2.0];

const SEARCH_LIMIT: f64 = 1e8;

/// ∫_a^∞ f(u) du for an eventually decaying integrand.
///
/// A geometric scan from a + 2⁻²⁴·max(1, a) locates the peak of |f| and the
/// first point beyond which |f| stays below `truncation_ratio × peak`; the
/// range up to that point is then split into panels graded geometrically
/// around the peak and integrated adaptively.
pub fn integrate_semi_infinite(f: impl Fn(f64) -> f64, a: f64, spec: &QuadratureSpec) -> Result<QuadResult> {
    spec.validate()?;
    if !(a >= 0.0) || !a.is_finite() {
        return Err(Error::domain(format!("semi-infinite lower limit must be finite and >= 0, got {a}")));
    }
    let delta = 2f64.powi(-24) * a.max(1.0);
    let sample = |x: f64| -> Result<f64> {
        let v = f(a + x);
        if v.is_finite() {
            Ok(v.abs())
        } else {
            Err(Error::NonFiniteIntegrand(a + x))
        }
    };

    let mut peak = 0.0_f64;
    let mut x_peak = delta;
    let mut x = delta;
    let mut scans = 0usize;
    let cut = loop {
        if x > SEARCH_LIMIT {
            if peak == 0.0 {
                // Identically zero on every probe.
                return Ok(QuadResult {
                    value: 0.0,
                    err_estimate: 0.0,
                    evaluations: scans,
                    converged: true,
                    truncation_point: Some(a + x),
                    roundoff_limited: false,
                });
            }
            return Err(Error::TailNotFound { searched_to: a + x });
        }
        for xs in [x, x * std::f64::consts::SQRT_2] {
            let v = sample(xs)?;
            scans += 1;
            if v > peak {
                peak = v;
                x_peak = xs;
            }
        }
        let threshold = spec.truncation_ratio * peak;
        if peak > 0.0 && sample(x)? < threshold {
            let mut quiet = true;
            for c in TAIL_PROBES {
                scans += 1;
                if sample(x * c)? >= threshold {
                    quiet = false;
                    break;
                }
            }
            if quiet {
                break x * 2.0;
            }
        }
        x *= 2.0;
    };

    let mut points = vec![a];
    let mut p = (x_peak / 256.0).max(delta * 0.5);
    while p < cut {
        points.push(a + p);
        p *= 4.0;
    }
    if let Some(&last) = points.last() {
        if cut - (last - a) < 0.25 * (last - a) && points.len() > 1 {
            points.pop();
        }
    }
    points.push(a + cut);

    let mut r = integrate_panels(f, &points, spec)?;
    r.evaluations += scans;
    r.truncation_point = Some(a + cut);
    Ok(r)
}
