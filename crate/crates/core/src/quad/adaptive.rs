use std::cmp::Ordering;
use std::collections::BinaryHeap;

use super::gauss_kronrod::{qk21, RuleOutput};
use super::{QuadResult, QuadratureSpec};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy)]
struct Segment {
    a: f64,
    b: f64,
    rule: RuleOutput,
}

impl PartialEq for Segment {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}
impl Eq for Segment {}
impl PartialOrd for Segment {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for Segment {
    fn cmp(&self, other: &Self) -> Ordering {
        self.rule
            .err
            .total_cmp(&other.rule.err)
            .then_with(|| other.a.total_cmp(&self.a))
    }
}

fn too_narrow(a: f64, b: f64) -> bool {
    let mid = 0.5 * (a + b);
    mid <= a || mid >= b || (b - a) <= 64.0 * f64::EPSILON * a.abs().max(b.abs())
}

/// Adaptive Gauss–Kronrod quadrature of `f` over [a, b].
///
/// Integrable endpoint singularities are handled by repeated bisection; the
/// rule never samples the endpoints themselves.
pub fn integrate_finite(f: impl Fn(f64) -> f64, a: f64, b: f64, spec: &QuadratureSpec) -> Result<QuadResult> {
    if !(a < b) {
        return Err(Error::domain(format!("integrate_finite needs a < b, got [{a}, {b}]")));
    }
    integrate_panels(f, &[a, b], spec)
}

/// Adaptive quadrature over consecutive panels `[p₀, p₁]`, `[p₁, p₂]`, ... with a
/// single global error budget: the worst panel anywhere is refined first.
pub fn integrate_panels(f: impl Fn(f64) -> f64, points: &[f64], spec: &QuadratureSpec) -> Result<QuadResult> {
    spec.validate()?;
    if points.len() < 2 {
        return Err(Error::domain("integrate_panels needs at least two points"));
    }
    if points.windows(2).any(|w| !(w[0] < w[1])) || points.iter().any(|p| !p.is_finite()) {
        return Err(Error::domain("integration breakpoints must be finite and increasing"));
    }

    let mut evaluations = 0usize;
    let mut eval = |x: f64| {
        evaluations += 1;
        f(x)
    };

    let mut heap = BinaryHeap::new();
    let mut parked: Vec<Segment> = Vec::new();
    let mut value = 0.0;
    let mut err = 0.0;
    let mut parked_err = 0.0;
    for w in points.windows(2) {
        let rule = qk21(&mut eval, w[0], w[1]).map_err(Error::NonFiniteIntegrand)?;
        value += rule.value;
        err += rule.err;
        heap.push(Segment { a: w[0], b: w[1], rule });
    }

    let mut subdivisions = points.len() - 1;
    let mut converged = false;
    loop {
        if err <= spec.target(value) {
            converged = true;
            break;
        }
        let Some(worst) = heap.pop() else { break };
        if worst.rule.at_floor || too_narrow(worst.a, worst.b) {
            parked_err += worst.rule.err;
            parked.push(worst);
            continue;
        }
        if subdivisions >= spec.max_subdivisions {
            heap.push(worst);
            break;
        }
        let mid = 0.5 * (worst.a + worst.b);
        let left = qk21(&mut eval, worst.a, mid).map_err(Error::NonFiniteIntegrand)?;
        let right = qk21(&mut eval, mid, worst.b).map_err(Error::NonFiniteIntegrand)?;
        value += left.value + right.value - worst.rule.value;
        err += left.err + right.err - worst.rule.err;
        heap.push(Segment { a: worst.a, b: mid, rule: left });
        heap.push(Segment { a: mid, b: worst.b, rule: right });
        subdivisions += 1;
    }

    // Re-sum in a fixed order so the result does not carry the rounding of
    // the incremental updates.
    let mut all: Vec<Segment> = heap.into_vec();
    let active_err: f64 = all.iter().map(|s| s.rule.err).sum();
    all.extend(parked);
    all.sort_by(|x, y| x.a.total_cmp(&y.a));
    let value: f64 = all.iter().map(|s| s.rule.value).sum();
    let err_estimate: f64 = all.iter().map(|s| s.rule.err).sum();
    let converged = converged || err_estimate <= spec.target(value);
    let roundoff_limited = !converged && parked_err > 0.0 && active_err <= spec.target(value);

    Ok(QuadResult {
        value,
        err_estimate,
        evaluations,
        converged,
        truncation_point: None,
        roundoff_limited,
    })
}
