//! Compensated summation of Σ c_k z^k / Γ(a₀ + k·da).
//!
//! Both the Wright and the Mittag-Leffler series have this shape, with
//! c_k = 1/k! and c_k = 1 respectively. Terms are built directly in f64
//! while that is safe and fall back to signed logarithms otherwise; the
//! running sum is kept in double-double (Knuth's TwoSum).

use serde::Serialize;

use super::dd::{self, Dd};
use super::gamma::{ln_recip_gamma_signed, recip_gamma};
use crate::error::{Error, Result};

/// Ratio max|term| / |value| above which the sum is flagged as cancelled.
pub const CANCELLATION_RATIO: f64 = 1e8;

/// Relative tolerance of the two-term stopping rule.
pub const SERIES_TOL: f64 = 1e-15;

/// Hard cap on the number of terms.
pub const MAX_TERMS: usize = 100_000;

/// Outcome of a series evaluation.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SeriesResult {
    pub value: f64,
    pub terms_used: usize,
    /// Magnitude bound for the first omitted term.
    pub truncation_bound: f64,
    /// Set when max|term| exceeds 1e8 × |value|.
    pub cancellation_flag: bool,
    /// Largest term magnitude seen; max_term / |value| is the loss factor.
    pub max_term: f64,
}

impl SeriesResult {
    /// Digits plausibly lost to cancellation, as a relative error estimate.
    pub fn rel_error_estimate(&self) -> f64 {
        if self.value == 0.0 {
            return if self.max_term == 0.0 { 0.0 } else { f64::INFINITY };
        }
        let loss = self.max_term / self.value.abs();
        // Past EXTENDED_TERMS_RATIO the terms were built in double-double.
        let rounding = if loss > EXTENDED_TERMS_RATIO {
            2.0 * f64::EPSILON + 1e-30 * loss
        } else {
            4.0 * f64::EPSILON * loss
        };
        rounding + self.truncation_bound / self.value.abs()
    }
}

/// One term of the series: the value and a smooth magnitude bound that
/// does not vanish at the zeros of 1/Γ.
struct Term {
    value: Dd,
    bound: f64,
}

struct TermGen {
    z: f64,
    a0: f64,
    da: f64,
    factorial: bool,
    // z^k c_k tracked both directly and as a log magnitude.
    p: f64,
    ln_p: f64,
    sign_p: f64,
    extended: bool,
}

impl TermGen {
    fn new(z: f64, a0: f64, da: f64, factorial: bool, extended: bool) -> Self {
        TermGen { z, a0, da, factorial, p: 1.0, ln_p: 0.0, sign_p: 1.0, extended }
    }

    fn term(&self, k: usize) -> Term {
        let a = self.a0 + self.da * k as f64;
        let (ln_rg, sign_rg) = ln_recip_gamma_signed(a);
        // Envelope of |1/Γ(a)|: 1 on [0, 1), Γ(1 - a)/π below 0. It must not
        // dip near the zeros of 1/Γ or the stopping rule fires early.
        let ln_env = if a >= 1.0 {
            ln_rg
        } else if a >= 0.0 {
            0.0
        } else {
            let (ln_rg1, _) = ln_recip_gamma_signed(1.0 - a);
            -ln_rg1 - std::f64::consts::PI.ln()
        };
        let bound = (self.ln_p + ln_env).exp();
        if self.sign_p == 0.0 {
            return Term { value: Dd::new(0.0), bound };
        }
        // The f64 product da·k may round onto a pole that the exact product
        // misses; the double-double path decides that on its own.
        if self.extended {
            return Term { value: self.term_dd(k), bound };
        }
        if sign_rg == 0.0 {
            return Term { value: Dd::new(0.0), bound };
        }
        let rg = recip_gamma(a);
        let direct = self.p * rg;
        let value = if self.p.is_finite()
            && self.p != 0.0
            && self.p.abs() < 1e300
            && rg != 0.0
            && direct.is_finite()
            && direct != 0.0
        {
            direct
        } else {
            self.sign_p * sign_rg * (self.ln_p + ln_rg).exp()
        };
        Term { value: Dd::new(value), bound }
    }

    /// The same term with every factor in double-double.
    fn term_dd(&self, k: usize) -> Dd {
        let kf = k as f64;
        let a = Dd::mul_add_f64(self.da, kf, self.a0);
        let (ln_rg, sign_rg) = dd::ln_recip_gamma_signed(a);
        if sign_rg == 0.0 {
            return Dd::new(0.0);
        }
        let mut ln_term = ln_rg;
        if k > 0 {
            ln_term = ln_term + Dd::new(kf) * Dd::new(self.z.abs()).ln();
            if self.factorial {
                ln_term = ln_term - dd::ln_gamma(Dd::new(kf + 1.0));
            }
        }
        let mag = ln_term.exp();
        if self.sign_p * sign_rg < 0.0 {
            -mag
        } else {
            mag
        }
    }

    fn advance(&mut self, k_next: usize) {
        let kf = k_next as f64;
        if self.z == 0.0 {
            self.p = 0.0;
            self.sign_p = 0.0;
            self.ln_p = f64::NEG_INFINITY;
            return;
        }
        let step = if self.factorial { self.z / kf } else { self.z };
        self.p *= step;
        self.sign_p *= step.signum();
        self.ln_p += step.abs().ln();
    }
}

/// Above this loss factor the terms are rebuilt in double-double.
const EXTENDED_TERMS_RATIO: f64 = 1e3;

/// Sums Σ_{k≥0} c_k z^k / Γ(a₀ + k·da), c_k = 1/k! if `factorial`.
///
/// Stops once the envelope of the next two terms drops below
/// `SERIES_TOL × |partial sum|` while decreasing. The partial sums are kept
/// in double-double; when the largest term exceeds the result by more than
/// 1e3 the terms themselves are recomputed in double-double as well, so the
/// result stays accurate to ~1e-15 until the loss factor nears 1e16.
pub fn power_gamma_series(
    z: f64,
    a0: f64,
    da: f64,
    factorial: bool,
    what: &'static str,
) -> Result<SeriesResult> {
    if !z.is_finite() || !a0.is_finite() || !da.is_finite() {
        return Err(Error::domain(format!("{what}: non-finite argument")));
    }
    let r = sum_terms(TermGen::new(z, a0, da, factorial, false), what)?;
    if r.max_term > EXTENDED_TERMS_RATIO * r.value.abs() {
        return sum_terms(TermGen::new(z, a0, da, factorial, true), what);
    }
    Ok(r)
}

fn sum_terms(mut gen: TermGen, what: &'static str) -> Result<SeriesResult> {
    let mut acc = Dd::new(0.0);
    let mut max_term = 0.0_f64;

    let mut cur = gen.term(0);
    gen.advance(1);
    let mut next = gen.term(1);
    gen.advance(2);
    let mut next2 = gen.term(2);

    let mut k = 0usize;
    loop {
        acc = acc + cur.value;
        max_term = max_term.max(cur.value.hi.abs());
        let s = acc.hi.abs();
        let decreasing = next2.bound <= next.bound;
        let small = next.bound + next2.bound;
        if decreasing && (small < SERIES_TOL * s || small < f64::MIN_POSITIVE) {
            let value = acc.to_f64();
            if !value.is_finite() || !max_term.is_finite() {
                return Err(Error::domain(format!("{what}: series terms overflow")));
            }
            return Ok(SeriesResult {
                value,
                terms_used: k + 1,
                truncation_bound: next.bound,
                cancellation_flag: max_term > CANCELLATION_RATIO * value.abs(),
                max_term,
            });
        }
        k += 1;
        if k >= MAX_TERMS {
            return Err(Error::SeriesNonConvergence { what, terms: k });
        }
        cur = next;
        next = next2;
        gen.advance(k + 2);
        next2 = gen.term(k + 2);
    }
}
