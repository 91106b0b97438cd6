//! Two-parameter Mittag-Leffler function by direct summation.

use super::series::{power_gamma_series, SeriesResult};
use crate::error::{Error, Result};

/// Largest |z| accepted by [`mittag_leffler`]. Beyond it the direct series
/// either overflows or loses every digit to cancellation.
pub const ML_MAX_ABS_Z: f64 = 40.0;

/// E_{α,β}(z) = Σ z^k / Γ(αk + β) for α > 0 and |z| ≤ 40.
pub fn mittag_leffler(alpha: f64, beta: f64, z: f64) -> Result<SeriesResult> {
    if !(alpha > 0.0) {
        return Err(Error::domain(format!("mittag_leffler requires alpha > 0, got {alpha}")));
    }
    if !(z.abs() <= ML_MAX_ABS_Z) {
        return Err(Error::domain(format!(
            "mittag_leffler argument |z| = {} exceeds the series domain |z| <= {ML_MAX_ABS_Z}",
            z.abs()
        )));
    }
    power_gamma_series(z, beta, alpha, false, "mittag_leffler")
}
