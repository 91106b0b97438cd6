//! Adaptive quadrature: finite intervals, semi-infinite ranges with automatic
//! truncation, and Laplace convolutions with power-law endpoint behaviour.

mod adaptive;
mod convolve;
pub mod gauss_kronrod;
mod semi_infinite;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use adaptive::{integrate_finite, integrate_panels};
pub use convolve::convolve;
pub use semi_infinite::integrate_semi_infinite;

/// Tolerances and limits shared by every integral in the crate.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct QuadratureSpec {
    pub rel_tol: f64,
    pub abs_tol: f64,
    pub max_subdivisions: usize,
    /// Integrand-to-peak ratio below which an infinite tail is dropped.
    pub truncation_ratio: f64,
}

impl Default for QuadratureSpec {
    fn default() -> Self {
        QuadratureSpec {
            rel_tol: 1e-10,
            abs_tol: 1e-14,
            max_subdivisions: 2000,
            truncation_ratio: 1e-16,
        }
    }
}

impl QuadratureSpec {
    pub fn validate(&self) -> Result<()> {
        if !(self.rel_tol > 0.0) {
            return Err(Error::domain(format!("rel_tol must be > 0, got {}", self.rel_tol)));
        }
        if !(self.abs_tol > 0.0) {
            return Err(Error::domain(format!("abs_tol must be > 0, got {}", self.abs_tol)));
        }
        if self.max_subdivisions < 1 {
            return Err(Error::domain("max_subdivisions must be >= 1"));
        }
        if !(self.truncation_ratio > 0.0 && self.truncation_ratio < 1.0) {
            return Err(Error::domain(format!(
                "truncation_ratio must lie in (0, 1), got {}",
                self.truncation_ratio
            )));
        }
        Ok(())
    }

    pub fn with_rel_tol(mut self, rel_tol: f64) -> Self {
        self.rel_tol = rel_tol;
        self
    }

    pub fn with_abs_tol(mut self, abs_tol: f64) -> Self {
        self.abs_tol = abs_tol;
        self
    }

    /// Target error for a given value.
    pub fn target(&self, value: f64) -> f64 {
        self.abs_tol.max(self.rel_tol * value.abs())
    }
}

/// Value and diagnostics of one quadrature.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct QuadResult {
    pub value: f64,
    pub err_estimate: f64,
    pub evaluations: usize,
    pub converged: bool,
    /// Upper limit actually used for a semi-infinite range.
    pub truncation_point: Option<f64>,
    /// The target was missed only because every remaining panel sits on its
    /// rounding floor; the value is as good as f64 allows.
    pub roundoff_limited: bool,
}

impl QuadResult {
    /// Converged, or stopped at the rounding floor.
    pub fn usable(&self) -> bool {
        self.converged || self.roundoff_limited
    }

    /// Turns an unusable result into an error naming the integral.
    pub fn require(self, what: impl Into<String>) -> Result<Self> {
        if self.usable() {
            Ok(self)
        } else {
            Err(Error::QuadratureNonConvergence {
                what: what.into(),
                value: self.value,
                err: self.err_estimate,
            })
        }
    }
}
