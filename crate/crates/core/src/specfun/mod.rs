//! Special functions used by the kernel and the identity catalog.

mod bessel;
mod dd;
pub mod gamma;
mod mittag_leffler;
pub mod series;
mod volterra;
mod wright;

pub use bessel::bessel_k;
pub use gamma::{digamma, gamma, ln_gamma, ln_recip_gamma_signed, recip_gamma, sin_pi, EULER_GAMMA};
pub use mittag_leffler::{mittag_leffler, ML_MAX_ABS_Z};
pub use series::SeriesResult;
pub use volterra::{volterra_mu, volterra_nu, volterra_nu_alpha, VolterraParams};
pub use wright::{mainardi_f, mainardi_m, wright};

/// Error function.
pub fn erf(x: f64) -> f64 {
    libm::erf(x)
}

/// Complementary error function 1 - erf(x), accurate for large x.
pub fn erfc(x: f64) -> f64 {
    libm::erfc(x)
}
