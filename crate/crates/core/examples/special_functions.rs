// The special functions behind the kernel, each printed next to a known
// reduction.

use std::f64::consts::PI;

use efros::specfun::{
    bessel_k, digamma, erfc, gamma, mainardi_f, mainardi_m, mittag_leffler, volterra_mu, volterra_nu,
    volterra_nu_alpha, wright, EULER_GAMMA,
};

/// Largest relative error over the reductions.
pub fn run() -> efros::Result<f64> {
    let x = 0.8;
    let rows: Vec<(&str, f64, f64)> = vec![
        ("gamma(1/2) = sqrt(pi)", gamma(0.5)?, PI.sqrt()),
        ("digamma(1) = -euler gamma", digamma(1.0)?, -EULER_GAMMA),
        ("K_{1/2}(x) = sqrt(pi/2x) e^-x", bessel_k(0.5, x)?, (PI / (2.0 * x)).sqrt() * (-x).exp()),
        ("E_{1,1}(x) = e^x", mittag_leffler(1.0, 1.0, x)?.value, x.exp()),
        ("E_{1/2,1}(-x) = e^{x^2} erfc x", mittag_leffler(0.5, 1.0, -x)?.value, (x * x).exp() * erfc(x)),
        ("W_{-1/2,1/2}(-x) = e^{-x^2/4}/sqrt(pi)", wright(-0.5, 0.5, -x)?.value, (-x * x / 4.0).exp() / PI.sqrt()),
        ("M_{1/2}(x) = e^{-x^2/4}/sqrt(pi)", mainardi_m(0.5, x)?, (-x * x / 4.0).exp() / PI.sqrt()),
        ("F_{1/2}(x) = x/2 M_{1/2}(x)", mainardi_f(0.5, x)?, 0.5 * x * mainardi_m(0.5, x)?),
        ("nu(x, 0) = nu(x)", volterra_nu_alpha(x, 0.0)?, volterra_nu(x)?),
        ("mu(x, 0, a) = nu(x, a)", volterra_mu(x, 0.0, 0.3)?, volterra_nu_alpha(x, 0.3)?),
    ];
    let mut worst: f64 = 0.0;
    for (name, got, want) in rows {
        let rel = ((got - want) / want).abs();
        worst = worst.max(rel);
        println!("{name:<40} {got:>22.16e} {rel:>9.1e}");
    }
    println!("x = {x}; worst relative error {worst:.1e}");
    Ok(worst)
}

fn main() -> efros::Result<()> {
    run()?;
    Ok(())
}
