// Closed forms of f_{ν,μ}(t) against the Stanković integral.
//
//   ν = 1/2, μ = 0    e^{-1/(4t)} / (2√π t^{3/2})
//   ν = 1/2, μ = 1/2  e^{-1/(4t)} / √(πt)
//   ν = 1/3, μ = 2/3  K_{1/3}(2/√(27t)) / (π√t)

use std::f64::consts::PI;

use efros::kernel::{closed_form, eval_stankovic, KernelParams};
use efros::quad::QuadratureSpec;
use efros::specfun::bessel_k;

type Exact = fn(f64) -> efros::Result<f64>;

/// Largest relative gap between the integral and the closed forms.
pub fn run() -> efros::Result<f64> {
    let spec = QuadratureSpec::default();
    let mut worst: f64 = 0.0;

    println!("{:>6} {:>6} {:>6} {:>22} {:>22} {:>10}", "nu", "mu", "t", "integral", "closed form", "rel");
    let cases: [(f64, f64, Exact); 3] = [
        (0.5, 0.0, |t| Ok((-0.25 / t).exp() / (2.0 * PI.sqrt() * t.powf(1.5)))),
        (0.5, 0.5, |t| Ok((-0.25 / t).exp() / (PI * t).sqrt())),
        (1.0 / 3.0, 2.0 / 3.0, |t| Ok(bessel_k(1.0 / 3.0, 2.0 / (27.0 * t).sqrt())? / (PI * t.sqrt()))),
    ];
    for (nu, mu, exact) in cases {
        let p = KernelParams::new(nu, mu)?;
        for t in [0.25, 0.5, 1.0, 2.0, 5.0, 10.0] {
            let v = eval_stankovic(p, t, &spec)?.value;
            let e = exact(t)?;
            let rel = ((v - e) / e).abs();
            worst = worst.max(rel);
            println!("{nu:>6.4} {mu:>6.4} {t:>6} {v:>22.15e} {e:>22.15e} {rel:>10.2e}");
        }
    }

    // The same forms are also available directly.
    let p = KernelParams::new(0.5, 0.5)?;
    if let Some(c) = closed_form(p, 2.0)? {
        println!("closed_form(1/2, 1/2, t = 2) = {} via {}", c.value, c.method.as_str());
    }
    println!("worst relative gap {worst:.2e}");
    Ok(worst)
}

fn main() -> efros::Result<()> {
    run()?;
    Ok(())
}
