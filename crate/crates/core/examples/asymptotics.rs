// Large-t behaviour of f_{ν,μ}: the three-term expansion
//   f_{ν,μ}(t) ~ t^{μ-1} Σ_{k<3} (-t^{-ν})^k / (k! Γ(μ - kν))
// against quadrature, and the flat start near t = 0.

use efros::kernel::{eval_asymptotic, eval_auto, eval_stankovic, KernelParams};
use efros::quad::QuadratureSpec;

/// Largest ratio of the observed expansion error to its own bound.
pub fn run() -> efros::Result<f64> {
    let spec = QuadratureSpec::default();
    let mut worst: f64 = 0.0;
    for (nu, mu) in [(0.4, 0.0), (0.5, 0.5), (0.6, 0.3)] {
        let p = KernelParams::new(nu, mu)?;
        for t in [50.0, 100.0, 1000.0] {
            let q = eval_stankovic(p, t, &spec)?;
            let a = eval_asymptotic(p, t, 3)?;
            let ratio = (q.value - a.value).abs() / a.err_estimate;
            worst = worst.max(ratio);
            println!(
                "nu={nu} mu={mu} t={t:>6}: quadrature {:.12e} expansion {:.12e} bound {:.1e} ratio {ratio:.2}",
                q.value, a.value, a.err_estimate
            );
        }
        let near_zero = eval_auto(p, 1e-3, &spec)?;
        println!("nu={nu} mu={mu} t=0.001: {:.3e} via {}", near_zero.value, near_zero.method.as_str());
    }
    Ok(worst)
}

fn main() -> efros::Result<()> {
    run()?;
    Ok(())
}
