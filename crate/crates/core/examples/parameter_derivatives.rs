// Derivatives of f_{ν,μ}: in t through the order shift f' = f_{ν,μ-1}, and in
// ν and μ through logarithmic convolutions, each against a finite difference.

use efros::kernel::{d_dmu, d_dnu, derivative_n, eval_auto, recurrence_residual, KernelParams};
use efros::quad::QuadratureSpec;

fn richardson(f: impl Fn(f64) -> efros::Result<f64>, x: f64, h: f64) -> efros::Result<f64> {
    let d1 = (f(x + h)? - f(x - h)?) / (2.0 * h);
    let d2 = (f(x + h / 2.0)? - f(x - h / 2.0)?) / h;
    Ok((4.0 * d2 - d1) / 3.0)
}

/// Largest relative disagreement with the finite differences.
pub fn run() -> efros::Result<f64> {
    let spec = QuadratureSpec::default();
    let value = |nu: f64, mu: f64, t: f64| -> efros::Result<f64> { Ok(eval_auto(KernelParams::new(nu, mu)?, t, &spec)?.value) };
    let mut worst: f64 = 0.0;
    let mut report = |what: &str, nu: f64, mu: f64, t: f64, exact: f64, fd: f64| {
        let rel = ((exact - fd) / fd).abs();
        worst = worst.max(rel);
        println!("{what:<6} nu={nu} mu={mu} t={t}: {exact:>20.12e} fd {fd:>20.12e} ({rel:.1e})");
    };

    for (nu, mu, t) in [(0.5, 0.0, 1.0), (0.4, 0.5, 2.0), (0.6, 0.5, 0.7)] {
        let p = KernelParams::new(nu, mu)?;
        let exact = derivative_n(p, t, 1, &spec)?;
        report("d/dt", nu, mu, t, exact, richardson(|x| value(nu, mu, x), t, 1e-3 * t)?);
        let r = recurrence_residual(p, t, &spec)?;
        println!("       recurrence residual {r:.1e}");
    }
    for (nu, mu, t) in [(0.5, 0.5, 2.0), (0.3, 0.6, 1.0), (0.7, 0.2, 3.0)] {
        let p = KernelParams::new(nu, mu)?;
        report("d/dnu", nu, mu, t, d_dnu(p, t, &spec)?, richardson(|n| value(n, mu, t), nu, 1e-4)?);
        report("d/dmu", nu, mu, t, d_dmu(p, t, &spec)?, richardson(|m| value(nu, m, t), mu, 1e-4)?);
    }
    Ok(worst)
}

fn main() -> efros::Result<()> {
    run()?;
    Ok(())
}
