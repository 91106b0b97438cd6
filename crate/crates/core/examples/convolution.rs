// Laplace convolutions of kernels. Since the transforms multiply,
// f_{ν,μ} ★ f_{ν,ρ} is the kernel at scale 2, K_{ν,μ+ρ}(t, 2).

use efros::kernel::{eval_auto, eval_extended_split, kernel_scaled, KernelParams};
use efros::quad::{convolve, QuadratureSpec};

/// Largest relative residual of the convolution law and the split check.
pub fn run() -> efros::Result<f64> {
    let spec = QuadratureSpec::default();
    let mut worst: f64 = 0.0;
    for (nu, mu, rho, t) in [(0.5, 0.5, 0.5, 1.0), (0.4, 0.0, 0.3, 0.7), (0.6, 0.2, 0.7, 2.0)] {
        let f = KernelParams::new(nu, mu)?;
        let g = KernelParams::new(nu, rho)?;
        // The kernels vanish faster than any power at the origin.
        let kf = |x: f64| if x > 0.0 { eval_auto(f, x, &spec).map_or(f64::NAN, |e| e.value) } else { 0.0 };
        let kg = |x: f64| if x > 0.0 { eval_auto(g, x, &spec).map_or(f64::NAN, |e| e.value) } else { 0.0 };
        let conv = convolve(kf, kg, t, 0.0, 0.0, &spec)?.require("kernel convolution")?;
        let law = kernel_scaled(KernelParams::new(nu, mu + rho)?, t, 2.0, &spec)?;
        let rel = ((conv.value - law) / law).abs();
        worst = worst.max(rel);
        println!(
            "f_{{{nu},{mu}}} * f_{{{nu},{rho}}} at t = {t}: {:.15e} vs {law:.15e} ({rel:.1e}, {} evaluations)",
            conv.value, conv.evaluations
        );
    }

    // For μ ≥ 1 the kernel is a power convolution t^{λ-1}/Γ(λ) ★ f_{ν,μ-λ};
    // any admissible λ gives the same value.
    let p = KernelParams::new(0.5, 1.7)?;
    let a = eval_extended_split(p, 1.0, 1.5, &spec)?.value;
    let b = eval_extended_split(p, 1.5, 1.5, &spec)?.value;
    let c = eval_extended_split(p, 2.0, 1.5, &spec)?.value;
    let spread = [b, c].iter().map(|v| ((v - a) / a).abs()).fold(0.0, f64::max);
    worst = worst.max(spread);
    println!("f_{{0.5,1.7}}(1.5) with lambda = 1, 1.5, 2: {a:.15e} {b:.15e} {c:.15e}");
    Ok(worst)
}

fn main() -> efros::Result<()> {
    run()?;
    Ok(())
}
