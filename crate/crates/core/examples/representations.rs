// Five ways to compute the one-sided stable density f_{ν,0}(t), and the
// route eval_auto picks for each point.

use efros::kernel::{
    eval_auto, eval_mikusinski_cos, eval_mikusinski_finite, eval_mikusinski_laplace, eval_stankovic,
    eval_wright_route, CosVariant, KernelParams,
};
use efros::quad::QuadratureSpec;

/// Largest pairwise relative spread over the grid.
pub fn run() -> efros::Result<f64> {
    let spec = QuadratureSpec::default();
    let mut worst: f64 = 0.0;
    println!("{:>4} {:>5} {:>20} {:>9} {:>9} {:>9} {:>9}  auto route", "nu", "t", "stankovic", "laplace", "finite", "wright", "cos");
    for nu in [0.2, 0.4, 0.5, 0.6, 0.8] {
        let p = KernelParams::new(nu, 0.0)?;
        for t in [0.5, 1.0, 2.0, 5.0] {
            let base = eval_stankovic(p, t, &spec)?.value;
            let mut others = vec![
                eval_mikusinski_laplace(nu, t, &spec)?.value,
                eval_mikusinski_finite(nu, t, &spec)?.value,
                eval_wright_route(p, t)?.value,
            ];
            // The sine-corrected cosine form is only set up for ν ≤ 1/2.
            if nu <= 0.5 {
                others.push(eval_mikusinski_cos(nu, t, CosVariant::SinCorrected, &spec)?.value);
            }
            let rel: Vec<f64> = others.iter().map(|v| ((v - base) / base).abs()).collect();
            worst = rel.iter().copied().fold(worst, f64::max);
            let cols: Vec<String> = rel.iter().map(|r| format!("{r:>9.1e}")).collect();
            let auto = eval_auto(p, t, &spec)?;
            println!("{nu:>4} {t:>5} {base:>20.14e} {} {:>9}  {}", cols.join(" "), if nu > 0.5 { "-" } else { "" }, auto.method.as_str());
        }
    }
    println!("columns after the first are relative differences from it");
    Ok(worst)
}

fn main() -> efros::Result<()> {
    run()?;
    Ok(())
}
