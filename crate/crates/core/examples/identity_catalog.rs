// Browse the identity catalog and check a few entries, including the
// misprinted right side kept alongside the derived one.

use efros::identities::{catalog, find, verify_identity, verify_variant, IdentityReport};
use efros::quad::QuadratureSpec;

/// Reports for the identities checked here, printed ones last.
pub fn run() -> efros::Result<Vec<IdentityReport>> {
    let spec = QuadratureSpec::default();
    for i in catalog() {
        let variants: Vec<&str> = i.variants.iter().map(|v| v.as_str()).collect();
        println!("{}  {}  [{}]", i.id, i.paper_eq, variants.join(", "));
    }

    let mut reports = Vec::new();
    for id in ["ID-01", "ID-02", "ID-10"] {
        reports.push(verify_identity(id, None, 1e-6, &spec)?);
    }
    let erf = find("ID-17")?;
    println!("\n{}: weight {}; transform pair {}", erf.id, erf.weight_desc, erf.quote);
    for v in erf.variants {
        reports.push(verify_variant(erf.id, *v, None, 1e-6, &spec)?);
    }
    for r in &reports {
        println!(
            "{} {:<9} {} max rel residual {:.2e} over {} points",
            r.id,
            r.variant.as_str(),
            if r.passed { "pass" } else { "FAIL" },
            r.max_rel_residual,
            r.points.len()
        );
    }
    Ok(reports)
}

fn main() -> efros::Result<()> {
    run()?;
    Ok(())
}
