//! Frattini, Fitting, generalized Fitting and F~ across a few groups.

use fitting::corpus::resolve_group;
use fitting::radicals::{delta, p_decomposable_residual, radical_report};
use fitting::{build_group, Result};

fn main() -> Result<()> {
    println!(
        "{:<10} {:>5} {:>4} {:>4} {:>4} {:>4} {:>5}",
        "group", "order", "Phi", "F", "F*", "F~", "Delta"
    );
    for name in ["S3", "Q8", "S4", "SL(2,3)", "A5", "S3xS4", "R294"] {
        let entry = resolve_group(name).expect("built-in group");
        let g = build_group(&entry.spec, 360)?;
        let r = radical_report(&g)?;
        println!(
            "{:<10} {:>5} {:>4} {:>4} {:>4} {:>4} {:>5}",
            g.name(),
            g.order(),
            r.frattini.order(),
            r.fitting.order(),
            r.fstar.order(),
            r.ftilde.order(),
            delta(&g)?.order()
        );
    }

    let g = build_group(&resolve_group("S3xC5").unwrap().spec, 360)?;
    for p in g.primes() {
        println!(
            "S3xC5: {p}-decomposable residual has order {}",
            p_decomposable_residual(&g, p)?.order()
        );
    }
    Ok(())
}
