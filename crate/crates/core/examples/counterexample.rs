//! Certify the order-294 group in which two supersoluble F-subnormal
//! subgroups of coprime index have a non-supersoluble product.

use fitting::theorems::counterexample::build_counterexample;
use fitting::theorems::{check_info, run_check, Budget, Subject};
use fitting::Result;

fn main() -> Result<()> {
    let (r, cert) = build_counterexample()?;
    for (what, ok) in cert.properties() {
        println!("[{}] {what}", if ok { "x" } else { " " });
    }
    // The product checks only scan groups up to the given order.
    let s = Subject::new(&r, Budget::default(), r.order())?;
    let v = run_check(check_info("pair-coprime-supersoluble").unwrap(), &s)?;
    println!(
        "pair-coprime-supersoluble on {}: {} ({})",
        r.name(),
        v.status.as_str(),
        v.witness.unwrap_or_default()
    );
    Ok(())
}
