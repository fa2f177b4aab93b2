//! Run every check on one group and print each verdict.

use fitting::corpus::resolve_group;
use fitting::theorems::{run_checks, Budget, Subject, CHECKS};
use fitting::{build_group, Result};

fn main() -> Result<()> {
    let name = std::env::args().nth(1).unwrap_or_else(|| "S4".into());
    let entry = resolve_group(&name).expect("built-in group or AxB product");
    let g = build_group(&entry.spec, 360)?;
    let subject = Subject::new(&g, Budget::default(), 200)?;
    for (info, v) in CHECKS.iter().zip(run_checks(&subject, &[])?) {
        println!(
            "{:<34} {:<8} {:>8}  {}",
            v.check_id,
            v.status.as_str(),
            v.cost,
            v.witness.as_deref().unwrap_or(info.summary)
        );
    }
    Ok(())
}
