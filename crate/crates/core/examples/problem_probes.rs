//! Probe how fast the F~ tower stabilizes and whether F~inf can replace F~
//! in the maximal-subgroup nilpotency criterion.

use fitting::corpus::builtin_catalog;
use fitting::theorems::probes::{probe_problems, ProbeSummary};
use fitting::{build_group, Result};

fn main() -> Result<()> {
    let mut probes = Vec::new();
    for entry in builtin_catalog() {
        let g = build_group(&entry.spec, 360)?;
        probes.push(probe_problems(&g)?);
    }
    let s = ProbeSummary::from_probes(&probes);
    println!("groups probed: {}", s.groups);
    println!("largest stabilization index: {}", s.max_index);
    println!("groups needing more than one step: {:?}", s.high_index);
    println!("F~inf criterion violations: {:?}", s.criterion_violations);
    println!("skipped: {:?}", s.criterion_skipped);
    Ok(())
}
