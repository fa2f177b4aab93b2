//! The F~ tower G >= F~(G) >= F~(F~(G)) >= ... and its limit.

use fitting::corpus::builtin_catalog;
use fitting::radicals::{f_tilde_tau, f_tilde_tower};
use fitting::{build_group, MFunctor, Result};

fn main() -> Result<()> {
    for entry in builtin_catalog().iter().filter(|e| !e.has_tag("cyclic")) {
        let g = build_group(&entry.spec, 360)?;
        let tower = f_tilde_tower(&g)?;
        let orders: Vec<String> = tower.terms.iter().map(|t| t.order().to_string()).collect();
        let tau = f_tilde_tau(&g, &MFunctor::abnormal())?;
        println!(
            "{:<10} tower {:<16} index {}  F~ over abnormal maximals: {}",
            g.name(),
            orders.join(" > "),
            tower.stabilization_index(),
            tau.f_tilde_tau.order()
        );
    }
    Ok(())
}
