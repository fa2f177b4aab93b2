//! Subgroup lattice, maximal and normal subgroups, chief series, subnormality.

use fitting::corpus::catalog::{alternating, symmetric};
use fitting::{build_group, chief_series, is_abnormal, is_subnormal, Result};

fn main() -> Result<()> {
    for spec in [symmetric(4), alternating(5)] {
        let g = build_group(&spec, 360)?;
        let subs = g.subgroups()?;
        let maximals = g.maximal_subgroups()?;
        let normals = g.normal_subgroups();
        println!("{} (order {})", g.name(), g.order());
        println!("  subgroups: {}", subs.len());
        println!("  normal subgroups: {}", normals.all.len());
        for m in maximals {
            println!(
                "  maximal of order {:>2}: normal={} abnormal={}",
                m.order(),
                g.is_normal(m),
                is_abnormal(&g, m)
            );
        }
        println!("  chief factors: {:?}", chief_series(&g).factor_orders);
    }

    let s4 = build_group(&symmetric(4), 360)?;
    let whole = s4.whole();
    let sub = s4.subgroups()?;
    let subnormal = sub
        .iter()
        .filter(|h| is_subnormal(&s4, h, &whole).is_subnormal())
        .count();
    println!(
        "S4 has {subnormal} subnormal subgroups out of {}",
        sub.len()
    );
    Ok(())
}
