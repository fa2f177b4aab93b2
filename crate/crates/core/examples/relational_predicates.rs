//! R-subnormality, P-subnormality and conjugate-permutability.

use fitting::corpus::catalog::{alternating, symmetric};
use fitting::functors::{is_p_subnormal, is_r_conjugate_permutable, is_r_subnormal};
use fitting::radicals::{f_tilde, fitting};
use fitting::{build_group, Result};

fn main() -> Result<()> {
    let s4 = build_group(&symmetric(4), 360)?;
    let f = fitting(&s4)?;
    let ft = f_tilde(&s4)?;
    for m in s4.maximal_subgroups()? {
        let sub = is_r_subnormal(&s4, m, &ft);
        let cp = is_r_conjugate_permutable(&s4, m, &f);
        println!(
            "S4 maximal of order {:>2}: F~-subnormal={}  F-conjugate-permutable={}",
            m.order(),
            sub.verdict,
            cp.verdict
        );
        if let Some(w) = sub.witness {
            println!("    witness: {w}");
        }
    }

    let a5 = build_group(&alternating(5), 360)?;
    let whole = a5.whole();
    for h in [a5.trivial(), a5.sylow_subgroup(5)] {
        let r = is_p_subnormal(&a5, &h, &whole)?;
        let w = r.witness.map(|w| w.to_string()).unwrap_or_default();
        println!(
            "A5 subgroup of order {}: P-subnormal={} {w}",
            h.order(),
            r.verdict
        );
    }
    Ok(())
}
