//! Nilpotency criteria through subnormality and conjugate-permutability
//! relative to F* and F̃.

use crate::error::Result;
use crate::functors::{is_r_conjugate_permutable, is_r_subnormal};
use crate::lattice::is_abnormal;
use crate::subgroup::Subgroup;

use super::{Subject, Tally, Verdict};

/// Every Sylow subgroup, grouped by prime, each class in canonical order.
pub(crate) fn all_sylow_subgroups(s: &Subject<'_>) -> Vec<Subgroup> {
    let g = s.g;
    g.primes()
        .into_iter()
        .flat_map(|p| g.conjugates(&g.sylow_subgroup(p)))
        .collect()
}

/// First subgroup in `hs` failing `pred`, as a witness string.
fn first_failure<'a, I, F>(t: &mut Tally<'_>, hs: I, mut pred: F) -> Option<String>
where
    I: IntoIterator<Item = &'a Subgroup>,
    F: FnMut(&Subgroup) -> Option<String>,
{
    for h in hs {
        t.tick(1);
        if let Some(w) = pred(h) {
            return Some(format!("subgroup of order {}: {w}", h.order()));
        }
    }
    None
}

pub fn maximal_ftilde_subnormal(s: &Subject<'_>) -> Result<Verdict> {
    let g = s.g;
    let mut t = Tally::new("maximal-ftilde-subnormal", g);
    let ft = &s.radicals.ftilde;
    let maximals = g.maximal_subgroups()?;
    let nilpotent = s.radicals.flags.nilpotent;
    let failure = first_failure(&mut t, maximals, |m| {
        let r = is_r_subnormal(g, m, ft);
        (!r.verdict).then(|| format!("not F~-subnormal ({})", r.witness.unwrap()))
    });
    let rhs = failure.is_none();
    if nilpotent != rhs {
        return Ok(t.fails(format!(
            "nilpotent={nilpotent}, all maximal F~-subnormal={rhs}{}",
            failure.map(|w| format!("; {w}")).unwrap_or_default()
        )));
    }
    if !nilpotent {
        let escapes = maximals
            .iter()
            .any(|m| is_abnormal(g, m) && !ft.is_subgroup_of(m));
        t.tick(maximals.len());
        if !escapes {
            return Ok(t.fails("non-nilpotent but F~ lies in every abnormal maximal subgroup"));
        }
    }
    Ok(t.holds_with(format!("nilpotent={nilpotent}")))
}

pub fn sylow_fstar_subnormal(s: &Subject<'_>) -> Result<Verdict> {
    let g = s.g;
    let mut t = Tally::new("sylow-fstar-subnormal", g);
    let fstar = &s.radicals.fstar;
    let lattice = g.subgroups()?;
    let sylows = all_sylow_subgroups(s);
    let subnormal = |h: &Subgroup| is_r_subnormal(g, h, fstar).verdict;

    let c1 = s.radicals.flags.nilpotent;
    let mut c2 = true;
    for h in lattice.iter() {
        t.tick(1);
        if is_abnormal(g, h) && !subnormal(h) {
            c2 = false;
            break;
        }
    }
    let normalizers: Vec<Subgroup> = sylows.iter().map(|p| g.normalizer(p)).collect();
    t.tick(normalizers.len());
    let c3 = normalizers.iter().all(subnormal);
    let mut c4 = true;
    for x in 1..g.order() {
        if g.prime_power_prime(x).is_some() {
            t.tick(1);
            if !subnormal(&g.closure([x])) {
                c4 = false;
                break;
            }
        }
    }
    t.tick(sylows.len());
    let c5 = sylows.iter().all(subnormal);
    let c6 = normalizers.iter().all(|n| fstar.is_subgroup_of(n));
    let flags = [c1, c2, c3, c4, c5, c6];
    let summary = format!(
        "nilpotent={c1} abnormal={c2} sylow-normalizers={c3} cyclic-primary={c4} sylow={c5} fstar-in-normalizers={c6}"
    );
    Ok(if flags.iter().all(|&b| b == c1) {
        t.holds_with(summary)
    } else {
        t.fails(summary)
    })
}

pub fn maximal_conjugate_permutable(s: &Subject<'_>) -> Result<Verdict> {
    let g = s.g;
    let mut t = Tally::new("maximal-conjugate-permutable", g);
    let maximals = g.maximal_subgroups()?;
    let failure = first_failure(&mut t, maximals, |m| {
        let r = is_r_conjugate_permutable(g, m, &s.radicals.ftilde);
        (!r.verdict).then(|| r.witness.unwrap().to_string())
    });
    Ok(t.equivalence(
        s.radicals.flags.nilpotent,
        failure.is_none(),
        ("nilpotent", "all maximal F~-conjugate-permutable"),
    ))
}

pub fn sylow_conjugate_permutable(s: &Subject<'_>) -> Result<Verdict> {
    let g = s.g;
    let mut t = Tally::new("sylow-conjugate-permutable", g);
    let sylows = all_sylow_subgroups(s);
    let failure = first_failure(&mut t, &sylows, |p| {
        let r = is_r_conjugate_permutable(g, p, &s.radicals.fstar);
        (!r.verdict).then(|| r.witness.unwrap().to_string())
    });
    Ok(t.equivalence(
        s.radicals.flags.nilpotent,
        failure.is_none(),
        ("nilpotent", "all Sylow F*-conjugate-permutable"),
    ))
}
