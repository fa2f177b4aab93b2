//! Supersolubility criteria through maximal subgroups and the Fitting subgroup.

use crate::error::Result;
use crate::functors::is_r_p_subnormal;
use crate::subgroup::Subgroup;

use super::{Subject, Tally, Verdict};

pub fn fitting_sylow_maximals(s: &Subject<'_>) -> Result<Verdict> {
    let g = s.g;
    let mut t = Tally::new("fitting-sylow-maximals-supersoluble", g);
    if !s.radicals.flags.soluble {
        return Ok(t.vacuous("not soluble"));
    }
    let emb = g.as_group(&s.radicals.fitting);
    let f = &emb.group;
    let lattice = f.subgroups()?;
    for p in f.primes() {
        // F is nilpotent, so its Sylow p-subgroup is unique
        let sylow = f.sylow_subgroup(p);
        for m in lattice
            .iter()
            .filter(|m| m.order() * p == sylow.order() && m.is_subgroup_of(&sylow))
        {
            t.tick(1);
            if !g.is_normal(&emb.lift(m)) {
                return Ok(t.vacuous(format!(
                    "a maximal subgroup of order {} of the Sylow {p}-subgroup of F is not normal",
                    m.order()
                )));
            }
        }
    }
    Ok(t.require(s.radicals.flags.supersoluble, || {
        "hypothesis holds but the group is not supersoluble".into()
    }))
}

pub fn frattini_intersection(s: &Subject<'_>) -> Result<Verdict> {
    let g = s.g;
    let mut t = Tally::new("frattini-intersection", g);
    let ft = &s.radicals.ftilde;
    let mut meet = g.whole();
    for m in g.maximal_subgroups()? {
        t.tick(1);
        if g.product_size(m, ft) == g.order() {
            meet = meet.intersection(m);
        }
    }
    Ok(t.require(meet == s.radicals.frattini, || {
        format!(
            "intersection has order {}, Frattini subgroup has order {}",
            meet.order(),
            s.radicals.frattini.order()
        )
    }))
}

/// First maximal subgroup that is not ℙ-subnormal in its join with `r`.
fn first_non_p_subnormal(
    s: &Subject<'_>,
    t: &mut Tally<'_>,
    r: &Subgroup,
) -> Result<Option<String>> {
    let g = s.g;
    for m in g.maximal_subgroups()? {
        t.tick(1);
        let res = is_r_p_subnormal(g, m, r)?;
        if !res.verdict {
            return Ok(Some(format!(
                "maximal subgroup of order {}: {}",
                m.order(),
                res.witness.unwrap()
            )));
        }
    }
    Ok(None)
}

pub fn maximal_fitting_p_subnormal(s: &Subject<'_>) -> Result<Verdict> {
    let g = s.g;
    let mut t = Tally::new("maximal-fitting-p-subnormal", g);
    if !s.radicals.flags.soluble {
        return Ok(t.vacuous("not soluble"));
    }
    if let Some(w) = first_non_p_subnormal(s, &mut t, &s.radicals.fitting)? {
        return Ok(t.vacuous(w));
    }
    Ok(t.require(s.radicals.flags.supersoluble, || {
        "every maximal subgroup is F-P-subnormal but the group is not supersoluble".into()
    }))
}

pub fn p_subnormal_supersoluble(s: &Subject<'_>) -> Result<Verdict> {
    let mut t = Tally::new("p-subnormal-supersoluble", s.g);
    let failure = first_non_p_subnormal(s, &mut t, &s.radicals.ftilde)?;
    let v = t.equivalence(
        s.radicals.flags.supersoluble,
        failure.is_none(),
        ("supersoluble", "all maximal F~-P-subnormal"),
    );
    Ok(match (v.status, failure) {
        (super::Status::Fails, Some(w)) => t.fails(format!("{}; {w}", v.witness.unwrap())),
        _ => v,
    })
}
