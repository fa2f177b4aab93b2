//! Identities and containments among Φ, Δ, Z∞, F, F*, F̃ and the F̃ tower.

use std::collections::HashMap;

use fixedbitset::FixedBitSet;

use crate::error::Result;
use crate::group::GroupTable;
use crate::radicals::{
    delta, f_tilde, f_tilde_tau, f_tilde_tower, fitting_by_normal_scan, fitting_by_sylow_cores,
    frattini, hypercenter, is_nilpotent, is_nilpotent_subgroup, nilpotent_residual,
    p_decomposable_residual_by_commutators, p_decomposable_residual_by_scan,
    quasinilpotent_radical, socle, within, FTildeTower, MFunctor,
};
use crate::subgroup::Subgroup;

use super::{Subject, Tally, Verdict};

/// Pairs sampled for the join/commutator identities.
pub const JOIN_SAMPLE: usize = 400;

/// Last tower level worth checking: one past stabilization.
fn top_level(towers: &[&FTildeTower]) -> usize {
    towers
        .iter()
        .map(|t| t.stabilization_index() + 1)
        .max()
        .unwrap_or(1)
}

pub fn radical_chain(s: &Subject<'_>) -> Result<Verdict> {
    let r = &s.radicals;
    let mut t = Tally::new("radical-chain", s.g);
    t.tick(4);
    Ok(match r.chain_violation() {
        None => t.holds_with(format!(
            "{} <= {} <= {} <= {} <= {}",
            r.frattini.order(),
            r.fitting.order(),
            r.fstar.order(),
            r.ftilde_inf().order(),
            r.ftilde.order()
        )),
        Some(link) => t.fails(format!("{link} is broken")),
    })
}

pub fn dual_oracles(s: &Subject<'_>) -> Result<Verdict> {
    let g = s.g;
    let mut t = Tally::new("dual-oracles", g);
    let a = fitting_by_normal_scan(g);
    let b = fitting_by_sylow_cores(g);
    t.tick(1);
    if a != b {
        return Ok(t.fails(format!(
            "Fitting subgroup: normal scan order {}, Sylow cores order {}",
            a.order(),
            b.order()
        )));
    }
    let lcs = nilpotent_residual(g).is_trivial();
    if lcs != is_nilpotent(g) {
        return Ok(t.fails("nilpotency by Sylow normality and by lower central series differ"));
    }
    for p in g.primes() {
        t.tick(1);
        let x = p_decomposable_residual_by_commutators(g, p);
        let y = p_decomposable_residual_by_scan(g, p)?;
        if x != y {
            return Ok(t.fails(format!(
                "{p}-decomposable residual: commutators order {}, scan order {}",
                x.order(),
                y.order()
            )));
        }
    }
    Ok(t.holds())
}

/// `{xy : x ∈ set, y ∈ h}`
fn set_times(g: &GroupTable, set: &FixedBitSet, h: &Subgroup) -> FixedBitSet {
    let mut out = FixedBitSet::with_capacity(g.order());
    let hs = h.to_vec();
    for x in set.ones() {
        for &y in &hs {
            out.insert(g.mul(x, y));
        }
    }
    out
}

pub fn join_commutator_identities(s: &Subject<'_>) -> Result<Verdict> {
    let g = s.g;
    let mut t = Tally::new("join-commutator-identities", g);
    let lattice = g.subgroups()?;
    let l = lattice.len();
    let total = l * (l + 1) / 2;
    let target = JOIN_SAMPLE.min(s.budget.max_pairs).max(1);
    let stride = (total / target).max(1);
    let mut k = 0usize;
    for i in 0..l {
        for j in i..l {
            k += 1;
            if !(k - 1).is_multiple_of(stride) {
                continue;
            }
            t.tick(1);
            let (a, b) = (&lattice.items[i], &lattice.items[j]);
            let join = g.join(a, b);
            let c = g.commutator_subgroup(a, b);
            let fail =
                |what: &str| format!("A of order {}, B of order {}: {what}", a.order(), b.order());
            if !g.is_normal_in(&c, &join) {
                return Ok(t.fails(fail("[A,B] not normal in <A,B>")));
            }
            if !g.is_normal_in(&g.join(a, &c), &join) || !g.is_normal_in(&g.join(b, &c), &join) {
                return Ok(t.fails(fail("A[A,B] or B[A,B] not normal in <A,B>")));
            }
            if &set_times(g, &g.set_product(a, b).members, &c) != join.bits() {
                return Ok(t.fails(fail("<A,B> differs from AB[A,B]")));
            }
            let (da, db) = (g.derived_subgroup(a), g.derived_subgroup(b));
            let dj = g.derived_subgroup(&join);
            if &set_times(g, &g.set_product(&da, &db).members, &c) != dj.bits() {
                return Ok(t.fails(fail("<A,B>' differs from A'B'[A,B]")));
            }
        }
    }
    Ok(t.holds_with(format!("{} of {total} pairs sampled", t.cost())))
}

pub fn delta_frattini(s: &Subject<'_>) -> Result<Verdict> {
    let g = s.g;
    let r = &s.radicals;
    let mut t = Tally::new("delta-frattini", g);
    let q = g.quotient(&r.frattini)?;
    t.tick(4);
    let d_bar = delta(&q.image)?;
    let pushed = q.push_forward(&r.delta);
    let zinf = hypercenter(&q.image)?;
    let z = q.image.center();
    let orders = format!(
        "Delta(G/Phi)={} Delta/Phi={} Zinf(G/Phi)={} Z(G/Phi)={}",
        d_bar.order(),
        pushed.order(),
        zinf.order(),
        z.order()
    );
    if d_bar != pushed || pushed != zinf || zinf != z {
        return Ok(t.fails(orders));
    }
    Ok(t.require(is_nilpotent_subgroup(g, &r.delta), || {
        "Delta is not nilpotent".into()
    }))
}

pub fn residual_centralizes_hypercenter(s: &Subject<'_>) -> Result<Verdict> {
    let g = s.g;
    let r = &s.radicals;
    let mut t = Tally::new("residual-centralizes-hypercenter", g);
    t.tick(1);
    let c = g.centralizer_of(&r.hypercenter);
    Ok(t.require(r.nilpotent_residual.is_subgroup_of(&c), || {
        format!(
            "residual of order {} not inside centralizer of order {}",
            r.nilpotent_residual.order(),
            c.order()
        )
    }))
}

pub fn fstar_centralizer(s: &Subject<'_>) -> Result<Verdict> {
    let g = s.g;
    let r = &s.radicals;
    let mut t = Tally::new("fstar-centralizer", g);
    t.tick(1);
    let c = g.centralizer_of(&r.fstar);
    Ok(t.require(c.is_subgroup_of(&r.fitting), || {
        format!("C(F*) has order {} and is not inside F", c.order())
    }))
}

pub fn tower_quotient(s: &Subject<'_>) -> Result<Verdict> {
    let g = s.g;
    let tower = &s.radicals.tower;
    let mut t = Tally::new("tower-quotient", g);
    let mut towers: HashMap<FixedBitSet, (crate::group::QuotientMap, FTildeTower)> = HashMap::new();
    let top = top_level(&[tower]);
    for n in 1..=top {
        let phi_prev = within(g, tower.level(n - 1), frattini)?;
        for nn in g.normal_subgroups().all.iter() {
            if nn.is_trivial() || !nn.is_subgroup_of(&phi_prev) {
                continue;
            }
            t.tick(1);
            if !towers.contains_key(nn.bits()) {
                let q = g.quotient(nn)?;
                let tq = f_tilde_tower(&q.image)?;
                towers.insert(nn.bits().clone(), (q, tq));
            }
            let (q, tq) = &towers[nn.bits()];
            if tq.level(n) != &q.push_forward(tower.level(n)) {
                return Ok(t.fails(format!(
                    "n={n}, N of order {}: F~^n(G/N) has order {}, F~^n(G)/N has order {}",
                    nn.order(),
                    tq.level(n).order(),
                    tower.level(n).order() / nn.order()
                )));
            }
        }
    }
    Ok(if t.cost() == 0 {
        t.holds_with("only N = 1 qualifies")
    } else {
        t.holds()
    })
}

pub fn tower_contains_fstar(s: &Subject<'_>) -> Result<Verdict> {
    let r = &s.radicals;
    let mut t = Tally::new("tower-contains-fstar", s.g);
    for n in 1..=top_level(&[&r.tower]) {
        t.tick(1);
        if !r.fstar.is_subgroup_of(r.tower.level(n)) {
            return Ok(t.fails(format!("F* not inside F~^{n}")));
        }
    }
    Ok(t.holds())
}

pub fn tower_frattini_free(s: &Subject<'_>) -> Result<Verdict> {
    let g = s.g;
    let r = &s.radicals;
    let mut t = Tally::new("tower-frattini-free", g);
    let mut instances = 0;
    for n in 1..=top_level(&[&r.tower]) {
        t.tick(1);
        if !within(g, r.tower.level(n - 1), frattini)?.is_trivial() {
            continue;
        }
        instances += 1;
        if r.tower.level(n) != &r.fstar {
            return Ok(t.fails(format!(
                "n={n}: F~^n has order {}, F* has order {}",
                r.tower.level(n).order(),
                r.fstar.order()
            )));
        }
        if n == 1 && socle(g) != r.ftilde {
            return Ok(t.fails("Phi = 1 but F~ differs from the socle"));
        }
    }
    Ok(if instances == 0 {
        t.vacuous("Phi(F~^(n-1)) is never trivial")
    } else {
        t.holds()
    })
}

pub fn tower_centralizer(s: &Subject<'_>) -> Result<Verdict> {
    let g = s.g;
    let r = &s.radicals;
    let mut t = Tally::new("tower-centralizer", g);
    for n in 1..=top_level(&[&r.tower]) {
        t.tick(1);
        let c = g.centralizer_of(r.tower.level(n));
        if !c.is_subgroup_of(&r.fitting) {
            return Ok(t.fails(format!("C(F~^{n}) of order {} not inside F", c.order())));
        }
    }
    Ok(t.holds())
}

pub fn tower_normal_monotone(s: &Subject<'_>) -> Result<Verdict> {
    let g = s.g;
    let tower = &s.radicals.tower;
    let mut t = Tally::new("tower-normal-monotone", g);
    for nn in g.normal_subgroups().all.iter() {
        if nn.is_trivial() || nn.is_whole() {
            continue;
        }
        let emb = g.as_group(nn);
        let tn = f_tilde_tower(&emb.group)?;
        for n in 1..=top_level(&[tower, &tn]) {
            t.tick(1);
            if !emb.lift(tn.level(n)).is_subgroup_of(tower.level(n)) {
                return Ok(t.fails(format!(
                    "n={n}, N of order {}: F~^n(N) of order {} not inside F~^n(G)",
                    nn.order(),
                    tn.level(n).order()
                )));
            }
        }
    }
    Ok(t.holds())
}

pub fn tower_image(s: &Subject<'_>) -> Result<Verdict> {
    let g = s.g;
    let tower = &s.radicals.tower;
    let mut t = Tally::new("tower-image", g);
    for nn in g.normal_subgroups().all.iter() {
        if nn.is_trivial() || nn.is_whole() {
            continue;
        }
        let q = g.quotient(nn)?;
        let tq = f_tilde_tower(&q.image)?;
        for n in 1..=top_level(&[tower, &tq]) {
            t.tick(1);
            if !q.push_forward(tower.level(n)).is_subgroup_of(tq.level(n)) {
                return Ok(t.fails(format!(
                    "n={n}, N of order {}: image of F~^n(G) not inside F~^n(G/N)",
                    nn.order()
                )));
            }
        }
    }
    Ok(t.holds())
}

/// Unordered pairs of nontrivial normal subgroups with `G = N × H`.
pub fn direct_decompositions(g: &GroupTable) -> Vec<(Subgroup, Subgroup)> {
    let normals = &g.normal_subgroups().all.items;
    let mut out = Vec::new();
    for (i, a) in normals.iter().enumerate() {
        for b in &normals[i + 1..] {
            if !a.is_trivial()
                && !b.is_trivial()
                && a.order() * b.order() == g.order()
                && a.intersection(b).is_trivial()
            {
                out.push((a.clone(), b.clone()));
            }
        }
    }
    out
}

pub fn tower_direct_product(s: &Subject<'_>) -> Result<Verdict> {
    let g = s.g;
    let tower = &s.radicals.tower;
    let mut t = Tally::new("tower-direct-product", g);
    let decomps = direct_decompositions(g);
    if decomps.is_empty() {
        return Ok(t.vacuous("no decomposition G = N x H with both factors nontrivial"));
    }
    for (a, b) in &decomps {
        let (ea, eb) = (g.as_group(a), g.as_group(b));
        let (ta, tb) = (f_tilde_tower(&ea.group)?, f_tilde_tower(&eb.group)?);
        for n in 1..=top_level(&[tower, &ta, &tb]) {
            t.tick(1);
            let product = g.join(&ea.lift(ta.level(n)), &eb.lift(tb.level(n)));
            if &product != tower.level(n) {
                return Ok(t.fails(format!(
                    "n={n}, factors of orders {} and {}: product has order {}, F~^n(G) has order {}",
                    a.order(),
                    b.order(),
                    product.order(),
                    tower.level(n).order()
                )));
            }
        }
    }
    Ok(t.holds_with(format!("{} decompositions", decomps.len())))
}

pub fn delta_quotient(s: &Subject<'_>) -> Result<Verdict> {
    let g = s.g;
    let r = &s.radicals;
    let mut t = Tally::new("delta-quotient", g);
    t.tick(1);
    if !r.delta.is_subgroup_of(&r.ftilde) {
        return Ok(t.fails("Delta not inside F~"));
    }
    let q = g.quotient(&r.delta)?;
    let image = f_tilde(&q.image)?;
    Ok(t.require(image == q.push_forward(&r.ftilde), || {
        format!(
            "F~(G/Delta) has order {}, F~/Delta has order {}",
            image.order(),
            r.ftilde.order() / r.delta.order()
        )
    }))
}

pub fn ftilde_delta(s: &Subject<'_>) -> Result<Verdict> {
    let g = s.g;
    let mut t = Tally::new("ftilde-delta", g);
    t.tick(1);
    let tau = f_tilde_tau(g, &MFunctor::abnormal())?;
    if tau.phi_tau != s.radicals.delta {
        return Ok(t.fails("intersection of abnormal maximal subgroups differs from Delta"));
    }
    Ok(t.require(tau.f_tilde_tau == s.radicals.ftilde, || {
        format!(
            "F~ over abnormal maximals has order {}, F~ has order {}",
            tau.f_tilde_tau.order(),
            s.radicals.ftilde.order()
        )
    }))
}

pub fn ftilde_tau_contains(s: &Subject<'_>) -> Result<Verdict> {
    let g = s.g;
    let mut t = Tally::new("ftilde-tau-contains", g);
    let mut flagged = Vec::new();
    for tau in [MFunctor::all(), MFunctor::abnormal()] {
        t.tick(1);
        let r = f_tilde_tau(g, &tau)?;
        if r.only_whole_group {
            flagged.push(tau.name.clone());
        }
        if !s.radicals.ftilde.is_subgroup_of(&r.f_tilde_tau) {
            return Ok(t.fails(format!("F~ not inside F~_tau for {}", tau.name)));
        }
        if !g
            .centralizer_of(&r.f_tilde_tau)
            .is_subgroup_of(&r.f_tilde_tau)
        {
            return Ok(t.fails(format!("C(F~_tau) not inside F~_tau for {}", tau.name)));
        }
    }
    Ok(if flagged.is_empty() {
        t.holds()
    } else {
        t.holds_with(format!("tau(G) = {{G}} for: {}", flagged.join(", ")))
    })
}

/// `N/Φ(N)` is quasinilpotent.
fn frattini_quotient_quasinilpotent(g: &GroupTable, n: &Subgroup) -> Result<bool> {
    let emb = g.as_group(n);
    let phi = frattini(&emb.group)?;
    let q = emb.group.quotient(&phi)?;
    Ok(quasinilpotent_radical(&q.image)?.is_whole())
}

pub fn quasinilpotent_frattini_radical(s: &Subject<'_>) -> Result<Verdict> {
    let g = s.g;
    let inf = s.radicals.ftilde_inf();
    let mut t = Tally::new("quasinilpotent-frattini-radical", g);
    let mut largest = g.trivial();
    for n in g.normal_subgroups().all.iter() {
        t.tick(1);
        if frattini_quotient_quasinilpotent(g, n)? {
            if !n.is_subgroup_of(inf) {
                return Ok(t.fails(format!(
                    "normal subgroup of order {} qualifies but is not inside F~inf",
                    n.order()
                )));
            }
            if n.order() > largest.order() {
                largest = n.clone();
            }
        }
    }
    Ok(t.require(&largest == inf, || {
        format!(
            "largest qualifying normal subgroup has order {}, F~inf has order {}",
            largest.order(),
            inf.order()
        )
    }))
}
