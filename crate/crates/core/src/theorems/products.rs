//! Quantified statements about products and joins of subgroups.
//!
//! Each conclusion is a property of `G` alone. When it holds, some instance
//! of the hypothesis always exists (take every factor equal to `G`, or
//! `B = 1`), so the check holds without a scan. Otherwise any instance of the
//! hypothesis is a counterexample; finding none makes the check vacuous.

use fixedbitset::FixedBitSet;

use crate::error::Result;
use crate::functors::is_r_subnormal;
use crate::group::gcd;
use crate::lattice::is_subnormal;
use crate::radicals::is_nilpotent_subgroup;
use crate::subgroup::Subgroup;

use super::{Subject, Tally, Verdict};

/// Early `Ok(verdict)` return for the cases that need no scan.
fn gate(s: &Subject<'_>, t: &Tally<'_>, conclusion: bool) -> Option<Verdict> {
    if conclusion {
        return Some(t.holds_with("conclusion holds for the group"));
    }
    if s.g.order() > s.max_product_order {
        return Some(t.skipped(format!(
            "order {} above product-check limit {}",
            s.g.order(),
            s.max_product_order
        )));
    }
    None
}

fn f_subnormal(s: &Subject<'_>, h: &Subgroup) -> bool {
    is_r_subnormal(s.g, h, &s.radicals.fitting).verdict
}

fn supersoluble_f_subnormal(s: &Subject<'_>) -> Result<Vec<Subgroup>> {
    Ok(s.g
        .subgroups()?
        .iter()
        .filter(|h| f_subnormal(s, h) && s.is_supersoluble_subgroup(h))
        .cloned()
        .collect())
}

/// Bitmask over the maximal subgroups containing `h`; two subgroups
/// generate `G` iff their masks are disjoint.
fn maximal_mask(maximals: &[Subgroup], h: &Subgroup) -> FixedBitSet {
    let mut mask = FixedBitSet::with_capacity(maximals.len());
    for (i, m) in maximals.iter().enumerate() {
        if h.is_subgroup_of(m) {
            mask.insert(i);
        }
    }
    mask
}

fn pair_witness(a: &Subgroup, b: &Subgroup) -> String {
    format!("A of order {}, B of order {}", a.order(), b.order())
}

enum Scan<T> {
    Found(T),
    None,
    OverBudget,
}

/// Unordered pairs `i ≤ j` of `items`, stopping at the first match.
fn scan_pairs<F>(t: &mut Tally<'_>, items: &[Subgroup], limit: usize, mut hit: F) -> Scan<String>
where
    F: FnMut(usize, usize) -> bool,
{
    let mut seen = 0usize;
    for i in 0..items.len() {
        for j in i..items.len() {
            seen += 1;
            if seen > limit {
                t.tick(limit);
                return Scan::OverBudget;
            }
            if hit(i, j) {
                t.tick(seen);
                return Scan::Found(pair_witness(&items[i], &items[j]));
            }
        }
    }
    t.tick(seen);
    Scan::None
}

fn pair_verdict(t: &Tally<'_>, scan: Scan<String>, limit: usize, what: &str) -> Verdict {
    match scan {
        Scan::Found(w) => t.fails(format!("{w}; {what}")),
        Scan::None => t.vacuous("no pair satisfies the hypothesis"),
        Scan::OverBudget => t.skipped(format!("pair budget {limit} exhausted")),
    }
}

pub fn product_nilpotent(s: &Subject<'_>) -> Result<Verdict> {
    let g = s.g;
    let mut t = Tally::new("product-nilpotent", g);
    if let Some(v) = gate(s, &t, s.radicals.flags.nilpotent) {
        return Ok(v);
    }
    let cands: Vec<Subgroup> = g
        .subgroups()?
        .iter()
        .filter(|h| is_nilpotent_subgroup(g, h) && f_subnormal(s, h))
        .cloned()
        .collect();
    let n = g.order();
    let scan = scan_pairs(&mut t, &cands, s.budget.max_pairs, |i, j| {
        g.product_size(&cands[i], &cands[j]) == n
    });
    Ok(pair_verdict(
        &t,
        scan,
        s.budget.max_pairs,
        "G = AB is not nilpotent",
    ))
}

pub fn join_supersoluble(s: &Subject<'_>) -> Result<Verdict> {
    let g = s.g;
    let mut t = Tally::new("join-supersoluble", g);
    if let Some(v) = gate(s, &t, s.radicals.flags.supersoluble) {
        return Ok(v);
    }
    let cands = supersoluble_f_subnormal(s)?;
    let maximals = g.maximal_subgroups()?;
    let masks: Vec<FixedBitSet> = cands.iter().map(|h| maximal_mask(maximals, h)).collect();
    let scan = scan_pairs(&mut t, &cands, s.budget.max_pairs, |i, j| {
        masks[i].is_disjoint(&masks[j])
            && is_nilpotent_subgroup(g, &g.commutator_subgroup(&cands[i], &cands[j]))
    });
    Ok(pair_verdict(
        &t,
        scan,
        s.budget.max_pairs,
        "G = <A,B> with [A,B] nilpotent is not supersoluble",
    ))
}

pub fn pair_coprime_supersoluble(s: &Subject<'_>) -> Result<Verdict> {
    let g = s.g;
    let mut t = Tally::new("pair-coprime-supersoluble", g);
    if let Some(v) = gate(s, &t, s.radicals.flags.supersoluble) {
        return Ok(v);
    }
    let cands = supersoluble_f_subnormal(s)?;
    let n = g.order();
    let scan = scan_pairs(&mut t, &cands, s.budget.max_pairs, |i, j| {
        gcd(n / cands[i].order(), n / cands[j].order()) == 1
    });
    Ok(pair_verdict(
        &t,
        scan,
        s.budget.max_pairs,
        "coprime indices, G = AB not supersoluble",
    ))
}

pub fn product_nilpotent_derived(s: &Subject<'_>) -> Result<Verdict> {
    let g = s.g;
    let mut t = Tally::new("product-nilpotent-derived", g);
    if let Some(v) = gate(s, &t, s.radicals.flags.supersoluble) {
        return Ok(v);
    }
    if !is_nilpotent_subgroup(g, &s.radicals.derived) {
        return Ok(t.vacuous("derived subgroup is not nilpotent"));
    }
    let whole = g.whole();
    let cands: Vec<Subgroup> = g
        .subgroups()?
        .iter()
        .filter(|h| is_subnormal(g, h, &whole).is_subnormal() && s.is_supersoluble_subgroup(h))
        .cloned()
        .collect();
    let n = g.order();
    let scan = scan_pairs(&mut t, &cands, s.budget.max_pairs, |i, j| {
        g.product_size(&cands[i], &cands[j]) == n
    });
    Ok(pair_verdict(
        &t,
        scan,
        s.budget.max_pairs,
        "G = AB with nilpotent derived subgroup is not supersoluble",
    ))
}

pub fn product_with_nilpotent_normal(s: &Subject<'_>) -> Result<Verdict> {
    let g = s.g;
    let mut t = Tally::new("product-with-nilpotent-normal", g);
    if let Some(v) = gate(s, &t, s.radicals.flags.supersoluble) {
        return Ok(v);
    }
    let whole = g.whole();
    let normals: Vec<&Subgroup> = g
        .normal_subgroups()
        .all
        .iter()
        .filter(|b| is_nilpotent_subgroup(g, b))
        .collect();
    let n = g.order();
    let mut seen = 0usize;
    for a in g.subgroups()?.iter() {
        if !is_subnormal(g, a, &whole).is_subnormal() || !s.is_supersoluble_subgroup(a) {
            continue;
        }
        for b in &normals {
            seen += 1;
            if seen > s.budget.max_pairs {
                t.tick(s.budget.max_pairs);
                return Ok(t.skipped(format!("pair budget {} exhausted", s.budget.max_pairs)));
            }
            if g.product_size(a, b) == n {
                t.tick(seen);
                return Ok(t.fails(format!(
                    "{}; G = AB is not supersoluble",
                    pair_witness(a, b)
                )));
            }
        }
    }
    t.tick(seen);
    Ok(t.vacuous("no pair satisfies the hypothesis"))
}

/// Triples `i < j < k` with pairwise coprime indices.
fn triple_scan(
    s: &Subject<'_>,
    t: &mut Tally<'_>,
    cands: &[Subgroup],
) -> Scan<(usize, usize, usize)> {
    let n = s.g.order();
    let idx: Vec<usize> = cands.iter().map(|h| n / h.order()).collect();
    let mut seen = 0usize;
    for i in 0..cands.len() {
        for j in i + 1..cands.len() {
            if gcd(idx[i], idx[j]) != 1 {
                continue;
            }
            for k in j + 1..cands.len() {
                seen += 1;
                if seen > s.budget.max_triples {
                    t.tick(s.budget.max_triples);
                    return Scan::OverBudget;
                }
                if gcd(idx[i], idx[k]) == 1 && gcd(idx[j], idx[k]) == 1 {
                    t.tick(seen);
                    return Scan::Found((i, j, k));
                }
            }
        }
    }
    t.tick(seen);
    Scan::None
}

fn triple_verdict(
    s: &Subject<'_>,
    t: &Tally<'_>,
    cands: &[Subgroup],
    scan: Scan<(usize, usize, usize)>,
) -> Verdict {
    match scan {
        Scan::Found((i, j, k)) => t.fails(format!(
            "A, B, C of orders {}, {}, {} with pairwise coprime indices; G not supersoluble",
            cands[i].order(),
            cands[j].order(),
            cands[k].order()
        )),
        Scan::None => t.vacuous("no triple satisfies the hypothesis"),
        Scan::OverBudget => t.skipped(format!("triple budget {} exhausted", s.budget.max_triples)),
    }
}

pub fn triple_coprime_supersoluble(s: &Subject<'_>) -> Result<Verdict> {
    let mut t = Tally::new("triple-coprime-supersoluble", s.g);
    if let Some(v) = gate(s, &t, s.radicals.flags.supersoluble) {
        return Ok(v);
    }
    let cands = supersoluble_f_subnormal(s)?;
    let scan = triple_scan(s, &mut t, &cands);
    Ok(triple_verdict(s, &t, &cands, scan))
}

pub fn triple_coprime_fitting(s: &Subject<'_>) -> Result<Verdict> {
    let mut t = Tally::new("triple-coprime-fitting", s.g);
    if let Some(v) = gate(s, &t, s.radicals.flags.supersoluble) {
        return Ok(v);
    }
    let f = &s.radicals.fitting;
    let cands: Vec<Subgroup> =
        s.g.subgroups()?
            .iter()
            .filter(|h| f.is_subgroup_of(h) && s.is_supersoluble_subgroup(h))
            .cloned()
            .collect();
    let scan = triple_scan(s, &mut t, &cands);
    Ok(triple_verdict(s, &t, &cands, scan))
}
