//! Exhaustive oracles that share no code with the library's algorithms.
#![allow(dead_code)]

use fitting::corpus::{builtin_catalog, CorpusEntry};
use fitting::{build_group, GroupTable, Subgroup};

/// Subsets of a group of order at most 64, as bitmasks.
pub type Mask = u64;

pub fn mask_of(h: &Subgroup) -> Mask {
    h.elements().fold(0, |m, x| m | 1 << x)
}

pub fn size(m: Mask) -> usize {
    m.count_ones() as usize
}

pub fn elements(m: Mask) -> impl Iterator<Item = usize> {
    (0..64).filter(move |&i| m >> i & 1 == 1)
}

fn closed(g: &GroupTable, m: Mask) -> bool {
    elements(m).all(|a| elements(m).all(|b| m >> g.mul(a, b) & 1 == 1))
}

/// Every subgroup, found by testing each subset of each divisor size for closure.
pub fn brute_subgroups(g: &GroupTable) -> Vec<Mask> {
    let n = g.order();
    assert!(n <= 32, "exhaustive search is for small groups");
    let mut out = vec![1];
    let rest = n - 1;
    for d in (2..=n).filter(|d| n.is_multiple_of(*d)) {
        let k = d - 1;
        // Gosper's hack over k-subsets of the non-identity elements
        let mut s: u64 = (1 << k) - 1;
        while s < 1 << rest {
            let m = s << 1 | 1;
            if closed(g, m) {
                out.push(m);
            }
            let c = s & s.wrapping_neg();
            let r = s + c;
            s = (((r ^ s) >> 2) / c) | r;
        }
    }
    out
}

pub fn brute_is_normal(g: &GroupTable, h: Mask) -> bool {
    (0..g.order()).all(|x| elements(h).all(|a| h >> g.mul(g.mul(g.inv(x), a), x) & 1 == 1))
}

pub fn brute_is_normal_in(g: &GroupTable, h: Mask, k: Mask) -> bool {
    elements(k).all(|x| elements(h).all(|a| h >> g.mul(g.mul(g.inv(x), a), x) & 1 == 1))
}

pub fn subset(a: Mask, b: Mask) -> bool {
    a & !b == 0
}

pub fn brute_maximal(lattice: &[Mask], whole: Mask) -> Vec<Mask> {
    lattice
        .iter()
        .copied()
        .filter(|&m| {
            m != whole
                && !lattice
                    .iter()
                    .any(|&k| k != whole && k != m && subset(m, k))
        })
        .collect()
}

/// `H` is subnormal in `K` iff some chain `H = H₀ ◁ H₁ ◁ … ◁ K` exists in the lattice.
pub fn brute_subnormal(g: &GroupTable, lattice: &[Mask], h: Mask, k: Mask) -> bool {
    if h == k {
        return true;
    }
    lattice.iter().any(|&m| {
        m != k
            && subset(h, m)
            && subset(m, k)
            && brute_is_normal_in(g, m, k)
            && brute_subnormal(g, lattice, h, m)
    })
}

pub fn brute_center(g: &GroupTable) -> Mask {
    (0..g.order())
        .filter(|&z| (0..g.order()).all(|x| g.mul(z, x) == g.mul(x, z)))
        .fold(0, |m, z| m | 1 << z)
}

pub fn small_catalog(max_order: usize) -> Vec<(CorpusEntry, GroupTable)> {
    builtin_catalog()
        .into_iter()
        .filter_map(|e| {
            let g = build_group(&e.spec, 360).ok()?;
            (g.order() <= max_order).then_some((e, g))
        })
        .collect()
}

pub fn catalog_tables() -> Vec<GroupTable> {
    builtin_catalog()
        .iter()
        .map(|e| build_group(&e.spec, 360).expect("catalog group builds"))
        .collect()
}
