//! Relational subgroup predicates: `H` is subnormal, ℙ-subnormal or
//! conjugate-permutable inside the join `⟨H, R⟩`.

use std::collections::HashSet;
use std::fmt;

use fixedbitset::FixedBitSet;

use crate::error::Result;
use crate::group::{is_prime, GroupTable};
use crate::lattice::{self, Subnormality};
use crate::subgroup::Subgroup;

/// Explanation attached to a predicate verdict.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    /// Normal-closure descent that stalled above `H` inside the join.
    StalledChain {
        join: Subgroup,
        chain: Vec<Subgroup>,
    },
    /// A prime-index chain from `H` up to the target.
    PrimeIndexChain(Vec<Subgroup>),
    /// No prime-index chain exists; `explored` overgroups were visited.
    NoPrimeIndexChain { explored: usize },
    /// `HH^x ≠ H^xH` for this conjugating element.
    Conjugator(usize),
    /// Normal-closure descent reaching `H` inside the join.
    SubnormalChain { join: Subgroup, defect: usize },
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Witness::StalledChain { join, chain } => {
                let orders: Vec<String> = chain.iter().map(|h| h.order().to_string()).collect();
                write!(
                    f,
                    "join order {}, closure chain {}",
                    join.order(),
                    orders.join(">")
                )
            }
            Witness::PrimeIndexChain(chain) => {
                let orders: Vec<String> = chain.iter().map(|h| h.order().to_string()).collect();
                write!(f, "prime-index chain {}", orders.join("<"))
            }
            Witness::NoPrimeIndexChain { explored } => {
                write!(f, "no prime-index chain ({explored} overgroups explored)")
            }
            Witness::Conjugator(x) => write!(f, "conjugator {x}"),
            Witness::SubnormalChain { join, defect } => {
                write!(f, "join order {}, defect {defect}", join.order())
            }
        }
    }
}

/// A boolean verdict; a `false` verdict always carries a witness.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PredicateResult {
    pub verdict: bool,
    pub witness: Option<Witness>,
}

impl PredicateResult {
    fn yes(witness: Option<Witness>) -> Self {
        PredicateResult {
            verdict: true,
            witness,
        }
    }

    fn no(witness: Witness) -> Self {
        PredicateResult {
            verdict: false,
            witness: Some(witness),
        }
    }
}

/// `H` is subnormal in `⟨H, R⟩`.
pub fn is_r_subnormal(g: &GroupTable, h: &Subgroup, r: &Subgroup) -> PredicateResult {
    let join = g.join(h, r);
    match lattice::is_subnormal(g, h, &join) {
        Subnormality::Subnormal { defect } => {
            PredicateResult::yes(Some(Witness::SubnormalChain { join, defect }))
        }
        Subnormality::NotSubnormal { chain } => {
            PredicateResult::no(Witness::StalledChain { join, chain })
        }
    }
}

/// A chain `H = H₀ < H₁ < … < Hₙ = K` with every index prime exists.
///
/// Depth-first search over overgroups of prime index, smallest first, with
/// failed subgroups memoized. Fails with `BudgetExceeded` when the lattice of
/// `g` cannot be enumerated.
pub fn is_p_subnormal(g: &GroupTable, h: &Subgroup, k: &Subgroup) -> Result<PredicateResult> {
    if h == k {
        return Ok(PredicateResult::yes(Some(Witness::PrimeIndexChain(vec![
            h.clone(),
        ]))));
    }
    let lattice = g.subgroups()?;
    let candidates: Vec<&Subgroup> = lattice
        .iter()
        .filter(|y| h.is_proper_subgroup_of(y) && y.is_subgroup_of(k))
        .collect();

    let mut dead: HashSet<FixedBitSet> = HashSet::new();
    let mut path = vec![h.clone()];
    let found = search(k, &candidates, &mut dead, &mut path);
    Ok(if found {
        PredicateResult::yes(Some(Witness::PrimeIndexChain(path)))
    } else {
        PredicateResult::no(Witness::NoPrimeIndexChain {
            explored: dead.len(),
        })
    })
}

fn search(
    target: &Subgroup,
    candidates: &[&Subgroup],
    dead: &mut HashSet<FixedBitSet>,
    path: &mut Vec<Subgroup>,
) -> bool {
    let x = path.last().unwrap().clone();
    if &x == target {
        return true;
    }
    if dead.contains(x.bits()) {
        return false;
    }
    // candidates are sorted by order, so covers are visited smallest first
    for y in candidates {
        if y.order() % x.order() != 0 || !is_prime(y.order() / x.order()) || !x.is_subgroup_of(y) {
            continue;
        }
        path.push((*y).clone());
        if search(target, candidates, dead, path) {
            return true;
        }
        path.pop();
    }
    dead.insert(x.bits().clone());
    false
}

/// `H` is ℙ-subnormal in `⟨H, R⟩`.
pub fn is_r_p_subnormal(g: &GroupTable, h: &Subgroup, r: &Subgroup) -> Result<PredicateResult> {
    is_p_subnormal(g, h, &g.join(h, r))
}

/// `HH^x = H^xH` as sets for every `x ∈ K`.
pub fn is_conjugate_permutable(g: &GroupTable, h: &Subgroup, k: &Subgroup) -> PredicateResult {
    let mut seen: HashSet<FixedBitSet> = HashSet::new();
    seen.insert(h.bits().clone());
    for x in k.elements() {
        let hx = g.conjugate_subgroup(h, x);
        if !seen.insert(hx.bits().clone()) {
            continue;
        }
        if g.set_product(h, &hx).members != g.set_product(&hx, h).members {
            return PredicateResult::no(Witness::Conjugator(x));
        }
    }
    PredicateResult::yes(None)
}

/// `H` is conjugate-permutable in `⟨H, R⟩`.
pub fn is_r_conjugate_permutable(g: &GroupTable, h: &Subgroup, r: &Subgroup) -> PredicateResult {
    is_conjugate_permutable(g, h, &g.join(h, r))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{build_group, GroupSpec};

    fn grp(name: &str, degree: usize, gens: &[&str]) -> GroupTable {
        build_group(&GroupSpec::from_cycles(name, degree, gens), 1024).unwrap()
    }

    fn s3() -> GroupTable {
        grp("S3", 3, &["(0 1 2)", "(0 1)"])
    }

    fn cyclic(g: &GroupTable, x: usize) -> Subgroup {
        g.closure([x])
    }

    fn element(g: &GroupTable, degree: usize, cycles: &str) -> usize {
        g.element_of(&crate::Perm::parse_cycles(degree, cycles).unwrap())
            .unwrap()
    }

    #[test]
    fn r_subnormal_examples() {
        let s = s3();
        let t = cyclic(&s, element(&s, 3, "(0 1)"));
        let a3 = cyclic(&s, element(&s, 3, "(0 1 2)"));
        assert!(is_r_subnormal(&s, &t, &s.trivial()).verdict);
        let r = is_r_subnormal(&s, &t, &a3);
        assert!(!r.verdict);
        assert!(
            matches!(r.witness, Some(Witness::StalledChain { ref join, .. }) if join.is_whole())
        );
        let q8 = grp("Q8", 8, &["(0 1 2 3)(4 5 6 7)", "(0 4 2 6)(1 7 3 5)"]);
        for h in q8.subgroups().unwrap().iter() {
            for r in q8.subgroups().unwrap().iter() {
                assert!(is_r_subnormal(&q8, h, r).verdict);
            }
        }
    }

    #[test]
    fn p_subnormal_examples() {
        let s = s3();
        let whole = s.whole();
        assert!(is_p_subnormal(&s, &whole, &whole).unwrap().verdict);
        let t = cyclic(&s, element(&s, 3, "(0 1)"));
        assert!(is_p_subnormal(&s, &t, &whole).unwrap().verdict);
        let a5 = grp("A5", 5, &["(0 1 2 3 4)", "(0 1 2)"]);
        // 1 < C2 < V4 < A4 < A5 has indices 2, 2, 3, 5
        let r = is_p_subnormal(&a5, &a5.trivial(), &a5.whole()).unwrap();
        assert!(r.verdict);
        // the only proper overgroup of C5 is D10, of index 6
        let c5 = cyclic(&a5, element(&a5, 5, "(0 1 2 3 4)"));
        let r = is_p_subnormal(&a5, &c5, &a5.whole()).unwrap();
        assert!(!r.verdict && r.witness.is_some());
        let s4 = grp("S4", 4, &["(0 1 2 3)", "(0 1)"]);
        let r = is_p_subnormal(&s4, &s4.trivial(), &s4.whole()).unwrap();
        match r.witness {
            Some(Witness::PrimeIndexChain(chain)) => {
                assert_eq!(chain.first().unwrap().order(), 1);
                assert!(chain.last().unwrap().is_whole());
                for w in chain.windows(2) {
                    assert!(is_prime(w[1].order() / w[0].order()));
                }
            }
            other => panic!("expected chain, got {other:?}"),
        }
    }

    #[test]
    fn conjugate_permutable_examples() {
        let s = s3();
        let t = cyclic(&s, element(&s, 3, "(0 1)"));
        let a3 = cyclic(&s, element(&s, 3, "(0 1 2)"));
        assert!(is_conjugate_permutable(&s, &a3, &s.whole()).verdict);
        assert!(is_conjugate_permutable(&s, &t, &t).verdict);
        let r = is_conjugate_permutable(&s, &t, &s.whole());
        assert!(!r.verdict);
        let Some(Witness::Conjugator(x)) = r.witness else {
            panic!("expected conjugator")
        };
        assert!(!s.normalizer(&t).contains(x));
    }
}
