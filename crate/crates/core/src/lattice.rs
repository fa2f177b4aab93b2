//! Subgroup lattice enumeration and the structural predicates built on it.

use std::collections::HashMap;

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};
use crate::group::GroupTable;
use crate::subgroup::Subgroup;

/// Default enumeration budget (number of subgroups).
pub const DEFAULT_SUBGROUP_BUDGET: usize = 50_000;

/// Deduplicated subgroups in canonical order (by order, then member list).
#[derive(Clone, Debug, Default)]
pub struct SubgroupList {
    pub items: Vec<Subgroup>,
}

impl SubgroupList {
    fn sorted(mut items: Vec<Subgroup>) -> Self {
        items.sort_by(|a, b| a.canonical_cmp(b));
        SubgroupList { items }
    }

    pub fn len(&self) -> usize {
        self.items.len()
    }

    pub fn is_empty(&self) -> bool {
        self.items.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Subgroup> {
        self.items.iter()
    }

    pub fn contains(&self, h: &Subgroup) -> bool {
        self.items.iter().any(|k| k == h)
    }
}

impl<'a> IntoIterator for &'a SubgroupList {
    type Item = &'a Subgroup;
    type IntoIter = std::slice::Iter<'a, Subgroup>;

    fn into_iter(self) -> Self::IntoIter {
        self.items.iter()
    }
}

/// Every subgroup of `g`: start from the cyclic subgroups and join with
/// cyclic subgroups of prime power order until nothing new appears.
pub fn all_subgroups(g: &GroupTable, budget: usize) -> Result<SubgroupList> {
    enumerate(g, budget).map_err(|partial| Error::BudgetExceeded {
        limit: budget,
        partial: Box::new(partial),
    })
}

fn enumerate(g: &GroupTable, budget: usize) -> std::result::Result<SubgroupList, SubgroupList> {
    let n = g.order();
    let mut seen: HashMap<FixedBitSet, usize> = HashMap::new();
    let mut list: Vec<(Subgroup, Vec<usize>)> = Vec::new();
    let mut seeds: Vec<usize> = Vec::new();

    let push = |h: Subgroup,
                gens: Vec<usize>,
                seen: &mut HashMap<FixedBitSet, usize>,
                list: &mut Vec<(Subgroup, Vec<usize>)>|
     -> bool {
        if seen.contains_key(h.bits()) {
            return false;
        }
        seen.insert(h.bits().clone(), list.len());
        list.push((h, gens));
        true
    };

    push(g.trivial(), vec![], &mut seen, &mut list);
    for x in 1..n {
        let (c, gens) = g.closure_with_generators([x]);
        let fresh = push(c, gens, &mut seen, &mut list);
        if fresh && g.prime_power_prime(x).is_some() {
            seeds.push(x);
        }
        if list.len() > budget {
            return Err(SubgroupList::sorted(
                list.into_iter().map(|(h, _)| h).collect(),
            ));
        }
    }

    let mut i = 1;
    while i < list.len() {
        for &x in &seeds {
            if list[i].0.contains(x) {
                continue;
            }
            let (h, gens) = &list[i];
            let j = g.extend(h, gens, &[x]);
            if !seen.contains_key(j.bits()) {
                let mut jg = gens.clone();
                jg.push(x);
                push(j, jg, &mut seen, &mut list);
                if list.len() > budget {
                    return Err(SubgroupList::sorted(
                        list.into_iter().map(|(h, _)| h).collect(),
                    ));
                }
            }
        }
        i += 1;
    }
    Ok(SubgroupList::sorted(
        list.into_iter().map(|(h, _)| h).collect(),
    ))
}

/// Normal subgroups of a group, with the minimal normal ones singled out.
#[derive(Clone, Debug)]
pub struct NormalSubgroups {
    pub all: SubgroupList,
    pub minimal: Vec<Subgroup>,
}

/// All normal subgroups, built as products of normal closures of single elements.
pub fn normal_subgroups(g: &GroupTable) -> NormalSubgroups {
    let n = g.order();
    let whole = g.whole();
    let mut classed = FixedBitSet::with_capacity(n);
    let mut closures: Vec<Subgroup> = Vec::new();
    for x in 1..n {
        if classed.contains(x) {
            continue;
        }
        for y in 0..n {
            classed.insert(g.conj(x, y));
        }
        let c = g.normal_closure(&g.closure([x]), &whole);
        if !closures.contains(&c) {
            closures.push(c);
        }
    }
    let mut seen: HashMap<FixedBitSet, ()> = HashMap::new();
    let mut all = vec![g.trivial()];
    seen.insert(g.trivial().bits().clone(), ());
    for c in &closures {
        if seen.insert(c.bits().clone(), ()).is_none() {
            all.push(c.clone());
        }
    }
    let mut i = 1;
    while i < all.len() {
        for c in &closures {
            if c.is_subgroup_of(&all[i]) {
                continue;
            }
            let j = g.join(&all[i], c);
            if seen.insert(j.bits().clone(), ()).is_none() {
                all.push(j);
            }
        }
        i += 1;
    }
    let all = SubgroupList::sorted(all);
    let minimal = all
        .iter()
        .filter(|h| !h.is_trivial())
        .filter(|h| {
            !all.iter()
                .any(|k| !k.is_trivial() && k.is_proper_subgroup_of(h))
        })
        .cloned()
        .collect();
    NormalSubgroups { all, minimal }
}

/// Subgroups maximal among proper subgroups, in canonical order.
pub fn maximal_subgroups(g: &GroupTable) -> Result<Vec<Subgroup>> {
    let lattice = g.subgroups()?;
    Ok(maximal_in(lattice, g.order()))
}

fn maximal_in(lattice: &SubgroupList, n: usize) -> Vec<Subgroup> {
    let proper: Vec<&Subgroup> = lattice.iter().filter(|h| h.order() < n).collect();
    proper
        .iter()
        .enumerate()
        .filter(|(i, h)| !proper[i + 1..].iter().any(|k| h.is_proper_subgroup_of(k)))
        .map(|(_, h)| (*h).clone())
        .collect()
}

/// All `K` with `H ≤ K ≤ G`.
pub fn intermediate_subgroups(g: &GroupTable, h: &Subgroup) -> Result<SubgroupList> {
    let lattice = g.subgroups()?;
    Ok(SubgroupList {
        items: lattice
            .iter()
            .filter(|k| h.is_subgroup_of(k))
            .cloned()
            .collect(),
    })
}

/// Outcome of the normal-closure descent from `K` towards `H`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Subnormality {
    Subnormal {
        defect: usize,
    },
    /// The descent stalled at `stalled_at`, which strictly contains `H`.
    NotSubnormal {
        chain: Vec<Subgroup>,
    },
}

impl Subnormality {
    pub fn is_subnormal(&self) -> bool {
        matches!(self, Subnormality::Subnormal { .. })
    }
}

/// Iterates `K₀ = K`, `Kᵢ₊₁ = H^{Kᵢ}` until it stabilizes.
pub fn is_subnormal(g: &GroupTable, h: &Subgroup, k: &Subgroup) -> Subnormality {
    debug_assert!(h.is_subgroup_of(k));
    let mut chain = vec![k.clone()];
    loop {
        let cur = chain.last().unwrap();
        if cur == h {
            return Subnormality::Subnormal {
                defect: chain.len() - 1,
            };
        }
        let next = g.normal_closure(h, cur);
        if &next == cur {
            return Subnormality::NotSubnormal { chain };
        }
        chain.push(next);
    }
}

/// `g ∈ ⟨H, H^g⟩` for every `g`.
pub fn is_abnormal(g: &GroupTable, h: &Subgroup) -> bool {
    if h.is_whole() {
        return true;
    }
    // abnormal subgroups are self-normalizing
    if g.normalizer(h).order() != h.order() {
        return false;
    }
    let gens = g.generators(h);
    (0..g.order()).filter(|&x| !h.contains(x)).all(|x| {
        let conj: Vec<usize> = gens.iter().map(|&s| g.conj(s, x)).collect();
        g.extend(h, &gens, &conj).contains(x)
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum ChiefTieBreak {
    /// Smallest minimal normal subgroup first, then canonical member order.
    #[default]
    Canonical,
    /// Largest candidate first, last in canonical order; used to cross-check invariance.
    Reverse,
}

/// `G = N₀ ▷ N₁ ▷ … ▷ N_k = 1`, each factor a chief factor.
#[derive(Clone, Debug)]
pub struct ChiefSeries {
    pub chain: Vec<Subgroup>,
    pub factor_orders: Vec<usize>,
}

pub fn chief_series(g: &GroupTable) -> ChiefSeries {
    chief_series_with(g, ChiefTieBreak::Canonical)
}

/// Built bottom-up: each step adds a minimal normal subgroup of the current
/// quotient, i.e. a normal subgroup of `G` minimal over the current term.
pub fn chief_series_with(g: &GroupTable, tie: ChiefTieBreak) -> ChiefSeries {
    let normals = g.normal_subgroups();
    let mut ascending = vec![g.trivial()];
    while !ascending.last().unwrap().is_whole() {
        let cur = ascending.last().unwrap();
        let over: Vec<&Subgroup> = normals
            .all
            .iter()
            .filter(|k| cur.is_proper_subgroup_of(k))
            .collect();
        let minimal: Vec<&Subgroup> = over
            .iter()
            .filter(|k| !over.iter().any(|m| m.is_proper_subgroup_of(k)))
            .copied()
            .collect();
        let pick = match tie {
            ChiefTieBreak::Canonical => minimal[0],
            ChiefTieBreak::Reverse => minimal[minimal.len() - 1],
        };
        ascending.push(pick.clone());
    }
    ascending.reverse();
    let factor_orders = ascending
        .windows(2)
        .map(|w| w[0].order() / w[1].order())
        .collect();
    ChiefSeries {
        chain: ascending,
        factor_orders,
    }
}

impl GroupTable {
    /// The full subgroup lattice under the table's budget, cached.
    pub fn subgroups(&self) -> Result<&SubgroupList> {
        match self
            .caches
            .subgroups
            .get_or_init(|| enumerate(self, self.subgroup_budget()))
        {
            Ok(list) => Ok(list),
            Err(partial) => Err(Error::BudgetExceeded {
                limit: self.subgroup_budget(),
                partial: Box::new(partial.clone()),
            }),
        }
    }

    /// Normal subgroups, cached.
    pub fn normal_subgroups(&self) -> &NormalSubgroups {
        self.caches.normals.get_or_init(|| normal_subgroups(self))
    }

    /// Maximal subgroups, cached.
    pub fn maximal_subgroups(&self) -> Result<&[Subgroup]> {
        let cached = self.caches.maximals.get_or_init(|| match self.subgroups() {
            Ok(l) => Ok(maximal_in(l, self.order())),
            Err(_) => Err(self.subgroup_budget()),
        });
        match cached {
            Ok(v) => Ok(v),
            Err(_) => Err(self.subgroups().unwrap_err()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{build_group, GroupSpec};

    fn grp(name: &str, degree: usize, gens: &[&str]) -> GroupTable {
        build_group(&GroupSpec::from_cycles(name, degree, gens), 1024).unwrap()
    }

    #[test]
    fn small_lattices() {
        let c6 = grp("C6", 6, &["(0 1 2 3 4 5)"]);
        assert_eq!(c6.subgroups().unwrap().len(), 4);
        let triv = grp("C1", 1, &[]);
        assert_eq!(triv.subgroups().unwrap().len(), 1);
        assert!(triv.maximal_subgroups().unwrap().is_empty());
        let s4 = grp("S4", 4, &["(0 1 2 3)", "(0 1)"]);
        assert_eq!(s4.subgroups().unwrap().len(), 30);
    }

    #[test]
    fn budget_is_enforced() {
        let s4 = grp("S4", 4, &["(0 1 2 3)", "(0 1)"]);
        match all_subgroups(&s4, 10) {
            Err(Error::BudgetExceeded { limit, partial }) => {
                assert_eq!(limit, 10);
                assert!(partial.len() > 10 && partial.len() < 30);
            }
            other => panic!("expected budget error, got {other:?}"),
        }
    }

    #[test]
    fn maximal_subgroups_of_s3() {
        let s3 = grp("S3", 3, &["(0 1 2)", "(0 1)"]);
        let m = s3.maximal_subgroups().unwrap();
        let mut orders: Vec<usize> = m.iter().map(|h| h.order()).collect();
        orders.sort();
        assert_eq!(orders, vec![2, 2, 2, 3]);
    }

    #[test]
    fn subnormal_examples() {
        let s3 = grp("S3", 3, &["(0 1 2)", "(0 1)"]);
        let t = s3.closure([s3
            .element_of(&crate::Perm::parse_cycles(3, "(0 1)").unwrap())
            .unwrap()]);
        assert!(!is_subnormal(&s3, &t, &s3.whole()).is_subnormal());
        assert_eq!(
            is_subnormal(&s3, &s3.whole(), &s3.whole()),
            Subnormality::Subnormal { defect: 0 }
        );
        let a3 = s3.derived_subgroup(&s3.whole());
        assert_eq!(
            is_subnormal(&s3, &a3, &s3.whole()),
            Subnormality::Subnormal { defect: 1 }
        );
        assert!(is_abnormal(&s3, &t));
        assert!(!is_abnormal(&s3, &a3));
        assert!(is_abnormal(&s3, &s3.whole()));
    }

    #[test]
    fn chief_series_examples() {
        let c6 = grp("C6", 6, &["(0 1 2 3 4 5)"]);
        let mut f = chief_series(&c6).factor_orders;
        f.sort();
        assert_eq!(f, vec![2, 3]);
        let s4 = grp("S4", 4, &["(0 1 2 3)", "(0 1)"]);
        assert_eq!(chief_series(&s4).factor_orders, vec![2, 3, 4]);
        let a5 = grp("A5", 5, &["(0 1 2 3 4)", "(0 1 2)"]);
        assert_eq!(chief_series(&a5).factor_orders, vec![60]);
    }
}
