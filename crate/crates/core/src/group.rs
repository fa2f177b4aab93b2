//! Dense multiplication tables for finite groups and the elementary
//! operations every other module is built from.

use std::collections::HashMap;
use std::sync::OnceLock;

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};
use crate::lattice::{NormalSubgroups, SubgroupList};
use crate::perm::Perm;
use crate::subgroup::Subgroup;

/// Default order cap for building groups.
pub const DEFAULT_CAP: usize = 360;
/// No table larger than this is ever built.
pub const HARD_MAX_ORDER: usize = 1024;
/// Full associativity is only checked up to this order.
pub const ASSOCIATIVITY_CHECK_MAX: usize = 512;

/// A named group given by permutation generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupSpec {
    pub name: String,
    pub degree: usize,
    pub generators: Vec<Perm>,
}

impl GroupSpec {
    pub fn new(name: impl Into<String>, degree: usize, generators: Vec<Perm>) -> Result<Self> {
        if degree == 0 {
            return Err(Error::InvalidPerm("degree must be positive".into()));
        }
        if let Some(g) = generators.iter().find(|g| g.degree() != degree) {
            return Err(Error::InvalidPerm(format!(
                "generator {g} has degree {} but the group has degree {degree}",
                g.degree()
            )));
        }
        Ok(GroupSpec {
            name: name.into(),
            degree,
            generators,
        })
    }

    /// Convenience constructor from cycle strings; panics on malformed input.
    pub fn from_cycles(name: &str, degree: usize, gens: &[&str]) -> Self {
        let generators = gens
            .iter()
            .map(|g| Perm::parse_cycles(degree, g).unwrap_or_else(|e| panic!("{g}: {e}")))
            .collect();
        GroupSpec::new(name, degree, generators).expect("valid spec")
    }
}

#[derive(Clone, Default)]
pub(crate) struct Caches {
    pub(crate) subgroups: OnceLock<std::result::Result<SubgroupList, SubgroupList>>,
    pub(crate) normals: OnceLock<NormalSubgroups>,
    pub(crate) maximals: OnceLock<std::result::Result<Vec<Subgroup>, usize>>,
}

/// A fully materialized finite group. Element `0` is the identity.
///
/// Tables are immutable once built. Derived data such as the subgroup
/// lattice is computed lazily and cached on the table.
#[derive(Clone)]
pub struct GroupTable {
    name: String,
    n: usize,
    mul: Vec<u32>,
    inv: Vec<u32>,
    elt_order: Vec<u32>,
    factorization: Vec<(usize, u32)>,
    perms: Option<Vec<Perm>>,
    subgroup_budget: usize,
    pub(crate) caches: Caches,
}

impl std::fmt::Debug for GroupTable {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "GroupTable({}, order {})", self.name, self.n)
    }
}

/// Closes the generators of `spec` into a table; elements are numbered
/// breadth-first from the identity, applying generators in listed order.
pub fn build_group(spec: &GroupSpec, cap: usize) -> Result<GroupTable> {
    let cap = cap.min(HARD_MAX_ORDER);
    let k = spec.generators.len();
    let mut elements = vec![Perm::identity(spec.degree)];
    let mut index: HashMap<Perm, u32> = HashMap::new();
    index.insert(elements[0].clone(), 0);
    let mut right: Vec<u32> = Vec::new();
    let mut parent: Vec<(u32, u32)> = vec![(0, 0)];

    let mut i = 0;
    while i < elements.len() {
        for (s, g) in spec.generators.iter().enumerate() {
            let y = elements[i].then(g);
            let j = match index.get(&y) {
                Some(&j) => j,
                None => {
                    let j = elements.len() as u32;
                    if elements.len() >= cap {
                        return Err(Error::OrderExceedsCap { cap });
                    }
                    index.insert(y.clone(), j);
                    elements.push(y);
                    parent.push((i as u32, s as u32));
                    j
                }
            };
            right.push(j);
        }
        i += 1;
    }

    let n = elements.len();
    let mut mul = vec![0u32; n * n];
    for x in 0..n {
        mul[x * n] = x as u32;
        for y in 1..n {
            let (py, s) = parent[y];
            let xpy = mul[x * n + py as usize] as usize;
            mul[x * n + y] = right[xpy * k + s as usize];
        }
    }
    GroupTable::from_parts(spec.name.clone(), n, mul, Some(elements))
}

impl GroupTable {
    /// Builds a table from a raw row-major multiplication table, checking that
    /// `0` is the identity and every row and column is a permutation.
    pub fn from_multiplication(name: impl Into<String>, n: usize, mul: Vec<u32>) -> Result<Self> {
        if mul.len() != n * n || n == 0 {
            return Err(Error::InvalidTable("table is not n x n".into()));
        }
        for x in 0..n {
            if mul[x * n] as usize != x || mul[x] as usize != x {
                return Err(Error::InvalidTable("element 0 is not the identity".into()));
            }
            let mut row = FixedBitSet::with_capacity(n);
            let mut col = FixedBitSet::with_capacity(n);
            for y in 0..n {
                let r = mul[x * n + y] as usize;
                let c = mul[y * n + x] as usize;
                if r >= n || c >= n || row.put(r) || col.put(c) {
                    return Err(Error::InvalidTable(format!(
                        "row or column {x} is not a permutation"
                    )));
                }
            }
        }
        Self::from_parts(name.into(), n, mul, None)
    }

    /// Like [`from_multiplication`](Self::from_multiplication) but only checks
    /// the identity; used to build deliberately broken fixtures.
    pub fn from_multiplication_unchecked(name: impl Into<String>, n: usize, mul: Vec<u32>) -> Self {
        Self::from_parts(name.into(), n, mul, None).expect("identity row present")
    }

    fn from_parts(name: String, n: usize, mul: Vec<u32>, perms: Option<Vec<Perm>>) -> Result<Self> {
        let mut inv = vec![0u32; n];
        for x in 0..n {
            match (0..n).find(|&y| mul[x * n + y] == 0) {
                Some(y) => inv[x] = y as u32,
                None => return Err(Error::InvalidTable(format!("element {x} has no inverse"))),
            }
        }
        let mut elt_order = vec![0u32; n];
        for x in 0..n {
            let mut k = 1;
            let mut y = x;
            while y != 0 {
                y = mul[y * n + x] as usize;
                k += 1;
                if k > n + 1 {
                    return Err(Error::InvalidTable(format!(
                        "element {x} has no finite order"
                    )));
                }
            }
            elt_order[x] = k as u32;
        }
        Ok(GroupTable {
            name,
            n,
            mul,
            inv,
            elt_order,
            factorization: factorize(n),
            perms,
            subgroup_budget: crate::lattice::DEFAULT_SUBGROUP_BUDGET,
            caches: Caches::default(),
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    /// Sets the lattice enumeration budget and drops cached lattice data.
    /// Tables derived by [`as_group`](Self::as_group) and
    /// [`quotient`](Self::quotient) inherit the budget.
    pub fn with_subgroup_budget(mut self, budget: usize) -> Self {
        self.subgroup_budget = budget;
        self.caches = Caches::default();
        self
    }

    pub fn subgroup_budget(&self) -> usize {
        self.subgroup_budget
    }

    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.n + b] as usize
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inv[a] as usize
    }

    pub fn elt_order(&self, a: usize) -> usize {
        self.elt_order[a] as usize
    }

    /// Prime factorization of the order as `(p, a)` pairs, increasing in `p`.
    pub fn factorization(&self) -> &[(usize, u32)] {
        &self.factorization
    }

    pub fn primes(&self) -> Vec<usize> {
        self.factorization.iter().map(|&(p, _)| p).collect()
    }

    /// Largest power of `p` dividing the order.
    pub fn p_part(&self, p: usize) -> usize {
        self.factorization
            .iter()
            .find(|&&(q, _)| q == p)
            .map_or(1, |&(p, a)| p.pow(a))
    }

    /// The permutation behind element `x`, if the table came from generators.
    pub fn perm(&self, x: usize) -> Option<&Perm> {
        self.perms.as_ref().map(|p| &p[x])
    }

    pub fn element_of(&self, perm: &Perm) -> Option<usize> {
        self.perms.as_ref()?.iter().position(|p| p == perm)
    }

    /// `g⁻¹ x g`
    #[inline]
    pub fn conj(&self, x: usize, g: usize) -> usize {
        self.mul(self.mul(self.inv(g), x), g)
    }

    /// `a⁻¹ b⁻¹ a b`
    #[inline]
    pub fn commutator(&self, a: usize, b: usize) -> usize {
        self.mul(self.mul(self.inv(a), self.inv(b)), self.mul(a, b))
    }

    pub fn power(&self, x: usize, k: usize) -> usize {
        (0..k).fold(0, |acc, _| self.mul(acc, x))
    }

    pub fn is_p_element(&self, x: usize, p: usize) -> bool {
        let mut o = self.elt_order(x);
        while o.is_multiple_of(p) {
            o /= p;
        }
        o == 1
    }

    /// Elements of prime power order `q^k` with `k ≥ 1`, reported with their prime.
    pub fn prime_power_prime(&self, x: usize) -> Option<usize> {
        let o = self.elt_order(x);
        let f = factorize(o);
        (f.len() == 1).then(|| f[0].0)
    }

    pub fn trivial(&self) -> Subgroup {
        Subgroup::trivial(self.n)
    }

    pub fn whole(&self) -> Subgroup {
        Subgroup::whole(self.n)
    }

    /// Checks the group axioms: identity, inverses, and (for orders up to
    /// [`ASSOCIATIVITY_CHECK_MAX`]) full associativity.
    pub fn validate(&self) -> Result<()> {
        let n = self.n;
        for x in 0..n {
            if self.mul(0, x) != x || self.mul(x, 0) != x {
                return Err(Error::InvalidTable(format!("0 is not an identity for {x}")));
            }
            if self.mul(x, self.inv(x)) != 0 || self.mul(self.inv(x), x) != 0 {
                return Err(Error::InvalidTable(format!("inverse of {x} is one-sided")));
            }
        }
        if n <= ASSOCIATIVITY_CHECK_MAX {
            for a in 0..n {
                for b in 0..n {
                    let ab = self.mul(a, b);
                    for c in 0..n {
                        if self.mul(ab, c) != self.mul(a, self.mul(b, c)) {
                            return Err(Error::InvalidTable(format!(
                                "({a}*{b})*{c} != {a}*({b}*{c})"
                            )));
                        }
                    }
                }
            }
        }
        Ok(())
    }

    // ---- closures -------------------------------------------------------

    fn close(&self, members: &mut FixedBitSet, list: &mut Vec<u32>, gens: &[u32]) {
        let mut i = 0;
        while i < list.len() {
            let x = list[i] as usize;
            for &s in gens {
                let y = self.mul(x, s as usize);
                if !members.put(y) {
                    list.push(y as u32);
                }
            }
            i += 1;
        }
    }

    /// Smallest subgroup containing `seed`, together with the generators
    /// actually used (a greedy subset of `seed`).
    pub fn closure_with_generators<I>(&self, seed: I) -> (Subgroup, Vec<usize>)
    where
        I: IntoIterator<Item = usize>,
    {
        let mut members = FixedBitSet::with_capacity(self.n);
        members.insert(0);
        let mut list = vec![0u32];
        let mut gens: Vec<u32> = Vec::new();
        for s in seed {
            if !members.contains(s) {
                gens.push(s as u32);
                self.close(&mut members, &mut list, &gens);
            }
        }
        let h = Subgroup::from_bits(members);
        self.debug_check(&h);
        (h, gens.into_iter().map(|g| g as usize).collect())
    }

    /// Smallest subgroup containing `seed`.
    pub fn closure<I>(&self, seed: I) -> Subgroup
    where
        I: IntoIterator<Item = usize>,
    {
        self.closure_with_generators(seed).0
    }

    /// `⟨base, extra⟩`, reusing a known generating set of `base`.
    pub(crate) fn extend(&self, base: &Subgroup, base_gens: &[usize], extra: &[usize]) -> Subgroup {
        if extra.iter().all(|&x| base.contains(x)) {
            return base.clone();
        }
        let mut members = base.bits().clone();
        let mut list: Vec<u32> = base.elements().map(|x| x as u32).collect();
        let gens: Vec<u32> = base_gens.iter().chain(extra).map(|&g| g as u32).collect();
        for &x in extra {
            if !members.put(x) {
                list.push(x as u32);
            }
        }
        self.close(&mut members, &mut list, &gens);
        let h = Subgroup::from_bits(members);
        self.debug_check(&h);
        h
    }

    /// A small generating set of `h`, chosen greedily in element order.
    pub fn generators(&self, h: &Subgroup) -> Vec<usize> {
        self.closure_with_generators(h.elements()).1
    }

    /// `⟨a, b⟩`
    pub fn join(&self, a: &Subgroup, b: &Subgroup) -> Subgroup {
        if b.is_subgroup_of(a) {
            return a.clone();
        }
        if a.is_subgroup_of(b) {
            return b.clone();
        }
        let ga = self.generators(a);
        let gb = self.generators(b);
        self.extend(a, &ga, &gb)
    }

    /// Checks that `elements` is closed and returns it as a subgroup.
    pub fn subgroup_from_elements<I>(&self, elements: I) -> Result<Subgroup>
    where
        I: IntoIterator<Item = usize>,
    {
        let mut members = FixedBitSet::with_capacity(self.n);
        for x in elements {
            if x >= self.n {
                return Err(Error::InvalidTable(format!("element {x} out of range")));
            }
            members.insert(x);
        }
        if !members.contains(0) {
            return Err(Error::InvalidTable(
                "set does not contain the identity".into(),
            ));
        }
        let ones: Vec<usize> = members.ones().collect();
        for &a in &ones {
            for &b in &ones {
                if !members.contains(self.mul(a, b)) {
                    return Err(Error::InvalidTable(format!(
                        "set is not closed: {a}*{b} missing"
                    )));
                }
            }
        }
        Ok(Subgroup::from_bits(members))
    }

    #[inline]
    fn debug_check(&self, h: &Subgroup) {
        debug_assert!(h.contains(0));
        debug_assert_eq!(self.n % h.order(), 0, "Lagrange violated");
    }

    // ---- products, conjugates, centralizers ----------------------------

    /// The set `AB = {ab}` with a flag telling whether it is a subgroup.
    pub fn set_product(&self, a: &Subgroup, b: &Subgroup) -> SetProduct {
        let mut members = FixedBitSet::with_capacity(self.n);
        let bs: Vec<usize> = b.to_vec();
        for x in a.elements() {
            for &y in &bs {
                members.insert(self.mul(x, y));
            }
        }
        let size = members.count_ones(..);
        let is_subgroup = size == self.join(a, b).order();
        SetProduct {
            members,
            size,
            is_subgroup,
        }
    }

    /// `|AB| = |A||B| / |A ∩ B|`
    pub fn product_size(&self, a: &Subgroup, b: &Subgroup) -> usize {
        a.order() * b.order() / a.intersection(b).order()
    }

    /// Product of two subgroups known to permute (for instance when one is normal).
    pub fn permuting_product(&self, a: &Subgroup, b: &Subgroup) -> Subgroup {
        self.join(a, b)
    }

    /// `H^g = {g⁻¹ h g}`
    pub fn conjugate_subgroup(&self, h: &Subgroup, g: usize) -> Subgroup {
        let mut members = FixedBitSet::with_capacity(self.n);
        for x in h.elements() {
            members.insert(self.conj(x, g));
        }
        Subgroup::from_bits(members)
    }

    /// Elements commuting with every element of `set`.
    pub fn centralizer<I>(&self, set: I) -> Subgroup
    where
        I: IntoIterator<Item = usize>,
    {
        let gens = self.closure_with_generators(set).1;
        let mut members = FixedBitSet::with_capacity(self.n);
        for g in 0..self.n {
            if gens.iter().all(|&s| self.mul(g, s) == self.mul(s, g)) {
                members.insert(g);
            }
        }
        let c = Subgroup::from_bits(members);
        self.debug_check(&c);
        c
    }

    pub fn centralizer_of(&self, h: &Subgroup) -> Subgroup {
        self.centralizer(h.elements())
    }

    pub fn center(&self) -> Subgroup {
        self.centralizer(0..self.n)
    }

    /// `{g : H^g = H}`
    pub fn normalizer(&self, h: &Subgroup) -> Subgroup {
        let gens = self.generators(h);
        let mut members = FixedBitSet::with_capacity(self.n);
        for g in 0..self.n {
            if gens.iter().all(|&s| h.contains(self.conj(s, g))) {
                members.insert(g);
            }
        }
        let nh = Subgroup::from_bits(members);
        self.debug_check(&nh);
        nh
    }

    pub fn is_normal(&self, h: &Subgroup) -> bool {
        self.is_normalized_by(h, &self.whole())
    }

    /// Whether every element of `k` normalizes `h`.
    pub fn is_normalized_by(&self, h: &Subgroup, k: &Subgroup) -> bool {
        let hg = self.generators(h);
        let kg = self.generators(k);
        kg.iter()
            .all(|&g| hg.iter().all(|&s| h.contains(self.conj(s, g))))
    }

    /// `h ⊴ k` (requires `h ≤ k`).
    pub fn is_normal_in(&self, h: &Subgroup, k: &Subgroup) -> bool {
        h.is_subgroup_of(k) && self.is_normalized_by(h, k)
    }

    /// Smallest normal subgroup of `k` containing `h`.
    pub fn normal_closure(&self, h: &Subgroup, k: &Subgroup) -> Subgroup {
        let hg = self.generators(h);
        let kg = self.generators(k);
        let (mut cur, mut gens) = self.closure_with_generators(hg.iter().copied());
        loop {
            let extra: Vec<usize> = gens
                .iter()
                .flat_map(|&s| kg.iter().map(move |&g| (s, g)))
                .map(|(s, g)| self.conj(s, g))
                .filter(|&x| !cur.contains(x))
                .collect();
            if extra.is_empty() {
                return cur;
            }
            let (next, next_gens) = self.closure_with_generators(gens.iter().copied().chain(extra));
            cur = next;
            gens = next_gens;
        }
    }

    /// `[A, B] = ⟨a⁻¹b⁻¹ab⟩`
    pub fn commutator_subgroup(&self, a: &Subgroup, b: &Subgroup) -> Subgroup {
        let bs = b.to_vec();
        let mut members = FixedBitSet::with_capacity(self.n);
        members.insert(0);
        let mut list = vec![0u32];
        let mut gens: Vec<u32> = Vec::new();
        for x in a.elements() {
            for &y in &bs {
                let c = self.commutator(x, y);
                if !members.contains(c) {
                    gens.push(c as u32);
                    self.close(&mut members, &mut list, &gens);
                }
            }
        }
        let h = Subgroup::from_bits(members);
        self.debug_check(&h);
        h
    }

    pub fn derived_subgroup(&self, h: &Subgroup) -> Subgroup {
        self.commutator_subgroup(h, h)
    }

    /// Sylow `p`-subgroup grown one normalizing `p`-element at a time,
    /// always taking the lowest-index eligible element.
    pub fn sylow_subgroup(&self, p: usize) -> Subgroup {
        let target = self.p_part(p);
        let mut current = self.trivial();
        let mut gens: Vec<usize> = Vec::new();
        while current.order() < target {
            let n = self.normalizer(&current);
            let x = n
                .elements()
                .find(|&x| !current.contains(x) && self.is_p_element(x, p))
                .expect("a p-subgroup below the p-part has a p-element in its normalizer");
            current = self.extend(&current, &gens, &[x]);
            gens.push(x);
        }
        current
    }

    /// Subgroups of the form `H^g` for all `g`, deduplicated, in canonical order.
    pub fn conjugates(&self, h: &Subgroup) -> Vec<Subgroup> {
        let n = self.normalizer(h);
        let mut out: Vec<Subgroup> = Vec::new();
        let mut covered = FixedBitSet::with_capacity(self.n);
        for g in 0..self.n {
            if covered.contains(g) {
                continue;
            }
            // the right coset N g gives the same conjugate
            for x in n.elements() {
                covered.insert(self.mul(x, g));
            }
            out.push(self.conjugate_subgroup(h, g));
        }
        out.sort_by(|a, b| a.canonical_cmp(b));
        out
    }

    /// Intersection of all conjugates of `h`.
    pub fn core(&self, h: &Subgroup) -> Subgroup {
        self.conjugates(h)
            .iter()
            .fold(h.clone(), |acc, c| acc.intersection(c))
    }

    /// Subgroup generated by all elements whose order is coprime to `p`.
    pub fn p_prime_closure(&self, p: usize) -> Subgroup {
        self.closure((0..self.n).filter(|&x| !self.elt_order(x).is_multiple_of(p)))
    }

    // ---- new groups from old ---------------------------------------------

    /// Standalone table for `h`, elements numbered by increasing parent index.
    pub fn as_group(&self, h: &Subgroup) -> Embedding {
        let to_parent: Vec<u32> = h.elements().map(|x| x as u32).collect();
        let m = to_parent.len();
        let mut from_parent = vec![u32::MAX; self.n];
        for (i, &x) in to_parent.iter().enumerate() {
            from_parent[x as usize] = i as u32;
        }
        let mut mul = vec![0u32; m * m];
        for i in 0..m {
            for j in 0..m {
                let p = self.mul(to_parent[i] as usize, to_parent[j] as usize);
                mul[i * m + j] = from_parent[p];
            }
        }
        let perms = self
            .perms
            .as_ref()
            .map(|ps| to_parent.iter().map(|&x| ps[x as usize].clone()).collect());
        let name = format!("{}|{}", self.name, m);
        let group = GroupTable::from_parts(name, m, mul, perms)
            .expect("subgroup table is a group")
            .with_subgroup_budget(self.subgroup_budget);
        Embedding {
            group,
            to_parent,
            from_parent,
        }
    }

    /// `G/N`, cosets numbered by their smallest element.
    pub fn quotient(&self, n: &Subgroup) -> Result<QuotientMap> {
        if !self.is_normal(n) {
            return Err(Error::NotNormal(format!(
                "subgroup of order {} in {}",
                n.order(),
                self.name
            )));
        }
        let mut elt_map = vec![u32::MAX; self.n];
        let mut reps: Vec<usize> = Vec::new();
        let kernel: Vec<usize> = n.to_vec();
        for x in 0..self.n {
            if elt_map[x] != u32::MAX {
                continue;
            }
            let id = reps.len() as u32;
            for &k in &kernel {
                elt_map[self.mul(x, k)] = id;
            }
            reps.push(x);
        }
        let m = reps.len();
        let mut mul = vec![0u32; m * m];
        for i in 0..m {
            for j in 0..m {
                mul[i * m + j] = elt_map[self.mul(reps[i], reps[j])];
            }
        }
        let name = format!("{}/{}", self.name, n.order());
        let image =
            GroupTable::from_parts(name, m, mul, None)?.with_subgroup_budget(self.subgroup_budget);
        Ok(QuotientMap {
            source_order: self.n,
            kernel: n.clone(),
            image,
            elt_map,
        })
    }
}

/// `G × H` with its two factor subgroups.
#[derive(Clone, Debug)]
pub struct DirectProduct {
    pub table: GroupTable,
    pub left: Subgroup,
    pub right: Subgroup,
}

/// Pairwise product table; element `(a, b)` has index `a·|H| + b`.
pub fn direct_product(g: &GroupTable, h: &GroupTable, cap: usize) -> Result<DirectProduct> {
    let (ng, nh) = (g.order(), h.order());
    let n = ng * nh;
    if n > cap.min(HARD_MAX_ORDER) {
        return Err(Error::OrderExceedsCap { cap });
    }
    let mut mul = vec![0u32; n * n];
    for a1 in 0..ng {
        for b1 in 0..nh {
            let x = a1 * nh + b1;
            for a2 in 0..ng {
                let a = g.mul(a1, a2) * nh;
                for b2 in 0..nh {
                    mul[x * n + a2 * nh + b2] = (a + h.mul(b1, b2)) as u32;
                }
            }
        }
    }
    let perms = match (&g.perms, &h.perms) {
        (Some(pg), Some(ph)) => {
            let (dg, dh) = (pg[0].degree(), ph[0].degree());
            let d = dg + dh;
            let mut out = Vec::with_capacity(n);
            for a in pg {
                for b in ph {
                    out.push(a.extend(d).then(&b.shifted(dg, d)));
                }
            }
            Some(out)
        }
        _ => None,
    };
    let name = format!("{}x{}", g.name(), h.name());
    let table = GroupTable::from_parts(name, n, mul, perms)?;
    let left = Subgroup::from_bits((0..ng).map(|a| a * nh).collect::<FixedBitSet>().grown(n));
    let right = Subgroup::from_bits((0..nh).collect::<FixedBitSet>().grown(n));
    Ok(DirectProduct { table, left, right })
}

trait Grown {
    fn grown(self, n: usize) -> Self;
}

impl Grown for FixedBitSet {
    fn grown(mut self, n: usize) -> Self {
        self.grow(n);
        self
    }
}

/// `AB` as a raw element set.
#[derive(Clone, Debug)]
pub struct SetProduct {
    pub members: FixedBitSet,
    pub size: usize,
    pub is_subgroup: bool,
}

impl SetProduct {
    pub fn is_everything(&self) -> bool {
        self.size == self.members.len()
    }

    pub fn as_subgroup(&self) -> Option<Subgroup> {
        self.is_subgroup
            .then(|| Subgroup::from_bits(self.members.clone()))
    }
}

/// A subgroup viewed as a group in its own right.
#[derive(Clone, Debug)]
pub struct Embedding {
    pub group: GroupTable,
    to_parent: Vec<u32>,
    from_parent: Vec<u32>,
}

impl Embedding {
    pub fn to_parent(&self, x: usize) -> usize {
        self.to_parent[x] as usize
    }

    pub fn from_parent(&self, x: usize) -> Option<usize> {
        let i = self.from_parent[x];
        (i != u32::MAX).then_some(i as usize)
    }

    /// Translates a subgroup of the standalone table into the parent.
    pub fn lift(&self, h: &Subgroup) -> Subgroup {
        let mut members = FixedBitSet::with_capacity(self.from_parent.len());
        for x in h.elements() {
            members.insert(self.to_parent[x] as usize);
        }
        Subgroup::from_bits(members)
    }

    /// Translates `h ∩ image` from the parent into the standalone table.
    pub fn restrict(&self, h: &Subgroup) -> Subgroup {
        let mut members = FixedBitSet::with_capacity(self.to_parent.len());
        for (i, &x) in self.to_parent.iter().enumerate() {
            if h.contains(x as usize) {
                members.insert(i);
            }
        }
        Subgroup::from_bits(members)
    }
}

/// The natural map `G → G/N`.
#[derive(Clone, Debug)]
pub struct QuotientMap {
    pub source_order: usize,
    pub kernel: Subgroup,
    pub image: GroupTable,
    elt_map: Vec<u32>,
}

impl QuotientMap {
    pub fn map(&self, x: usize) -> usize {
        self.elt_map[x] as usize
    }

    pub fn push_forward(&self, h: &Subgroup) -> Subgroup {
        let mut members = FixedBitSet::with_capacity(self.image.order());
        for x in h.elements() {
            members.insert(self.elt_map[x] as usize);
        }
        Subgroup::from_bits(members)
    }

    /// Full preimage of a subgroup of the image; always contains the kernel.
    pub fn pull_back(&self, h: &Subgroup) -> Subgroup {
        let mut members = FixedBitSet::with_capacity(self.source_order);
        for (x, &y) in self.elt_map.iter().enumerate() {
            if h.contains(y as usize) {
                members.insert(x);
            }
        }
        Subgroup::from_bits(members)
    }
}

pub(crate) fn factorize(mut n: usize) -> Vec<(usize, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            let mut a = 0;
            while n.is_multiple_of(p) {
                n /= p;
                a += 1;
            }
            out.push((p, a));
        }
        p += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

pub(crate) fn is_prime(n: usize) -> bool {
    n >= 2 && factorize(n) == [(n, 1)]
}

pub(crate) fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}
