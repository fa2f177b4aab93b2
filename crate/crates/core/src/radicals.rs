//! Fitting-type radicals, their generalizations, and the class predicates
//! (nilpotent, quasinilpotent, soluble, supersoluble, p-decomposable).
//!
//! Every operator returns a subgroup of the table it was given. Operators on
//! a subgroup `H ≤ G` go through [`GroupTable::as_group`] and lift the result
//! back; operators on a quotient go through [`GroupTable::quotient`] and pull
//! back. Results that must be normal are checked before they are returned.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::group::GroupTable;
use crate::lattice::{self, chief_series};
use crate::subgroup::Subgroup;

fn ensure_normal(g: &GroupTable, h: &Subgroup, what: &str) -> Result<()> {
    if g.is_normal(h) {
        Ok(())
    } else {
        Err(Error::InternalDisagreement(format!(
            "{what} of {} (order {}) is not normal",
            g.name(),
            h.order()
        )))
    }
}

/// Applies `f` to `h` viewed as a group and lifts the answer back into `g`.
pub fn within<F>(g: &GroupTable, h: &Subgroup, f: F) -> Result<Subgroup>
where
    F: FnOnce(&GroupTable) -> Result<Subgroup>,
{
    if h.is_whole() {
        return f(g);
    }
    let emb = g.as_group(h);
    let r = f(&emb.group)?;
    Ok(emb.lift(&r))
}

/// Applies `f` to `G/N` and pulls the answer back to `g`.
pub fn modulo<F>(g: &GroupTable, n: &Subgroup, f: F) -> Result<Subgroup>
where
    F: FnOnce(&GroupTable) -> Result<Subgroup>,
{
    if n.is_trivial() {
        return f(g);
    }
    let q = g.quotient(n)?;
    let r = f(&q.image)?;
    Ok(q.pull_back(&r))
}

/// Φ(G): intersection of the maximal subgroups; the whole (trivial) group if there are none.
pub fn frattini(g: &GroupTable) -> Result<Subgroup> {
    let maximals = g.maximal_subgroups()?;
    Ok(maximals
        .iter()
        .fold(g.whole(), |acc, m| acc.intersection(m)))
}

/// Soc(G): generated by the minimal normal subgroups.
pub fn socle(g: &GroupTable) -> Subgroup {
    g.normal_subgroups()
        .minimal
        .iter()
        .fold(g.trivial(), |acc, m| g.join(&acc, m))
}

/// `Z₁ = Z(G) ≤ Z₂ ≤ …`, each term the preimage of the centre of the quotient by the previous one.
pub fn upper_central_series(g: &GroupTable) -> Result<Vec<Subgroup>> {
    let mut series = vec![g.trivial()];
    loop {
        let cur = series.last().unwrap();
        let next = modulo(g, cur, |q| Ok(q.center()))?;
        if &next == cur {
            break;
        }
        series.push(next);
    }
    Ok(series)
}

/// Z∞(G)
pub fn hypercenter(g: &GroupTable) -> Result<Subgroup> {
    Ok(upper_central_series(g)?.pop().unwrap())
}

/// `γ₁ = H`, `γᵢ₊₁ = [γᵢ, H]`, stopping once a term repeats.
pub fn lower_central_series_of(g: &GroupTable, h: &Subgroup) -> Vec<Subgroup> {
    let mut series = vec![h.clone()];
    loop {
        let next = g.commutator_subgroup(series.last().unwrap(), h);
        if &next == series.last().unwrap() {
            return series;
        }
        series.push(next);
    }
}

pub fn lower_central_series(g: &GroupTable) -> Vec<Subgroup> {
    lower_central_series_of(g, &g.whole())
}

/// G^𝔑, the last term of the lower central series.
pub fn nilpotent_residual(g: &GroupTable) -> Subgroup {
    lower_central_series(g).pop().unwrap()
}

pub fn derived_series_of(g: &GroupTable, h: &Subgroup) -> Vec<Subgroup> {
    let mut series = vec![h.clone()];
    loop {
        let d = g.derived_subgroup(series.last().unwrap());
        if &d == series.last().unwrap() {
            return series;
        }
        series.push(d);
    }
}

/// Whether `h ≤ g` is nilpotent, via its own lower central series.
pub fn is_nilpotent_subgroup(g: &GroupTable, h: &Subgroup) -> bool {
    lower_central_series_of(g, h).last().unwrap().is_trivial()
}

pub fn is_soluble_subgroup(g: &GroupTable, h: &Subgroup) -> bool {
    derived_series_of(g, h).last().unwrap().is_trivial()
}

/// Nilpotency by normality of every Sylow subgroup.
pub fn is_nilpotent(g: &GroupTable) -> bool {
    g.primes()
        .into_iter()
        .all(|p| g.is_normal(&g.sylow_subgroup(p)))
}

pub fn is_soluble(g: &GroupTable) -> bool {
    is_soluble_subgroup(g, &g.whole())
}

/// Every chief factor has prime order.
pub fn is_supersoluble(g: &GroupTable) -> bool {
    chief_series(g)
        .factor_orders
        .iter()
        .all(|&k| crate::group::is_prime(k))
}

pub fn is_supersoluble_subgroup(g: &GroupTable, h: &Subgroup) -> bool {
    if h.is_whole() {
        return is_supersoluble(g);
    }
    is_supersoluble(&g.as_group(h).group)
}

/// F(G) as the join of every normal nilpotent subgroup.
pub fn fitting_by_normal_scan(g: &GroupTable) -> Subgroup {
    g.normal_subgroups()
        .all
        .iter()
        .filter(|n| is_nilpotent_subgroup(g, n))
        .fold(g.trivial(), |acc, n| g.join(&acc, n))
}

/// F(G) as the product of the cores `O_p(G)` of the Sylow subgroups.
pub fn fitting_by_sylow_cores(g: &GroupTable) -> Subgroup {
    g.primes()
        .into_iter()
        .map(|p| g.core(&g.sylow_subgroup(p)))
        .fold(g.trivial(), |acc, o| g.join(&acc, &o))
}

/// F(G), computed both ways; a mismatch is reported as an internal error.
pub fn fitting(g: &GroupTable) -> Result<Subgroup> {
    let a = fitting_by_normal_scan(g);
    let b = fitting_by_sylow_cores(g);
    if a != b {
        return Err(Error::InternalDisagreement(format!(
            "Fitting subgroup of {}: normal scan gives order {}, Sylow cores give order {}",
            g.name(),
            a.order(),
            b.order()
        )));
    }
    ensure_normal(g, &a, "Fitting subgroup")?;
    Ok(a)
}

/// F*(G) from `F*(G)/F(G) = Soc(C_G(F(G))F(G)/F(G))`.
pub fn quasinilpotent_radical(g: &GroupTable) -> Result<Subgroup> {
    let f = fitting(g)?;
    let c = g.centralizer_of(&f);
    let cf = g.join(&c, &f);
    let q = g.quotient(&f)?;
    let cf_bar = q.push_forward(&cf);
    let soc = within(&q.image, &cf_bar, |h| Ok(socle(h)))?;
    let fstar = q.pull_back(&soc);
    ensure_normal(g, &fstar, "quasinilpotent radical")?;
    Ok(fstar)
}

/// F̃(G): the preimage of `Soc(G/Φ(G))`.
pub fn f_tilde(g: &GroupTable) -> Result<Subgroup> {
    let phi = frattini(g)?;
    let ft = modulo(g, &phi, |q| Ok(socle(q)))?;
    ensure_normal(g, &ft, "generalized Fitting subgroup")?;
    Ok(ft)
}

/// The descending series `G = F̃⁰ ⊇ F̃¹ ⊇ …` until two terms coincide.
#[derive(Clone, Debug)]
pub struct FTildeTower {
    /// `terms[n] = F̃ⁿ(G)`; the last entry is the stable term.
    pub terms: Vec<Subgroup>,
}

impl FTildeTower {
    /// Least `n` with `F̃ⁿ = F̃ⁿ⁺¹`.
    pub fn stabilization_index(&self) -> usize {
        self.terms.len() - 1
    }

    /// `F̃ⁿ(G)`; indices past stabilization return the stable term.
    pub fn level(&self, n: usize) -> &Subgroup {
        &self.terms[n.min(self.terms.len() - 1)]
    }

    /// F̃^∞(G)
    pub fn infinity(&self) -> &Subgroup {
        self.terms.last().unwrap()
    }
}

pub fn f_tilde_tower(g: &GroupTable) -> Result<FTildeTower> {
    let limit = (usize::BITS - g.order().leading_zeros()) as usize + 1;
    let mut terms = vec![g.whole()];
    for _ in 0..limit {
        let cur = terms.last().unwrap();
        let next = within(g, cur, f_tilde)?;
        if &next == cur {
            break;
        }
        ensure_normal(g, &next, "tower term")?;
        terms.push(next);
    }
    Ok(FTildeTower { terms })
}

/// Δ(G): intersection of the abnormal maximal subgroups, or `G` when there are none.
pub fn delta(g: &GroupTable) -> Result<Subgroup> {
    let maximals = g.maximal_subgroups()?;
    Ok(maximals
        .iter()
        .filter(|m| lattice::is_abnormal(g, m))
        .fold(g.whole(), |acc, m| acc.intersection(m)))
}

type Selector = dyn Fn(&GroupTable, &Subgroup) -> bool + Send + Sync;

/// Chooses, for any group, a conjugation-invariant set of its maximal subgroups.
#[derive(Clone)]
pub struct MFunctor {
    pub name: String,
    select: Arc<Selector>,
}

impl fmt::Debug for MFunctor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MFunctor({})", self.name)
    }
}

impl MFunctor {
    pub fn new<F>(name: impl Into<String>, select: F) -> Self
    where
        F: Fn(&GroupTable, &Subgroup) -> bool + Send + Sync + 'static,
    {
        MFunctor {
            name: name.into(),
            select: Arc::new(select),
        }
    }

    /// Every maximal subgroup.
    pub fn all() -> Self {
        MFunctor::new("all", |_, _| true)
    }

    /// The abnormal maximal subgroups.
    pub fn abnormal() -> Self {
        MFunctor::new("abnormal", lattice::is_abnormal)
    }

    pub fn selects(&self, g: &GroupTable, m: &Subgroup) -> bool {
        (self.select)(g, m)
    }
}

/// `(Φ_τ(G), F̃_τ(G))` for one m-functor.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TauRadicals {
    pub phi_tau: Subgroup,
    pub f_tilde_tau: Subgroup,
    /// Set when τ(G) = {G}; both subgroups are then `G` by convention.
    pub only_whole_group: bool,
}

pub fn f_tilde_tau(g: &GroupTable, tau: &MFunctor) -> Result<TauRadicals> {
    let maximals = g.maximal_subgroups()?;
    let selected: Vec<&Subgroup> = maximals.iter().filter(|m| tau.selects(g, m)).collect();
    let gens = g.generators(&g.whole());
    for m in &selected {
        for &x in &gens {
            let c = g.conjugate_subgroup(m, x);
            if !selected.iter().any(|s| **s == c) {
                return Err(Error::NotConjugationClosed(format!(
                    "functor {} on {}: a conjugate of a selected subgroup of order {} is not selected",
                    tau.name,
                    g.name(),
                    m.order()
                )));
            }
        }
    }
    let phi_tau = selected
        .iter()
        .fold(g.whole(), |acc, m| acc.intersection(m));
    if !g.is_normal(&phi_tau) {
        return Err(Error::NotNormal(format!(
            "intersection for functor {} on {}",
            tau.name,
            g.name()
        )));
    }
    let f_tilde_tau = modulo(g, &phi_tau, |q| Ok(socle(q)))?;
    Ok(TauRadicals {
        phi_tau,
        f_tilde_tau,
        only_whole_group: selected.is_empty(),
    })
}

/// Direct product of the Sylow `p`-subgroup and a normal `p′`-complement.
pub fn is_p_decomposable(g: &GroupTable, p: usize) -> bool {
    let sylow = g.sylow_subgroup(p);
    if !g.is_normal(&sylow) {
        return false;
    }
    let complement = g.p_prime_closure(p);
    if complement.order() * sylow.order() != g.order() {
        return false;
    }
    let cg = g.generators(&complement);
    g.generators(&sylow)
        .iter()
        .all(|&a| cg.iter().all(|&b| g.mul(a, b) == g.mul(b, a)))
}

/// Generated by `[a, b]` with `a` a `p`-element and `b` an element of prime power order coprime to `p`.
pub fn p_decomposable_residual_by_commutators(g: &GroupTable, p: usize) -> Subgroup {
    let p_elements: Vec<usize> = (0..g.order()).filter(|&x| g.is_p_element(x, p)).collect();
    let q_elements: Vec<usize> = (0..g.order())
        .filter(|&x| matches!(g.prime_power_prime(x), Some(q) if q != p))
        .collect();
    g.closure(
        p_elements
            .iter()
            .flat_map(|&a| q_elements.iter().map(move |&b| (a, b)))
            .map(|(a, b)| g.commutator(a, b)),
    )
}

/// Smallest normal subgroup with `p`-decomposable quotient, by scanning normal subgroups.
pub fn p_decomposable_residual_by_scan(g: &GroupTable, p: usize) -> Result<Subgroup> {
    let mut qualifying = Vec::new();
    for n in g.normal_subgroups().all.iter() {
        let q = g.quotient(n)?;
        if is_p_decomposable(&q.image, p) {
            qualifying.push(n.clone());
        }
    }
    let smallest = qualifying[0].clone();
    if let Some(bad) = qualifying.iter().find(|n| !smallest.is_subgroup_of(n)) {
        return Err(Error::InternalDisagreement(format!(
            "{}-decomposable quotients of {}: no smallest kernel (orders {} and {})",
            p,
            g.name(),
            smallest.order(),
            bad.order()
        )));
    }
    Ok(smallest)
}

/// The `p`-decomposable residual, computed both ways.
pub fn p_decomposable_residual(g: &GroupTable, p: usize) -> Result<Subgroup> {
    let a = p_decomposable_residual_by_commutators(g, p);
    let b = p_decomposable_residual_by_scan(g, p)?;
    if a != b {
        return Err(Error::InternalDisagreement(format!(
            "{}-decomposable residual of {}: commutators give order {}, scan gives order {}",
            p,
            g.name(),
            a.order(),
            b.order()
        )));
    }
    Ok(a)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassFlags {
    pub nilpotent: bool,
    pub quasinilpotent: bool,
    pub soluble: bool,
    pub supersoluble: bool,
    /// `(p, G is p-decomposable)` for each prime dividing the order.
    pub p_decomposable: Vec<(usize, bool)>,
}

pub fn classify(g: &GroupTable) -> Result<ClassFlags> {
    let nilpotent = is_nilpotent(g);
    let by_lcs = nilpotent_residual(g).is_trivial();
    if nilpotent != by_lcs {
        return Err(Error::InternalDisagreement(format!(
            "nilpotency of {}: Sylow test says {nilpotent}, lower central series says {by_lcs}",
            g.name()
        )));
    }
    Ok(ClassFlags {
        nilpotent,
        quasinilpotent: quasinilpotent_radical(g)?.is_whole(),
        soluble: is_soluble(g),
        supersoluble: is_supersoluble(g),
        p_decomposable: g
            .primes()
            .into_iter()
            .map(|p| (p, is_p_decomposable(g, p)))
            .collect(),
    })
}

/// Every radical of one group, computed once.
#[derive(Clone, Debug)]
pub struct RadicalReport {
    pub group: String,
    pub order: usize,
    pub frattini: Subgroup,
    pub socle: Subgroup,
    pub center: Subgroup,
    pub hypercenter: Subgroup,
    pub delta: Subgroup,
    pub fitting: Subgroup,
    pub fstar: Subgroup,
    pub ftilde: Subgroup,
    pub tower: FTildeTower,
    pub nilpotent_residual: Subgroup,
    pub derived: Subgroup,
    pub flags: ClassFlags,
}

impl RadicalReport {
    pub fn ftilde_inf(&self) -> &Subgroup {
        self.tower.infinity()
    }

    pub fn stabilization_index(&self) -> usize {
        self.tower.stabilization_index()
    }

    /// `Φ ⊆ F ⊆ F* ⊆ F̃^∞ ⊆ F̃`; returns the first broken link.
    pub fn chain_violation(&self) -> Option<&'static str> {
        let chain: [(&str, &Subgroup); 5] = [
            ("Phi", &self.frattini),
            ("F", &self.fitting),
            ("F*", &self.fstar),
            ("F~inf", self.ftilde_inf()),
            ("F~", &self.ftilde),
        ];
        const LINKS: [&str; 4] = ["Phi <= F", "F <= F*", "F* <= F~inf", "F~inf <= F~"];
        chain
            .windows(2)
            .zip(LINKS)
            .find(|(w, _)| !w[0].1.is_subgroup_of(w[1].1))
            .map(|(_, link)| link)
    }
}

pub fn radical_report(g: &GroupTable) -> Result<RadicalReport> {
    let ftilde = f_tilde(g)?;
    let tower = f_tilde_tower(g)?;
    if tower.level(1) != &ftilde {
        return Err(Error::InternalDisagreement(format!(
            "first tower term of {} differs from the generalized Fitting subgroup",
            g.name()
        )));
    }
    let report = RadicalReport {
        group: g.name().to_string(),
        order: g.order(),
        frattini: frattini(g)?,
        socle: socle(g),
        center: g.center(),
        hypercenter: hypercenter(g)?,
        delta: delta(g)?,
        fitting: fitting(g)?,
        fstar: quasinilpotent_radical(g)?,
        ftilde,
        tower,
        nilpotent_residual: nilpotent_residual(g),
        derived: g.derived_subgroup(&g.whole()),
        flags: classify(g)?,
    };
    for (what, h) in [
        ("Frattini subgroup", &report.frattini),
        ("socle", &report.socle),
        ("hypercenter", &report.hypercenter),
        ("Delta", &report.delta),
    ] {
        ensure_normal(g, h, what)?;
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{build_group, direct_product, GroupSpec};

    fn grp(name: &str, degree: usize, gens: &[&str]) -> GroupTable {
        build_group(&GroupSpec::from_cycles(name, degree, gens), 1024).unwrap()
    }

    fn s3() -> GroupTable {
        grp("S3", 3, &["(0 1 2)", "(0 1)"])
    }
    fn s4() -> GroupTable {
        grp("S4", 4, &["(0 1 2 3)", "(0 1)"])
    }
    fn a5() -> GroupTable {
        grp("A5", 5, &["(0 1 2 3 4)", "(0 1 2)"])
    }
    fn q8() -> GroupTable {
        grp("Q8", 8, &["(0 1 2 3)(4 5 6 7)", "(0 4 2 6)(1 7 3 5)"])
    }
    fn c2() -> GroupTable {
        grp("C2", 2, &["(0 1)"])
    }

    #[test]
    fn frattini_examples() {
        assert!(frattini(&s4()).unwrap().is_trivial());
        let q = q8();
        assert_eq!(q.order(), 8);
        assert_eq!(frattini(&q).unwrap(), q.center());
        assert_eq!(q.center().order(), 2);
        assert!(frattini(&grp("C5", 5, &["(0 1 2 3 4)"]))
            .unwrap()
            .is_trivial());
        let triv = grp("C1", 1, &[]);
        assert!(frattini(&triv).unwrap().is_whole());
    }

    #[test]
    fn socle_examples() {
        assert!(socle(&a5()).is_whole());
        assert_eq!(socle(&s4()).order(), 4);
        assert!(socle(&grp("C6", 6, &["(0 1 2 3 4 5)"])).is_whole());
    }

    #[test]
    fn hypercenter_examples() {
        assert!(hypercenter(&q8()).unwrap().is_whole());
        assert!(hypercenter(&s3()).unwrap().is_trivial());
        let d = direct_product(&s3(), &c2(), 360).unwrap();
        assert_eq!(hypercenter(&d.table).unwrap(), d.right);
    }

    #[test]
    fn residual_examples() {
        assert!(nilpotent_residual(&q8()).is_trivial());
        assert_eq!(nilpotent_residual(&s3()).order(), 3);
        let s = s4();
        let lcs = lower_central_series(&s);
        assert_eq!(
            lcs.iter().map(|h| h.order()).collect::<Vec<_>>(),
            vec![24, 12]
        );
    }

    #[test]
    fn fitting_examples() {
        assert!(fitting(&q8()).unwrap().is_whole());
        assert_eq!(fitting(&s4()).unwrap().order(), 4);
        assert!(fitting(&a5()).unwrap().is_trivial());
    }

    #[test]
    fn fstar_examples() {
        assert!(quasinilpotent_radical(&a5()).unwrap().is_whole());
        let s = s4();
        assert_eq!(quasinilpotent_radical(&s).unwrap(), fitting(&s).unwrap());
        assert!(quasinilpotent_radical(&q8()).unwrap().is_whole());
    }

    #[test]
    fn ftilde_examples() {
        let s = s4();
        assert_eq!(f_tilde(&s).unwrap(), socle(&s));
        assert!(f_tilde(&q8()).unwrap().is_whole());
        assert!(f_tilde(&a5()).unwrap().is_whole());
    }

    #[test]
    fn tower_examples() {
        let q = q8();
        let t = f_tilde_tower(&q).unwrap();
        assert_eq!(t.stabilization_index(), 0);
        assert!(t.level(5).is_whole());
        let s = s4();
        let t = f_tilde_tower(&s).unwrap();
        assert_eq!(t.stabilization_index(), 1);
        assert_eq!(t.level(1).order(), 4);
        assert_eq!(t.level(2), t.level(1));
        let d = direct_product(&s3(), &s4(), 360).unwrap();
        let t = f_tilde_tower(&d.table).unwrap();
        assert_eq!(t.level(1).order(), 12);
        assert_eq!(t.stabilization_index(), 1);
    }

    #[test]
    fn delta_examples() {
        assert!(delta(&q8()).unwrap().is_whole());
        assert!(delta(&s3()).unwrap().is_trivial());
        let d = direct_product(&s3(), &c2(), 360).unwrap();
        assert_eq!(delta(&d.table).unwrap(), d.right);
        assert_eq!(d.table.center(), d.right);
    }

    #[test]
    fn tau_examples() {
        let s = s3();
        let all = f_tilde_tau(&s, &MFunctor::all()).unwrap();
        assert_eq!(all.phi_tau, frattini(&s).unwrap());
        assert_eq!(all.f_tilde_tau, f_tilde(&s).unwrap());
        let ab = f_tilde_tau(&s, &MFunctor::abnormal()).unwrap();
        assert!(ab.phi_tau.is_trivial());
        assert_eq!(ab.f_tilde_tau.order(), 3);
        let q = q8();
        let ab = f_tilde_tau(&q, &MFunctor::abnormal()).unwrap();
        assert!(ab.only_whole_group && ab.phi_tau.is_whole() && ab.f_tilde_tau.is_whole());
    }

    #[test]
    fn tau_rejects_non_invariant_selection() {
        let s = s3();
        // picks exactly one of the three conjugate subgroups of order 2
        let first = s
            .maximal_subgroups()
            .unwrap()
            .iter()
            .find(|m| m.order() == 2)
            .unwrap()
            .clone();
        let tau = MFunctor::new("one", move |_, m| *m == first);
        assert!(matches!(
            f_tilde_tau(&s, &tau),
            Err(Error::NotConjugationClosed(_))
        ));
    }

    #[test]
    fn p_decomposable_examples() {
        let c6 = grp("C6", 6, &["(0 1 2 3 4 5)"]);
        assert!(p_decomposable_residual(&c6, 2).unwrap().is_trivial());
        let s = s3();
        assert_eq!(p_decomposable_residual(&s, 3).unwrap().order(), 3);
        let c5 = grp("C5", 5, &["(0 1 2 3 4)"]);
        let d = direct_product(&s, &c5, 360).unwrap();
        assert!(p_decomposable_residual(&d.table, 5).unwrap().is_trivial());
        assert_eq!(p_decomposable_residual(&d.table, 3).unwrap().order(), 3);
        assert_eq!(p_decomposable_residual(&d.table, 2).unwrap().order(), 3);
    }

    #[test]
    fn classify_examples() {
        let f = classify(&q8()).unwrap();
        assert!(f.nilpotent && f.quasinilpotent && f.soluble && f.supersoluble);
        let f = classify(&s4()).unwrap();
        assert!(!f.nilpotent && !f.quasinilpotent && f.soluble && !f.supersoluble);
        let f = classify(&a5()).unwrap();
        assert!(!f.nilpotent && f.quasinilpotent && !f.soluble);
    }
}
