//! Executable checks of structural statements about a single group.
//!
//! Each check returns a [`Verdict`]. Equivalences are checked in both
//! directions. Implications report [`Status::Vacuous`] when no instance of
//! the hypothesis exists in the group. Budget overruns report
//! [`Status::Skipped`] and are never counted as a pass.

use std::cell::RefCell;
use std::collections::HashMap;
use std::fmt;

use fixedbitset::FixedBitSet;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::group::GroupTable;
use crate::radicals::{self, RadicalReport};
use crate::subgroup::Subgroup;

pub mod counterexample;
pub mod identities;
pub mod nilpotency;
pub mod probes;
pub mod products;
pub mod supersolubility;

pub use counterexample::{build_counterexample, CounterexampleCertificate};
pub use probes::{probe_problems, ProbeSummary, ProblemProbe};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Holds,
    Fails,
    Vacuous,
    Skipped,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Holds => "holds",
            Status::Fails => "fails",
            Status::Vacuous => "vacuous",
            Status::Skipped => "skipped",
        }
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Outcome of one check on one group. `cost` counts instances examined, so
/// it is reproducible across machines and thread counts.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub check_id: String,
    pub group: String,
    pub status: Status,
    pub witness: Option<String>,
    pub cost: u64,
}

/// Limits for quantified checks.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Budget {
    pub max_pairs: usize,
    pub max_triples: usize,
    pub max_subgroups: usize,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            max_pairs: 250_000,
            max_triples: 2_000_000,
            max_subgroups: crate::lattice::DEFAULT_SUBGROUP_BUDGET,
        }
    }
}

impl Budget {
    pub fn new(max_pairs: usize, max_triples: usize, max_subgroups: usize) -> Result<Self> {
        if max_pairs == 0 || max_triples == 0 || max_subgroups == 0 {
            return Err(Error::ConstructionFailed(
                "budget limits must be positive".into(),
            ));
        }
        Ok(Budget {
            max_pairs,
            max_triples,
            max_subgroups,
        })
    }
}

/// How a `fails` status is interpreted.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CheckKind {
    /// A proven statement: a failure is an implementation defect.
    Theorem,
    /// An open question: a failure is a finding.
    Probe,
    /// A statement known to be false in general; failures are expected.
    ExpectedNegative,
}

/// Everything a check needs about one group, computed once.
pub struct Subject<'a> {
    pub g: &'a GroupTable,
    pub radicals: RadicalReport,
    pub budget: Budget,
    /// Quantified product checks are skipped above this order.
    pub max_product_order: usize,
    supersoluble_memo: RefCell<HashMap<FixedBitSet, bool>>,
}

impl<'a> Subject<'a> {
    pub fn new(g: &'a GroupTable, budget: Budget, max_product_order: usize) -> Result<Self> {
        Ok(Subject {
            g,
            radicals: radicals::radical_report(g)?,
            budget,
            max_product_order,
            supersoluble_memo: RefCell::default(),
        })
    }

    /// Memoized supersolubility of a subgroup of `g`.
    pub fn is_supersoluble_subgroup(&self, h: &Subgroup) -> bool {
        if let Some(&b) = self.supersoluble_memo.borrow().get(h.bits()) {
            return b;
        }
        let b = radicals::is_supersoluble_subgroup(self.g, h);
        self.supersoluble_memo
            .borrow_mut()
            .insert(h.bits().clone(), b);
        b
    }
}

type CheckFn = fn(&Subject<'_>) -> Result<Verdict>;

pub struct CheckInfo {
    pub id: &'static str,
    pub kind: CheckKind,
    pub summary: &'static str,
    run: CheckFn,
}

impl fmt::Debug for CheckInfo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CheckInfo({})", self.id)
    }
}

macro_rules! check {
    ($id:expr, $kind:ident, $summary:expr, $run:path) => {
        CheckInfo {
            id: $id,
            kind: CheckKind::$kind,
            summary: $summary,
            run: $run,
        }
    };
}

/// Every check in canonical run order.
pub static CHECKS: &[CheckInfo] = &[
    check!("radical-chain", Theorem, "Phi <= F <= F* <= F~inf <= F~", identities::radical_chain),
    check!("dual-oracles", Theorem, "two independent computations of F and of each p-decomposable residual agree", identities::dual_oracles),
    check!("fitting-sylow-maximals-supersoluble", Theorem, "soluble, maximal subgroups of Sylow subgroups of F normal => supersoluble", supersolubility::fitting_sylow_maximals),
    check!("frattini-intersection", Theorem, "intersection of maximal M with MF~ = G is Phi", supersolubility::frattini_intersection),
    check!("maximal-fitting-p-subnormal", Theorem, "soluble, every maximal F-P-subnormal => supersoluble", supersolubility::maximal_fitting_p_subnormal),
    check!("p-subnormal-supersoluble", Theorem, "supersoluble <=> every maximal F~-P-subnormal", supersolubility::p_subnormal_supersoluble),
    check!("maximal-conjugate-permutable", Theorem, "nilpotent <=> every maximal F~-conjugate-permutable", nilpotency::maximal_conjugate_permutable),
    check!("sylow-conjugate-permutable", Theorem, "nilpotent <=> every Sylow F*-conjugate-permutable", nilpotency::sylow_conjugate_permutable),
    check!("maximal-ftilde-subnormal", Theorem, "nilpotent <=> every maximal F~-subnormal; otherwise an abnormal maximal misses F~", nilpotency::maximal_ftilde_subnormal),
    check!("sylow-fstar-subnormal", Theorem, "nilpotency <=> five F*-subnormality criteria <=> F* in every Sylow normalizer", nilpotency::sylow_fstar_subnormal),
    check!("product-nilpotent", Theorem, "G = AB, A, B nilpotent F-subnormal => nilpotent", products::product_nilpotent),
    check!("join-supersoluble", Theorem, "G = <A,B>, A, B supersoluble F-subnormal, [A,B] nilpotent => supersoluble", products::join_supersoluble),
    check!("triple-coprime-supersoluble", Theorem, "three supersoluble F-subnormal subgroups of pairwise coprime index => supersoluble", products::triple_coprime_supersoluble),
    check!("triple-coprime-fitting", Theorem, "three supersoluble subgroups of pairwise coprime index containing F => supersoluble", products::triple_coprime_fitting),
    check!("pair-coprime-supersoluble", ExpectedNegative, "two supersoluble F-subnormal subgroups of coprime index => supersoluble (false in general)", products::pair_coprime_supersoluble),
    check!("product-nilpotent-derived", Theorem, "G = AB, A, B supersoluble subnormal, G' nilpotent => supersoluble", products::product_nilpotent_derived),
    check!("product-with-nilpotent-normal", Theorem, "G = AB, A supersoluble subnormal, B nilpotent normal => supersoluble", products::product_with_nilpotent_normal),
    check!("join-commutator-identities", Theorem, "for G = <A,B>: [A,B], A[A,B], B[A,B] normal, G = AB[A,B], G' = A'B'[A,B]", identities::join_commutator_identities),
    check!("delta-frattini", Theorem, "Delta(G/Phi) = Delta/Phi = Zinf(G/Phi) = Z(G/Phi), Delta nilpotent", identities::delta_frattini),
    check!("residual-centralizes-hypercenter", Theorem, "nilpotent residual centralizes Zinf", identities::residual_centralizes_hypercenter),
    check!("fstar-centralizer", Theorem, "C(F*) <= F", identities::fstar_centralizer),
    check!("tower-quotient", Theorem, "N <= Phi(F~^(n-1)) => F~^n(G/N) = F~^n(G)/N", identities::tower_quotient),
    check!("tower-contains-fstar", Theorem, "F* <= F~^n", identities::tower_contains_fstar),
    check!("tower-frattini-free", Theorem, "Phi(F~^(n-1)) = 1 => F~^n = F*", identities::tower_frattini_free),
    check!("tower-centralizer", Theorem, "C(F~^n) <= F", identities::tower_centralizer),
    check!("tower-normal-monotone", Theorem, "F~^n(N) <= F~^n(G) for normal N", identities::tower_normal_monotone),
    check!("tower-image", Theorem, "F~^n(G)N/N <= F~^n(G/N)", identities::tower_image),
    check!("tower-direct-product", Theorem, "G = N x H => F~^n(G) = F~^n(N) x F~^n(H)", identities::tower_direct_product),
    check!("delta-quotient", Theorem, "Delta <= F~ and F~(G/Delta) = F~/Delta", identities::delta_quotient),
    check!("ftilde-delta", Theorem, "F~ over abnormal maximals equals F~", identities::ftilde_delta),
    check!("ftilde-tau-contains", Theorem, "F~_tau >= F~ and C(F~_tau) <= F~_tau", identities::ftilde_tau_contains),
    check!("quasinilpotent-frattini-radical", Theorem, "F~inf is the largest normal N with N/Phi(N) quasinilpotent", identities::quasinilpotent_frattini_radical),
    check!("tower-stabilization", Probe, "F~ tower stabilizes by step 1", probes::tower_stabilization),
    check!("maximal-ftilde-inf-subnormal", Probe, "nilpotent <=> every maximal F~inf-subnormal", probes::maximal_ftilde_inf_subnormal),
];

pub fn check_info(id: &str) -> Option<&'static CheckInfo> {
    CHECKS.iter().find(|c| c.id == id)
}

/// Runs one check, turning a lattice budget overrun into `skipped`.
pub fn run_check(info: &CheckInfo, s: &Subject<'_>) -> Result<Verdict> {
    match (info.run)(s) {
        Err(Error::BudgetExceeded { limit, .. }) => Ok(Verdict {
            check_id: info.id.to_string(),
            group: s.g.name().to_string(),
            status: Status::Skipped,
            witness: Some(format!("subgroup enumeration exceeded {limit}")),
            cost: limit as u64,
        }),
        other => other,
    }
}

/// Runs the named checks (all when `ids` is empty) in canonical order.
pub fn run_checks(s: &Subject<'_>, ids: &[&str]) -> Result<Vec<Verdict>> {
    CHECKS
        .iter()
        .filter(|c| ids.is_empty() || ids.contains(&c.id))
        .map(|c| run_check(c, s))
        .collect()
}

fn run_ids(s: &Subject<'_>, ids: &[&str]) -> Result<Vec<Verdict>> {
    ids.iter()
        .map(|id| run_check(check_info(id).expect("registered check"), s))
        .collect()
}

/// Maximal-subgroup and Sylow subnormality criteria for nilpotency.
pub fn check_maximal_subnormal_nilpotency(s: &Subject<'_>) -> Result<Verdict> {
    run_check(check_info("maximal-ftilde-subnormal").unwrap(), s)
}

pub fn check_sylow_fstar_criteria(s: &Subject<'_>) -> Result<Verdict> {
    run_check(check_info("sylow-fstar-subnormal").unwrap(), s)
}

pub fn check_conjugate_permutable_criteria(s: &Subject<'_>) -> Result<Vec<Verdict>> {
    run_ids(
        s,
        &["maximal-conjugate-permutable", "sylow-conjugate-permutable"],
    )
}

pub fn check_psubnormal_criteria(s: &Subject<'_>) -> Result<Vec<Verdict>> {
    run_ids(
        s,
        &["maximal-fitting-p-subnormal", "p-subnormal-supersoluble"],
    )
}

pub fn check_fitting_sylow_maximals(s: &Subject<'_>) -> Result<Verdict> {
    run_check(
        check_info("fitting-sylow-maximals-supersoluble").unwrap(),
        s,
    )
}

pub fn check_frattini_intersection(s: &Subject<'_>) -> Result<Verdict> {
    run_check(check_info("frattini-intersection").unwrap(), s)
}

pub fn check_product_theorems(s: &Subject<'_>) -> Result<Vec<Verdict>> {
    run_ids(
        s,
        &[
            "product-nilpotent",
            "join-supersoluble",
            "triple-coprime-supersoluble",
            "triple-coprime-fitting",
            "pair-coprime-supersoluble",
            "product-nilpotent-derived",
            "product-with-nilpotent-normal",
        ],
    )
}

pub fn check_radical_identities(s: &Subject<'_>) -> Result<Vec<Verdict>> {
    run_ids(
        s,
        &[
            "radical-chain",
            "dual-oracles",
            "join-commutator-identities",
            "delta-frattini",
            "residual-centralizes-hypercenter",
            "fstar-centralizer",
            "tower-quotient",
            "tower-contains-fstar",
            "tower-frattini-free",
            "tower-centralizer",
            "tower-normal-monotone",
            "tower-image",
            "tower-direct-product",
            "delta-quotient",
            "ftilde-delta",
            "ftilde-tau-contains",
            "quasinilpotent-frattini-radical",
        ],
    )
}

/// Work counter and verdict builder for one check.
pub(crate) struct Tally<'a> {
    id: &'static str,
    group: &'a str,
    cost: u64,
}

impl<'a> Tally<'a> {
    pub(crate) fn new(id: &'static str, g: &'a GroupTable) -> Self {
        Tally {
            id,
            group: g.name(),
            cost: 0,
        }
    }

    pub(crate) fn tick(&mut self, n: usize) {
        self.cost += n as u64;
    }

    pub(crate) fn cost(&self) -> u64 {
        self.cost
    }

    fn verdict(&self, status: Status, witness: Option<String>) -> Verdict {
        Verdict {
            check_id: self.id.to_string(),
            group: self.group.to_string(),
            status,
            witness,
            cost: self.cost,
        }
    }

    pub(crate) fn holds(&self) -> Verdict {
        self.verdict(Status::Holds, None)
    }

    pub(crate) fn holds_with(&self, note: impl Into<String>) -> Verdict {
        self.verdict(Status::Holds, Some(note.into()))
    }

    pub(crate) fn fails(&self, witness: impl Into<String>) -> Verdict {
        self.verdict(Status::Fails, Some(witness.into()))
    }

    pub(crate) fn vacuous(&self, note: impl Into<String>) -> Verdict {
        self.verdict(Status::Vacuous, Some(note.into()))
    }

    pub(crate) fn skipped(&self, reason: impl Into<String>) -> Verdict {
        self.verdict(Status::Skipped, Some(reason.into()))
    }

    /// `holds` when `ok`, otherwise `fails` with the lazily built witness.
    pub(crate) fn require(&self, ok: bool, witness: impl FnOnce() -> String) -> Verdict {
        if ok {
            self.holds()
        } else {
            self.fails(witness())
        }
    }

    /// Verdict for an equivalence between two computed booleans.
    pub(crate) fn equivalence(&self, lhs: bool, rhs: bool, names: (&str, &str)) -> Verdict {
        if lhs == rhs {
            self.holds_with(format!("{}={lhs}, {}={rhs}", names.0, names.1))
        } else {
            self.fails(format!("{}={lhs} but {}={rhs}", names.0, names.1))
        }
    }
}
