//! Probes for two open questions: how fast the F̃ tower stabilizes, and
//! whether F̃^∞ can replace F̃ in the maximal-subgroup nilpotency criterion.
//! A `fails` here is a finding, not a defect.

use serde::Serialize;

use crate::error::Result;
use crate::functors::is_r_subnormal;
use crate::group::GroupTable;

use super::{Budget, Status, Subject, Tally, Verdict};

pub fn tower_stabilization(s: &Subject<'_>) -> Result<Verdict> {
    let mut t = Tally::new("tower-stabilization", s.g);
    let k = s.radicals.stabilization_index();
    t.tick(k + 1);
    let note = format!("stabilization index {k}");
    Ok(if k <= 1 {
        t.holds_with(note)
    } else {
        t.fails(note)
    })
}

pub fn maximal_ftilde_inf_subnormal(s: &Subject<'_>) -> Result<Verdict> {
    let g = s.g;
    let mut t = Tally::new("maximal-ftilde-inf-subnormal", g);
    let inf = s.radicals.ftilde_inf();
    let mut all = true;
    for m in g.maximal_subgroups()? {
        t.tick(1);
        if !is_r_subnormal(g, m, inf).verdict {
            all = false;
            break;
        }
    }
    Ok(t.equivalence(
        s.radicals.flags.nilpotent,
        all,
        ("nilpotent", "all maximal F~inf-subnormal"),
    ))
}

/// Per-group evidence for both questions.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ProblemProbe {
    pub group: String,
    pub order: usize,
    pub stabilization_index: usize,
    pub ftilde_inf_criterion: Status,
    pub witness: Option<String>,
}

pub fn probe_problems(g: &GroupTable) -> Result<ProblemProbe> {
    let s = Subject::new(g, Budget::default(), usize::MAX)?;
    let v = super::run_check(
        super::check_info("maximal-ftilde-inf-subnormal").expect("registered"),
        &s,
    )?;
    Ok(ProblemProbe {
        group: g.name().to_string(),
        order: g.order(),
        stabilization_index: s.radicals.stabilization_index(),
        ftilde_inf_criterion: v.status,
        witness: v.witness,
    })
}

/// Corpus-wide aggregate of [`ProblemProbe`] records.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ProbeSummary {
    pub groups: usize,
    pub max_index: usize,
    /// Groups whose tower needs more than one step.
    pub high_index: Vec<String>,
    pub criterion_violations: Vec<String>,
    pub criterion_skipped: Vec<String>,
}

impl ProbeSummary {
    pub fn from_probes(probes: &[ProblemProbe]) -> Self {
        let mut s = ProbeSummary {
            groups: probes.len(),
            ..Default::default()
        };
        for p in probes {
            s.max_index = s.max_index.max(p.stabilization_index);
            if p.stabilization_index > 1 {
                s.high_index.push(p.group.clone());
            }
            match p.ftilde_inf_criterion {
                Status::Fails => s.criterion_violations.push(p.group.clone()),
                Status::Skipped => s.criterion_skipped.push(p.group.clone()),
                _ => {}
            }
        }
        s
    }
}
