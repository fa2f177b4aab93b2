//! Report records and their two renderings.

use std::fmt::Write as _;

use serde::Serialize;

use crate::radicals::RadicalReport;
use crate::theorems::{Status, Verdict};

/// One `(group, check)` outcome plus the group's radical orders.
///
/// Field order is the serialized order and must not change.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReportRecord {
    pub group: String,
    pub order: Option<usize>,
    pub check_id: String,
    pub status: Status,
    pub witness: Option<String>,
    pub phi: Option<usize>,
    pub fit: Option<usize>,
    pub fstar: Option<usize>,
    pub ftilde: Option<usize>,
    pub ftilde_inf: Option<usize>,
    pub stab_index: Option<usize>,
    #[serde(skip)]
    pub cost: u64,
}

/// Radical orders shared by every record of one group.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct RadicalOrders {
    pub phi: usize,
    pub fit: usize,
    pub fstar: usize,
    pub ftilde: usize,
    pub ftilde_inf: usize,
    pub stab_index: usize,
}

impl From<&RadicalReport> for RadicalOrders {
    fn from(r: &RadicalReport) -> Self {
        RadicalOrders {
            phi: r.frattini.order(),
            fit: r.fitting.order(),
            fstar: r.fstar.order(),
            ftilde: r.ftilde.order(),
            ftilde_inf: r.ftilde_inf().order(),
            stab_index: r.stabilization_index(),
        }
    }
}

impl ReportRecord {
    /// A record with no radical data, used for build and internal failures.
    pub fn bare(
        group: &str,
        order: Option<usize>,
        check_id: &str,
        status: Status,
        witness: impl Into<String>,
    ) -> Self {
        ReportRecord {
            group: group.to_string(),
            order,
            check_id: check_id.to_string(),
            status,
            witness: Some(witness.into()),
            phi: None,
            fit: None,
            fstar: None,
            ftilde: None,
            ftilde_inf: None,
            stab_index: None,
            cost: 0,
        }
    }

    pub fn from_verdict(v: Verdict, order: usize, r: RadicalOrders) -> Self {
        ReportRecord {
            group: v.group,
            order: Some(order),
            check_id: v.check_id,
            status: v.status,
            witness: v.witness,
            phi: Some(r.phi),
            fit: Some(r.fit),
            fstar: Some(r.fstar),
            ftilde: Some(r.ftilde),
            ftilde_inf: Some(r.ftilde_inf),
            stab_index: Some(r.stab_index),
            cost: v.cost,
        }
    }

    pub fn is_internal(&self) -> bool {
        self.check_id == INTERNAL_CHECK_ID
    }
}

/// `check_id` of records reporting an implementation defect.
pub const INTERNAL_CHECK_ID: &str = "internal";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Table,
    Lines,
}

pub fn emit_report(records: &[ReportRecord], format: Format) -> String {
    match format {
        Format::Lines => emit_lines(records),
        Format::Table => emit_table(records),
    }
}

fn emit_lines(records: &[ReportRecord]) -> String {
    let mut out = String::new();
    for r in records {
        out.push_str(&serde_json::to_string(r).expect("record serializes"));
        out.push('\n');
    }
    out
}

fn cell(v: Option<usize>) -> String {
    v.map_or_else(|| "-".to_string(), |x| x.to_string())
}

#[derive(Default)]
struct Row<'a> {
    first: Option<&'a ReportRecord>,
    counts: [usize; 4],
}

fn status_slot(s: Status) -> usize {
    match s {
        Status::Holds => 0,
        Status::Vacuous => 1,
        Status::Skipped => 2,
        Status::Fails => 3,
    }
}

/// Groups in first-appearance order; the records of a group need not be adjacent.
fn rows(records: &[ReportRecord]) -> Vec<Row<'_>> {
    let mut out: Vec<Row<'_>> = Vec::new();
    let mut index = std::collections::HashMap::new();
    for r in records {
        let i = *index.entry(r.group.as_str()).or_insert_with(|| {
            out.push(Row::default());
            out.len() - 1
        });
        let row = &mut out[i];
        // prefer a record that carries radical orders
        if row.first.is_none_or(|f| f.phi.is_none() && r.phi.is_some()) {
            row.first = Some(r);
        }
        row.counts[status_slot(r.status)] += 1;
    }
    out
}

fn emit_table(records: &[ReportRecord]) -> String {
    let header = [
        "group", "order", "Phi", "F", "F*", "F~", "F~inf", "stab", "holds", "vacuous", "skipped",
        "fails",
    ];
    let mut lines: Vec<Vec<String>> = vec![header.iter().map(|s| s.to_string()).collect()];
    for row in rows(records) {
        let r = row.first.expect("row has a record");
        let mut line = vec![
            r.group.clone(),
            cell(r.order),
            cell(r.phi),
            cell(r.fit),
            cell(r.fstar),
            cell(r.ftilde),
            cell(r.ftilde_inf),
            cell(r.stab_index),
        ];
        line.extend(row.counts.iter().map(|c| c.to_string()));
        lines.push(line);
    }
    let widths: Vec<usize> = (0..header.len())
        .map(|c| {
            lines
                .iter()
                .map(|l| l[c].chars().count())
                .max()
                .unwrap_or(0)
        })
        .collect();
    let mut out = String::new();
    for line in &lines {
        let mut text = String::new();
        for (c, v) in line.iter().enumerate() {
            if c == 0 {
                write!(text, "{v:<w$}", w = widths[c]).unwrap();
            } else {
                write!(text, "  {v:>w$}", w = widths[c]).unwrap();
            }
        }
        out.push_str(text.trim_end());
        out.push('\n');
    }
    let notable: Vec<&ReportRecord> = records
        .iter()
        .filter(|r| matches!(r.status, Status::Fails | Status::Skipped))
        .collect();
    if !notable.is_empty() {
        out.push('\n');
        for r in notable {
            writeln!(
                out,
                "{} {} {}: {}",
                r.status.as_str(),
                r.group,
                r.check_id,
                r.witness.as_deref().unwrap_or("")
            )
            .unwrap();
        }
    }
    out
}
