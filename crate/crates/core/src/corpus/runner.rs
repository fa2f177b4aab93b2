//! Parallel suite execution over a corpus.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::group::{build_group, GroupTable, DEFAULT_CAP};
use crate::theorems::{run_check, Budget, CheckInfo, CheckKind, Status, Subject, CHECKS};

use super::catalog::CorpusEntry;
use super::report::{RadicalOrders, ReportRecord, INTERNAL_CHECK_ID};

/// Default order limit for quantified product checks.
pub const DEFAULT_MAX_PRODUCT_ORDER: usize = 200;

#[derive(Clone, Debug)]
pub struct SuiteOptions {
    /// Check ids to run; empty runs all.
    pub checks: Vec<String>,
    pub budget: Budget,
    pub cap: usize,
    pub max_product_order: usize,
    /// Worker threads; 0 lets rayon choose.
    pub jobs: usize,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        SuiteOptions {
            checks: Vec::new(),
            budget: Budget::default(),
            cap: DEFAULT_CAP,
            max_product_order: DEFAULT_MAX_PRODUCT_ORDER,
            jobs: 0,
        }
    }
}

impl SuiteOptions {
    /// Resolves `checks` against the registry; unknown ids are an error.
    pub fn selected(&self) -> std::result::Result<Vec<&'static CheckInfo>, String> {
        if let Some(bad) = self
            .checks
            .iter()
            .find(|id| !CHECKS.iter().any(|c| c.id == id.as_str()))
        {
            return Err(format!("unknown check {bad:?}"));
        }
        Ok(CHECKS
            .iter()
            .filter(|c| self.checks.is_empty() || self.checks.iter().any(|id| id == c.id))
            .collect())
    }
}

#[derive(Clone, Debug)]
pub struct SuiteOutcome {
    pub records: Vec<ReportRecord>,
    pub exit_code: i32,
}

fn internal(table: &GroupTable, e: &Error) -> ReportRecord {
    ReportRecord::bare(
        table.name(),
        Some(table.order()),
        INTERNAL_CHECK_ID,
        Status::Fails,
        e.to_string(),
    )
}

/// Every record for one already-built table.
pub fn run_table(
    table: &GroupTable,
    checks: &[&'static CheckInfo],
    opts: &SuiteOptions,
) -> Vec<ReportRecord> {
    if let Err(e) = table.validate() {
        return vec![internal(table, &e)];
    }
    let subject = match Subject::new(table, opts.budget, opts.max_product_order) {
        Ok(s) => s,
        Err(Error::BudgetExceeded { limit, .. }) => {
            return vec![ReportRecord::bare(
                table.name(),
                Some(table.order()),
                "radicals",
                Status::Skipped,
                format!("subgroup enumeration exceeded {limit}"),
            )]
        }
        Err(e) => return vec![internal(table, &e)],
    };
    let orders = RadicalOrders::from(&subject.radicals);
    checks
        .iter()
        .map(|c| match run_check(c, &subject) {
            Ok(v) => ReportRecord::from_verdict(v, table.order(), orders),
            Err(e) => {
                let mut r = internal(table, &e);
                r.witness = Some(format!("{}: {e}", c.id));
                r
            }
        })
        .collect()
}

fn run_entry(
    entry: &CorpusEntry,
    checks: &[&'static CheckInfo],
    opts: &SuiteOptions,
) -> Vec<ReportRecord> {
    let name = entry.name();
    match build_group(&entry.spec, opts.cap) {
        Ok(t) => run_table(
            &t.with_subgroup_budget(opts.budget.max_subgroups),
            checks,
            opts,
        ),
        Err(Error::OrderExceedsCap { cap }) => vec![ReportRecord::bare(
            name,
            None,
            "build",
            Status::Skipped,
            format!("order exceeds cap {cap}"),
        )],
        Err(e) => vec![ReportRecord::bare(
            name,
            None,
            INTERNAL_CHECK_ID,
            Status::Fails,
            e.to_string(),
        )],
    }
}

/// 1 when a proven-theorem check fails or an internal defect surfaced.
pub fn exit_code(records: &[ReportRecord]) -> i32 {
    let bad = records.iter().any(|r| {
        r.status == Status::Fails
            && (r.is_internal()
                || CHECKS
                    .iter()
                    .any(|c| c.id == r.check_id && c.kind == CheckKind::Theorem))
    });
    i32::from(bad)
}

fn in_pool<T: Send>(jobs: usize, f: impl FnOnce() -> T + Send) -> Result<T> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| Error::ConstructionFailed(format!("thread pool: {e}")))?;
    Ok(pool.install(f))
}

/// Runs the selected checks on every entry; output order is corpus order
/// then check order, whatever the worker count.
pub fn run_suite(corpus: &[CorpusEntry], opts: &SuiteOptions) -> Result<SuiteOutcome> {
    let checks = opts.selected().map_err(|m| Error::Parse {
        line: 0,
        message: m,
    })?;
    let per_group: Vec<Vec<ReportRecord>> = in_pool(opts.jobs, || {
        corpus
            .par_iter()
            .map(|e| run_entry(e, &checks, opts))
            .collect()
    })?;
    let records: Vec<ReportRecord> = per_group.into_iter().flatten().collect();
    let exit_code = exit_code(&records);
    Ok(SuiteOutcome { records, exit_code })
}

/// [`run_suite`] over tables that are already built, such as test fixtures.
pub fn run_tables(tables: &[GroupTable], opts: &SuiteOptions) -> Result<SuiteOutcome> {
    let checks = opts.selected().map_err(|m| Error::Parse {
        line: 0,
        message: m,
    })?;
    let per_group: Vec<Vec<ReportRecord>> = in_pool(opts.jobs, || {
        tables
            .par_iter()
            .map(|t| run_table(t, &checks, opts))
            .collect()
    })?;
    let records: Vec<ReportRecord> = per_group.into_iter().flatten().collect();
    let exit_code = exit_code(&records);
    Ok(SuiteOutcome { records, exit_code })
}
