//! Group catalog, `.grp` files, suite orchestration and reports.

pub mod catalog;
pub mod grp;
pub mod report;
pub mod runner;

pub use catalog::{builtin_catalog, find_builtin, resolve_group, CorpusEntry, Source};
pub use grp::{load_corpus, load_group_file, parse_grp, to_grp};
pub use report::{emit_report, Format, RadicalOrders, ReportRecord, INTERNAL_CHECK_ID};
pub use runner::{
    exit_code, run_suite, run_table, run_tables, SuiteOptions, SuiteOutcome,
    DEFAULT_MAX_PRODUCT_ORDER,
};
