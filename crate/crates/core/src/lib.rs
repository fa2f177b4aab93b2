//! Finite groups as dense multiplication tables, their subgroup lattices, and
//! Fitting-type radicals, with a suite of machine checks over a small-group corpus.

pub mod corpus;
pub mod error;
pub mod functors;
pub mod group;
pub mod lattice;
pub mod perm;
pub mod radicals;
pub mod subgroup;
pub mod theorems;

pub use corpus::{
    builtin_catalog, emit_report, run_suite, CorpusEntry, ReportRecord, SuiteOptions,
};
pub use error::{Error, Result};
pub use functors::{PredicateResult, Witness};
pub use group::{
    build_group, direct_product, DirectProduct, Embedding, GroupSpec, GroupTable, QuotientMap,
    SetProduct, DEFAULT_CAP, HARD_MAX_ORDER,
};
pub use lattice::{
    all_subgroups, chief_series, chief_series_with, is_abnormal, is_subnormal, maximal_subgroups,
    normal_subgroups, ChiefSeries, ChiefTieBreak, NormalSubgroups, SubgroupList, Subnormality,
    DEFAULT_SUBGROUP_BUDGET,
};
pub use perm::Perm;
pub use radicals::{FTildeTower, MFunctor, RadicalReport, TauRadicals};
pub use subgroup::Subgroup;
pub use theorems::{Budget, CheckKind, Status, Subject, Verdict, CHECKS};
