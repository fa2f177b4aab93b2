use thiserror::Error;

use crate::lattice::SubgroupList;

#[derive(Debug, Error)]
pub enum Error {
    #[error("group order exceeds cap {cap}")]
    OrderExceedsCap { cap: usize },

    #[error("invalid permutation: {0}")]
    InvalidPerm(String),

    #[error("subgroup is not normal: {0}")]
    NotNormal(String),

    #[error("subgroup enumeration stopped after {} subgroups (limit {limit})", partial.len())]
    BudgetExceeded {
        limit: usize,
        partial: Box<SubgroupList>,
    },

    #[error("internal disagreement: {0}")]
    InternalDisagreement(String),

    #[error("subgroup selection is not closed under conjugation: {0}")]
    NotConjugationClosed(String),

    #[error("construction failed: {0}")]
    ConstructionFailed(String),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("line {line}: point {point} outside degree {degree}")]
    DegreeMismatch {
        line: usize,
        point: usize,
        degree: usize,
    },

    #[error("invalid group table: {0}")]
    InvalidTable(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
