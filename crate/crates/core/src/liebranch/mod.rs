//! Root systems, the Weyl dimension formula and the branching of the
//! 27-dimensional `E6` representation.

mod roots;
mod table;
mod types;
mod weyl;

pub use roots::{root_system, symmetrized_form, RootSystem};
pub use table::{
    dual_summand, e6_check, is_self_dual_sum, min_big_summand_rank, rule_out_subgroups, sha256_hex,
    summand_dim, verify_branching_table, verify_row, BigSummandBound, BranchRow, BranchingTable,
    E6Check, Elimination, EliminationReport, RowCheck, RowElimination, Summand, ASSET,
    ASSET_SHA256, E6_REP_DIM, TABLE_VERSION,
};
pub use types::{Family, SimpleType, Weight, SUPPORTED};
pub use weyl::{dual_weight, is_self_dual, weyl_dim, weyl_dim_big};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("unsupported Dynkin type {0}")]
    Unsupported(String),
    #[error("invalid weight: {0}")]
    InvalidWeight(String),
    #[error("invalid branching table: {0}")]
    Table(String),
}

/// Positive roots of a supported type.
pub fn positive_roots(t: SimpleType) -> RootSystem {
    root_system(t)
}
