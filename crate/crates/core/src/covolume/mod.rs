//! The minimal-covolume search: volume formula, class-number and
//! discriminant bounds, and the elimination of candidate field pairs.

pub mod bounds;
pub mod cascade;
pub mod odlyzko;
pub mod prasad;

pub use bounds::{direct_lower_bound, disc_upper_bound, rational_cap, root_disc_cap, TABLE1_DELTAS};
pub use cascade::{
    field_bound_cascade, run_full_search, BoundKind, Candidate, EliminationCertificate, SearchOptions, SearchReport,
    SurvivorRecord, Verdict,
};
pub use odlyzko::{explicit_formula_bound, reproduce_table2, table2_map, OdlyzkoTable, Table2Row};
pub use prasad::{
    brauer_siegel_h3_bound, division_algebra_check, index_bound, prasad_euler_char, CommClassData, LocalFactor, Place,
};

use crate::exactmath::ExactError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CovolumeError {
    #[error(transparent)]
    Exact(#[from] ExactError),
    #[error("data: {0}")]
    Data(String),
    #[error("out of range: {0}")]
    Range(String),
    #[error("comparison stayed indeterminate: {0}")]
    Indeterminate(String),
}
