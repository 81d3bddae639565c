//! Finitely presented groups: words, coset enumeration, abelian invariants,
//! and homomorphisms of the lattice Γ = ⟨b, j, u, v⟩ onto finite groups.

pub mod abelian;
pub mod coset;
pub mod cover;
pub mod epi;
pub mod kernel;
pub mod presentation;
pub mod surfaces;
pub mod word;

pub use abelian::{abelianization, format_invariants, free_rank, smith_invariants, surjections_to_cyclic, SparseRelations};
pub use coset::{todd_coxeter, CosetTable, Enumeration};
pub use cover::{
    cover_invariants, hodge_numbers, kernel_coset_table, kernel_homology, preimage_coset_table, regular_cover_relation, reidemeister_schreier, subgroup_abelian_invariants,
    CoverInvariants, CoverRelation, HodgeNumbers,
};
pub use epi::{find_epimorphisms, EpiOptions, EpiSearch, FiniteQuotientMap};
pub use kernel::{
    g10_presented_order, hurwitz_ball_group_check, torsion_free_kernel, HurwitzCheck, TorsionCheck, TorsionWitness,
    TorsionWitnessList, G10_ORDER,
};
pub use presentation::{BjVariant, Presentation, B_RELATORS, G10_RELATORS, GAMMA_GENERATORS, GAMMA_RELATORS};
pub use surfaces::{cover_between, verify_s1, verify_s2, verify_surface, SurfaceCheck, GAMMA_ORDERS};
pub use word::Word;

use crate::finitegrp::GroupError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FpError {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("data error: {0}")]
    Data(String),
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("incomplete coset table: {0}")]
    Incomplete(String),
    #[error("search budget exhausted after {nodes} nodes")]
    Budget { nodes: u64 },
    #[error("{0}")]
    NotFound(String),
    #[error(transparent)]
    Group(#[from] GroupError),
}
