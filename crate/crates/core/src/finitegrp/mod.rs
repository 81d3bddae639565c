//! Permutation groups, F₉ arithmetic and the unitary group PSU(3, F₃)
//! obtained by reducing the hermitian lattice modulo the prime over 3.

pub mod gf9;
pub mod groups;
pub mod perm;
pub mod unitary;

pub use gf9::Gf9;
pub use groups::{
    a4_to_z3, alternating4, cyclic, direct_product, embed_pair, frobenius21, frobenius21_abstract, project_a4_factor,
    psu33_cached, symmetric, target, Frobenius21, Target, TARGET_NAMES,
};
pub use perm::{Bsgs, Perm, PermGroup};
pub use unitary::{
    build_psu33, isotropic_points, lattice_unitaries, projective_points, psu3_order_formula, reduce_mod_p3,
    su3_center_size, HermitianMatrix3, Mat3, Psu33, PSU33_ORDER,
};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GroupError {
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("group of order {0} is too large to enumerate")]
    TooLarge(u128),
    #[error("construction failed: {0}")]
    Construction(String),
}
