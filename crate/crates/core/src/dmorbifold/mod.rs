//! Deligne–Mostow ball tuples, the orbifold of (2,2,2,7,11)/12 and the
//! numerical invariants of ball quotient surfaces.

pub mod strata;
pub mod surface;
pub mod tuple;

pub use strata::{
    builtin_stratification, derive_stratification, orbifold_euler, six_lines_data, triangle_stratification, SixLines,
    Stratification, Stratum,
};
pub use surface::{
    aut_bound, ball_aut_constant, hurwitz_bound, invariant_conversions, vol_lower, xiao_bound, SurfaceInvariants,
    BALL_XIAO_CONSTANT,
};
pub use tuple::{
    check_int, check_sigma_int, classify_configuration, curve_weights, solve_triangle, triangle_orbifold, BallTuple,
    CurveWeights, IntReport, PairWitness, Stability, TriangleReport,
};

use crate::exactmath::ExactError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum DmError {
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("pole: mu_{i} + mu_{j} = 1")]
    Pole { i: usize, j: usize },
    #[error("not implemented for general tuples: {0}")]
    Unsupported(String),
    #[error(transparent)]
    Exact(#[from] ExactError),
}
