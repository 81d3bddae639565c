//! Exact rational arithmetic, certified real intervals, and the special
//! functions needed for the covolume bounds.

pub mod cyclo;
pub mod field;
pub mod interval;
pub mod kronecker;
pub mod special;

pub use cyclo::CycloElem;
pub use field::{CharFactor, FieldDesc, FieldKind, FieldTable};
pub use interval::{dec, q, qi, RealInterval, Q};
pub use kronecker::{is_fundamental_discriminant, kronecker_symbol};
pub use special::{dedekind_zeta, dirichlet_l, gamma_fn, hurwitz_zeta, riemann_zeta};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ExactError {
    #[error("domain error: {0}")]
    Domain(String),
    #[error("not a fundamental discriminant: {0}")]
    NotFundamental(i64),
    #[error("unsupported analytic evaluation: {0}")]
    Unsupported(String),
    #[error("precision target not reached: {0}")]
    Precision(String),
    #[error("field data: {0}")]
    Data(String),
}
