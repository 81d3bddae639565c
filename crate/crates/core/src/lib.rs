//! Covolume bounds for arithmetic lattices in PU(2,1), Deligne–Mostow
//! orbifold invariants, and finite quotients of the lattice behind the
//! Hurwitz ball quotients.

pub mod cli;
pub mod covolume;
pub mod dmorbifold;
pub mod exactmath;
pub mod finitegrp;
pub mod fpgroup;
