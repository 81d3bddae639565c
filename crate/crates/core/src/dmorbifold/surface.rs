use serde::Serialize;

use crate::exactmath::interval::{pi, refine, serialize_q};
use crate::exactmath::{q, qi, RealInterval, Q};

use super::DmError;

/// Invariants of a smooth ball quotient with Euler number e.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct SurfaceInvariants {
    #[serde(serialize_with = "serialize_q")]
    pub e: Q,
    #[serde(serialize_with = "serialize_q")]
    pub chi_o: Q,
    #[serde(rename = "K2", serialize_with = "serialize_q")]
    pub k2: Q,
    /// volume for holomorphic curvature −1: (8π²/3) e
    pub volume: RealInterval,
}

/// χ(O_S) = e/3, K² = 3e, vol = (8π²/3) e.
pub fn invariant_conversions(e: &Q, eps: &Q) -> Result<SurfaceInvariants, DmError> {
    let volume = refine(eps, |bits| {
        let p = pi(bits + 16 + e.numer().bits());
        Ok(p.sqr().scale(&(q(8, 3) * e)).round(bits + 4))
    })?;
    Ok(SurfaceInvariants { e: e.clone(), chi_o: e / qi(3), k2: e * qi(3), volume })
}

/// |Aut(C)| ≤ 84(g − 1) for a curve of genus g ≥ 2.
pub fn hurwitz_bound(g: i64) -> Result<i64, DmError> {
    if g < 2 {
        return Err(DmError::Invalid(format!("genus {g} < 2")));
    }
    Ok(84 * (g - 1))
}

/// The conjectured |Aut(S)| ≤ 288 e(S).
pub fn aut_bound(e: &Q) -> Q {
    e * qi(288)
}

/// Xiao's bound: 42² c₁² when the resolved quotient is rational, 288 c₁² otherwise.
pub fn xiao_bound(c1sq: &Q, rational_quotient: bool) -> Q {
    if rational_quotient {
        c1sq * qi(42 * 42)
    } else {
        c1sq * qi(288)
    }
}

/// Replacement for 42² when S is a ball quotient.
pub const BALL_XIAO_CONSTANT: i64 = 1728;

/// |Aut(S)| ≤ b e(S) with b = 1728 · 3.
pub fn ball_aut_constant() -> i64 {
    BALL_XIAO_CONSTANT * 3
}

/// Lower bound on the volume of a closed complex hyperbolic 2-orbifold:
/// (8π²/3) / b = π²/1944.
pub fn vol_lower(eps: &Q) -> Result<RealInterval, DmError> {
    Ok(refine(eps, |bits| {
        let p = pi(bits + 16);
        Ok(p.sqr().scale(&(q(8, 3) / qi(ball_aut_constant()))).round(bits + 4))
    })?)
}

/// Volume of an orbifold with orbifold Euler characteristic e.
pub fn orbifold_volume(e: &Q, eps: &Q) -> Result<RealInterval, DmError> {
    Ok(invariant_conversions(e, eps)?.volume)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::dec;

    #[test]
    fn spot_values() {
        let s = invariant_conversions(&qi(63), &dec("1e-10")).unwrap();
        assert_eq!((s.chi_o.clone(), s.k2.clone()), (qi(21), qi(189)));
        assert_eq!(aut_bound(&qi(63)), qi(18144));
        assert_eq!(hurwitz_bound(3).unwrap(), 168);
        let v = invariant_conversions(&qi(3), &dec("1e-10")).unwrap().volume;
        assert!((v.mid_f64() - 8.0 * std::f64::consts::PI.powi(2)).abs() < 1e-9);
        let l = vol_lower(&dec("1e-10")).unwrap();
        assert!((l.mid_f64() - 0.005077).abs() < 1e-6);
        assert_eq!(ball_aut_constant(), 5184);
    }
}
