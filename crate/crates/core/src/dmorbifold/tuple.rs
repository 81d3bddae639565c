use std::fmt;

use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::exactmath::interval::{parse_rational, serialize_q};
use crate::exactmath::{q, qi, Q};

use super::DmError;

/// Weights (μ₁, …, μ_{n+3}) with every μⱼ in (0, 1) and Σ μⱼ = 2.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BallTuple {
    mu: Vec<Q>,
}

impl BallTuple {
    pub fn new(mu: Vec<Q>) -> Result<Self, DmError> {
        if mu.len() < 4 {
            return Err(DmError::Invalid(format!("need at least 4 weights, got {}", mu.len())));
        }
        if let Some(m) = mu.iter().find(|m| !m.is_positive() || **m >= Q::one()) {
            return Err(DmError::Invalid(format!("weight {m} outside (0, 1)")));
        }
        let s: Q = mu.iter().sum();
        if s != qi(2) {
            return Err(DmError::Invalid(format!("weights sum to {s}, not 2")));
        }
        Ok(BallTuple { mu })
    }

    /// μⱼ = aⱼ / t with Σ aⱼ = 2t.
    pub fn from_integers(a: &[i64], t: i64) -> Result<Self, DmError> {
        Self::new(a.iter().map(|&x| q(x, t)).collect())
    }

    /// Comma-separated fractions, e.g. "2/12,2/12,2/12,7/12,11/12"; a trailing
    /// "/t" applies to every entry, as in "(2,2,2,7,11)/12".
    pub fn parse(s: &str) -> Result<Self, DmError> {
        let s = s.trim();
        let (body, common) = match s.strip_prefix('(').and_then(|r| r.split_once(")/")) {
            Some((b, t)) => (b, Some(t)),
            None => (s.trim_matches(|c| c == '(' || c == ')'), None),
        };
        let denom = match common {
            Some(t) => Some(parse_rational(t).ok_or_else(|| DmError::Invalid(format!("bad denominator {t:?}")))?),
            None => None,
        };
        let mut mu = Vec::new();
        for part in body.split(',') {
            let x = parse_rational(part.trim()).ok_or_else(|| DmError::Invalid(format!("bad weight {part:?}")))?;
            mu.push(match &denom {
                Some(t) => x / t,
                None => x,
            });
        }
        Self::new(mu)
    }

    /// The tuple (2, 2, 2, 7, 11)/12.
    pub fn hurwitz() -> Self {
        Self::from_integers(&[2, 2, 2, 7, 11], 12).expect("valid tuple")
    }

    pub fn mu(&self) -> &[Q] {
        &self.mu
    }

    pub fn len(&self) -> usize {
        self.mu.len()
    }

    pub fn is_empty(&self) -> bool {
        self.mu.is_empty()
    }

    /// Complex dimension n of the ball.
    pub fn dimension(&self) -> usize {
        self.mu.len() - 3
    }
}

impl fmt::Display for BallTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.mu.iter().map(|m| m.to_string()).collect();
        write!(f, "({})", parts.join(", "))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PairWitness {
    /// 1-based labels
    pub i: usize,
    pub j: usize,
    #[serde(serialize_with = "serialize_q")]
    pub value: Q,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IntReport {
    pub holds: bool,
    pub witnesses: Vec<PairWitness>,
}

fn is_int(x: &Q) -> bool {
    x.is_integer()
}

fn is_half_int(x: &Q) -> bool {
    (x * qi(2)).is_integer()
}

fn integrality(t: &BallTuple, sigma: bool) -> IntReport {
    let mu = t.mu();
    let mut witnesses = Vec::new();
    for i in 0..mu.len() {
        for j in i + 1..mu.len() {
            let s = &mu[i] + &mu[j];
            if s >= Q::one() {
                continue;
            }
            let r = (Q::one() - s).recip();
            let ok = if sigma && mu[i] == mu[j] { is_half_int(&r) } else { is_int(&r) };
            if !ok {
                witnesses.push(PairWitness { i: i + 1, j: j + 1, value: r });
            }
        }
    }
    IntReport { holds: witnesses.is_empty(), witnesses }
}

/// (1 − μᵢ − μⱼ)⁻¹ ∈ Z whenever μᵢ + μⱼ < 1.
pub fn check_int(t: &BallTuple) -> IntReport {
    integrality(t, false)
}

/// As `check_int`, but equal weights only need a half-integer.
pub fn check_sigma_int(t: &BallTuple) -> IntReport {
    integrality(t, true)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Stability {
    Stable,
    StrictlySemistable,
    Unstable,
}

/// `positions[j]` is the point of P¹ that label j + 1 sits on; labels sharing a
/// position coincide.
pub fn classify_configuration(t: &BallTuple, positions: &[usize]) -> Result<Stability, DmError> {
    if positions.len() != t.len() {
        return Err(DmError::Invalid(format!("{} positions for {} weights", positions.len(), t.len())));
    }
    let mut sums: std::collections::BTreeMap<usize, Q> = Default::default();
    for (m, p) in t.mu().iter().zip(positions) {
        *sums.entry(*p).or_insert_with(Q::zero) += m;
    }
    let worst = sums.values().max().cloned().unwrap_or_else(Q::zero);
    Ok(if worst < Q::one() {
        Stability::Stable
    } else if worst == Q::one() {
        Stability::StrictlySemistable
    } else {
        Stability::Unstable
    })
}

/// The three pair-partitions {1,2}|{3,4}, {2,3}|{1,4}, {3,1}|{2,4} of a
/// 4-tuple; for each, r = |1 − μᵢ − μⱼ|⁻¹, which is the same from either side.
pub const TRIANGLE_PAIRS: [(usize, usize); 3] = [(0, 1), (1, 2), (2, 0)];

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TriangleReport {
    #[serde(serialize_with = "ser_q3")]
    pub r: [Q; 3],
    pub witnesses: Vec<PairWitness>,
}

fn ser_q3<S: serde::Serializer>(r: &[Q; 3], s: S) -> Result<S::Ok, S::Error> {
    use serde::ser::SerializeSeq;
    let mut seq = s.serialize_seq(Some(3))?;
    for x in r {
        seq.serialize_element(&x.to_string())?;
    }
    seq.end()
}

impl TriangleReport {
    pub fn is_triangle(&self) -> bool {
        self.witnesses.is_empty()
    }
}

/// Cone orders (r₁, r₂, r₃) of the triangle orbifold attached to a 4-tuple.
/// Failing pairs (neither an integer nor, for equal weights, a half-integer)
/// are reported as witnesses.
pub fn triangle_orbifold(t: &BallTuple) -> Result<TriangleReport, DmError> {
    if t.len() != 4 {
        return Err(DmError::Invalid(format!("triangle orbifolds need 4 weights, got {}", t.len())));
    }
    let mu = t.mu();
    let mut r: [Q; 3] = [Q::zero(), Q::zero(), Q::zero()];
    let mut witnesses = Vec::new();
    for (k, &(i, j)) in TRIANGLE_PAIRS.iter().enumerate() {
        let d = Q::one() - &mu[i] - &mu[j];
        if d.is_zero() {
            return Err(DmError::Pole { i: i + 1, j: j + 1 });
        }
        let x = d.abs().recip();
        let ok = if mu[i] == mu[j] { is_half_int(&x) } else { is_int(&x) };
        if !ok {
            witnesses.push(PairWitness { i: i + 1, j: j + 1, value: x.clone() });
        }
        r[k] = x;
    }
    Ok(TriangleReport { r, witnesses })
}

/// Solves μᵢ + μⱼ = 1 − 1/r for the three pairs together with Σ μ = 2.
pub fn solve_triangle(r: [i64; 3]) -> Result<BallTuple, DmError> {
    if r.iter().any(|&x| x < 2) {
        return Err(DmError::Invalid("cone orders must be at least 2".into()));
    }
    let s: [Q; 3] = [Q::one() - q(1, r[0]), Q::one() - q(1, r[1]), Q::one() - q(1, r[2])];
    // s0 = μ1 + μ2, s1 = μ2 + μ3, s2 = μ3 + μ1
    let half = (&s[0] + &s[1] + &s[2]) / qi(2);
    let m1 = &half - &s[1];
    let m2 = &half - &s[2];
    let m3 = &half - &s[0];
    let m4 = qi(2) - &half;
    BallTuple::new(vec![m1, m2, m3, m4])
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CurveWeights {
    pub c1: u64,
    pub c2: u64,
}

/// Orbifold weights of the two branch curves of the (2,2,2,7,11)/12 orbifold:
/// the pair {i, 4} gives (1 − μᵢ − μ₄)⁻¹, the equal pair {i, j} ⊂ {1,2,3}
/// gives 2(1 − μᵢ − μⱼ)⁻¹.
pub fn curve_weights(t: &BallTuple) -> Result<CurveWeights, DmError> {
    if t != &BallTuple::hurwitz() {
        return Err(DmError::Unsupported("curve weights are only implemented for (2,2,2,7,11)/12".into()));
    }
    let mu = t.mu();
    let c1 = (Q::one() - &mu[0] - &mu[3]).recip();
    let c2 = (Q::one() - &mu[0] - &mu[1]).recip() * qi(2);
    let as_u64 = |x: Q| -> Result<u64, DmError> {
        if !x.is_integer() {
            return Err(DmError::Invalid(format!("non-integral weight {x}")));
        }
        Ok(num_traits::ToPrimitive::to_u64(&x.to_integer()).unwrap_or(0))
    };
    Ok(CurveWeights { c1: as_u64(c1)?, c2: as_u64(c2)? })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hurwitz_tuple() {
        let t = BallTuple::hurwitz();
        let int = check_int(&t);
        assert!(!int.holds);
        assert_eq!(int.witnesses[0], PairWitness { i: 1, j: 2, value: q(3, 2) });
        assert!(check_sigma_int(&t).holds);
        assert_eq!(curve_weights(&t).unwrap(), CurveWeights { c1: 4, c2: 3 });
    }

    #[test]
    fn parse_forms() {
        assert_eq!(BallTuple::parse("(2,2,2,7,11)/12").unwrap(), BallTuple::hurwitz());
        assert_eq!(BallTuple::parse("1/6, 1/6,1/6,7/12,11/12").unwrap(), BallTuple::hurwitz());
        assert!(BallTuple::parse("1/2,1/2,1/2").is_err());
        assert!(BallTuple::parse("1/2,1/2,1/2,1/3").is_err());
    }

    #[test]
    fn stability() {
        let t = BallTuple::hurwitz();
        assert_eq!(classify_configuration(&t, &[0, 1, 2, 3, 4]).unwrap(), Stability::Stable);
        assert_eq!(classify_configuration(&t, &[0, 0, 0, 3, 4]).unwrap(), Stability::Stable);
        assert_eq!(classify_configuration(&t, &[0, 1, 2, 3, 3]).unwrap(), Stability::Unstable);
        let h = BallTuple::parse("1/2,1/2,1/2,1/2").unwrap();
        assert_eq!(classify_configuration(&h, &[0, 0, 1, 2]).unwrap(), Stability::StrictlySemistable);
    }

    #[test]
    fn triangle_237() {
        let t = solve_triangle([2, 3, 7]).unwrap();
        assert_eq!(t, BallTuple::from_integers(&[29, 13, 43, 83], 84).unwrap());
        let rep = triangle_orbifold(&t).unwrap();
        assert!(rep.is_triangle());
        assert_eq!(rep.r, [qi(2), qi(3), qi(7)]);
        let pole = BallTuple::parse("1/2,1/2,1/2,1/2").unwrap();
        assert!(matches!(triangle_orbifold(&pole), Err(DmError::Pole { .. })));
    }
}
