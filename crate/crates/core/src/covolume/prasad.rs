//! Prasad's volume formula specialized to SU(2,1) over a CM pair (k, ℓ),
//! the index bound for the normalizer, and the class-number estimate.
//!
//! L_{ℓ/k}(s) is taken to be ζ_ℓ(s)/ζ_k(s); for ℓ = Q(ζ₁₂), k = Q(√3) this is
//! L(s, χ₋₄)·L(s, χ₋₃).

use num_traits::One;
use serde::Serialize;

use crate::exactmath::interval::{exp_point, pi, refine, serialize_q};
use crate::exactmath::kronecker::kron;
use crate::exactmath::special::{dedekind_zeta_bits, gamma_bits};
use crate::exactmath::{dec, qi, CycloElem, ExactError, FieldDesc, RealInterval, Q};

use super::bounds::sixteen_pi5;
use super::CovolumeError;

/// A finite place v of k: residue characteristic and residue field size.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct Place {
    pub p: u64,
    pub q: u64,
    pub split_in_l: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct LocalFactor {
    pub place: Place,
    /// v ∈ T₀: D ⊗ k_v is a division algebra.
    pub anisotropic: bool,
    /// the parahoric at v is Iwahori
    pub iwahori: bool,
    #[serde(serialize_with = "serialize_q")]
    pub e_prime: Q,
    #[serde(serialize_with = "serialize_q")]
    pub e_prime_prime: Q,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CommClassData {
    pub k: FieldDesc,
    pub l: FieldDesc,
    pub t: Vec<LocalFactor>,
    pub h_l3: u64,
}

impl CommClassData {
    pub fn new(k: FieldDesc, l: FieldDesc) -> Self {
        CommClassData { k, l, t: Vec::new(), h_l3: 1 }
    }

    /// k = Q(√3), ℓ = Q(ζ₁₂), T = ∅.
    pub fn zeta12() -> Self {
        Self::new(FieldDesc::k_sqrt3(), FieldDesc::l_zeta12())
    }

    pub fn n(&self) -> u32 {
        self.k.degree
    }

    pub fn t0_len(&self) -> usize {
        self.t.iter().filter(|f| f.anisotropic).count()
    }

    pub fn validate(&self) -> Result<(), CovolumeError> {
        if self.l.degree != 2 * self.k.degree {
            return Err(CovolumeError::Data("ℓ must be a quadratic extension of k".into()));
        }
        if self.h_l3 == 0 {
            return Err(CovolumeError::Data("h_{ℓ,3} must be positive".into()));
        }
        for f in &self.t {
            if f.e_prime < Q::one() || f.e_prime_prime < Q::one() {
                return Err(CovolumeError::Data(format!("local factor below 1 at p = {}", f.place.p)));
            }
            if f.anisotropic && !f.place.split_in_l {
                return Err(CovolumeError::Data(format!("anisotropic place over {} must split in ℓ", f.place.p)));
            }
            if f.anisotropic && f.place.q != 2 && f.e_prime_prime == Q::one() {
                return Err(CovolumeError::Data(format!(
                    "e'' = 1 at an anisotropic place forces q_v = 2 (p = {})",
                    f.place.p
                )));
            }
        }
        Ok(())
    }
}

/// L_{ℓ/k}(s) = ζ_ℓ(s) / ζ_k(s).
pub fn relative_l_bits(c: &CommClassData, s: i64, bits: u64) -> Result<RealInterval, ExactError> {
    let si = RealInterval::int(s);
    let zl = dedekind_zeta_bits(&c.l, &si, bits + 8)?;
    let zk = dedekind_zeta_bits(&c.k, &si, bits + 8)?;
    zl.div(&zk)
}

/// ζ_k(2) L_{ℓ/k}(3).
pub fn zeta_product(c: &CommClassData, eps: &Q) -> Result<RealInterval, CovolumeError> {
    Ok(refine(eps, |bits| {
        let zk2 = dedekind_zeta_bits(&c.k, &RealInterval::int(2), bits + 16)?;
        let l3 = relative_l_bits(c, 3, bits + 16)?;
        Ok((&zk2 * &l3).round(bits + 4))
    })?)
}

/// e(B²/Γ_P) = 9 Disc_ℓ^(5/2) ζ_k(2) L_{ℓ/k}(3) / ((16π⁵)ⁿ Disc_k) · Π e′(P_v).
pub fn prasad_euler_char(c: &CommClassData, eps: &Q) -> Result<RealInterval, CovolumeError> {
    c.validate()?;
    let prod_e: Q = c.t.iter().fold(Q::one(), |a, f| a * &f.e_prime);
    let n = c.n();
    let dk = c.k.disc;
    let dl = c.l.disc;
    let run = |bits: u64| -> Result<RealInterval, ExactError> {
        let wp = bits + 32;
        let zk2 = dedekind_zeta_bits(&c.k, &RealInterval::int(2), wp)?;
        let l3 = relative_l_bits(c, 3, wp)?;
        let dli = RealInterval::int(dl as i64);
        let dl52 = &dli.powi(2)? * &dli.sqrt(wp)?;
        let num = (&(&dl52 * &zk2) * &l3).scale(&(qi(9) * &prod_e));
        let den = sixteen_pi5(n, wp).scale(&qi(dk as i64));
        Ok(num.div(&den)?.round(bits + 4))
    };
    Ok(refine(eps, run)?)
}

/// [Γ̃ : Γ_P] ≤ 3^(1+#T₀) · h_{ℓ,3} · Π_{v ∈ T∖T₀} #Ξ_v, with #Ξ_v = 3 exactly
/// when v splits in ℓ and P_v is Iwahori.
pub fn index_bound(c: &CommClassData) -> u64 {
    let t0 = c.t0_len() as u32;
    let xi: u64 = c
        .t
        .iter()
        .filter(|f| !f.anisotropic)
        .map(|f| if f.place.split_in_l && f.iwahori { 3 } else { 1 })
        .product();
    3u64.pow(1 + t0) * c.h_l3 * xi
}

/// s(s−1)Γ(s)ⁿ (Disc_ℓ/(2π)^(2n))^(s/2) ζ_ℓ(s) / (0.00136 e^(0.57n)).
pub fn brauer_siegel_h3_bound(l: &FieldDesc, s: &Q, eps: &Q) -> Result<RealInterval, CovolumeError> {
    if s <= &Q::one() {
        return Err(CovolumeError::Range("Brauer–Siegel bound needs s > 1".into()));
    }
    if s > &qi(4) {
        return Err(CovolumeError::Range("s above the supported gamma range".into()));
    }
    if !l.is_totally_complex() || !l.degree.is_multiple_of(2) {
        return Err(CovolumeError::Data(format!("{} is not totally complex", l.label)));
    }
    let n = (l.degree / 2) as i64;
    Ok(refine(eps, |bits| {
        let wp = bits + 32;
        let si = RealInterval::point(s.clone());
        let g = gamma_bits(&si, wp)?.powi(n)?;
        let pre = s * (s - Q::one());
        let two_pi = pi(wp).scale(&qi(2));
        let ratio = RealInterval::int(l.disc as i64).div(&two_pi.powi(2 * n)?)?;
        let pw = ratio.pow_q(&(s / qi(2)), wp)?;
        let z = dedekind_zeta_bits(l, &si, wp)?;
        let num = (&(&g * &pw) * &z).scale(&pre);
        let den = exp_point(&(dec("0.57") * qi(n)), wp).scale(&dec("0.00136"));
        Ok(num.div(&den)?.round(bits + 4))
    })?)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub enum Decomposition {
    Split,
    Inert,
    Ramified,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct PlaceReport {
    pub p: u64,
    pub in_k: Decomposition,
    pub residue_size: u64,
    pub in_l: Decomposition,
    /// e″(P_v) > 1 would hold if v were anisotropic
    pub e_double_prime_exceeds_one: bool,
}

/// Behaviour of the rational prime p in k = Q(√3) and of the places above it in ℓ = k(i).
pub fn place_report(p: u64) -> PlaceReport {
    let pi = p as i64;
    let in_k = match kron(12, pi) {
        0 => Decomposition::Ramified,
        1 => Decomposition::Split,
        _ => Decomposition::Inert,
    };
    let q = if in_k == Decomposition::Inert { p * p } else { p };
    // ℓ = k(ω) = k(i); use x² + x + 1 over 2-adic places, x² + 1 elsewhere
    let split = if p == 2 {
        (0..q).any(|x| (x * x + x + 1) % 2 == 0)
    } else if q == p {
        (0..p).any(|x| (x * x + 1) % p == 0)
    } else {
        // every element of F_p is a square in F_{p²}
        true
    };
    PlaceReport {
        p,
        in_k,
        residue_size: q,
        in_l: if split { Decomposition::Split } else { Decomposition::Inert },
        e_double_prime_exceeds_one: q != 2,
    }
}

pub fn e_double_prime_is_one(residue_size: u64) -> bool {
    residue_size == 2
}

#[derive(Debug, Clone, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct DivisionAlgebraRecord {
    pub v2: PlaceReport,
    /// ω = (−1 + αβ)/2 satisfies ω² + ω + 1 = 0 in ℓ
    pub omega_in_l: bool,
    pub samples: Vec<PlaceReport>,
    /// every place that splits in ℓ has q_v ≥ 3
    pub split_places_have_q_at_least_3: bool,
    pub d_equals_l: bool,
}

/// Only the place over 2 has residue field F₂, and it is inert in ℓ, so no
/// anisotropic place can have e″ = 1.
pub fn division_algebra_check() -> DivisionAlgebraRecord {
    let v2 = place_report(2);
    let ab = &CycloElem::alpha() * &CycloElem::beta();
    let omega = (&ab - &CycloElem::one()).scale(&crate::exactmath::q(1, 2));
    let omega_in_l = (&(&(&omega * &omega) + &omega) + &CycloElem::one()).is_zero();
    let samples: Vec<PlaceReport> = [2u64, 3, 5, 7, 11, 13, 23, 37].iter().map(|&p| place_report(p)).collect();
    // places with q_v = 2 lie over 2; over odd p, q_v ≥ p ≥ 3
    let ok = v2.in_k == Decomposition::Ramified && v2.residue_size == 2 && v2.in_l == Decomposition::Inert;
    let split_ok = ok && samples.iter().filter(|r| r.in_l == Decomposition::Split).all(|r| r.residue_size >= 3);
    DivisionAlgebraRecord { v2, omega_in_l, samples, split_places_have_q_at_least_3: split_ok, d_equals_l: split_ok && omega_in_l }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn index_bound_cases() {
        let mut c = CommClassData::zeta12();
        assert_eq!(index_bound(&c), 3);
        c.h_l3 = 3;
        assert_eq!(index_bound(&c), 9);
        c.h_l3 = 1;
        c.t.push(LocalFactor {
            place: Place { p: 13, q: 13, split_in_l: true },
            anisotropic: true,
            iwahori: false,
            e_prime: qi(2),
            e_prime_prime: qi(2),
        });
        assert_eq!(index_bound(&c), 9);
    }

    #[test]
    fn places() {
        let r = place_report(2);
        assert_eq!((r.in_k, r.residue_size, r.in_l), (Decomposition::Ramified, 2, Decomposition::Inert));
        let r = place_report(13);
        assert_eq!((r.in_k, r.in_l), (Decomposition::Split, Decomposition::Split));
        let r = place_report(3);
        assert_eq!((r.in_k, r.in_l), (Decomposition::Ramified, Decomposition::Inert));
        let r = place_report(5);
        assert_eq!((r.in_k, r.residue_size, r.in_l), (Decomposition::Inert, 25, Decomposition::Split));
        let r = place_report(11);
        assert_eq!((r.in_k, r.in_l), (Decomposition::Split, Decomposition::Inert));
        assert!(division_algebra_check().d_equals_l);
    }
}
