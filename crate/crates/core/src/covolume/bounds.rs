use num_traits::One;

use crate::exactmath::interval::{exp_point, pi, refine};
use crate::exactmath::special::{gamma_bits, riemann_zeta_bits};
use crate::exactmath::{dec, q, qi, RealInterval, Q};

use super::CovolumeError;

/// The chosen δ for each degree n of k.
pub const TABLE1_DELTAS: [(u32, &str); 5] =
    [(1, "0.00145"), (2, "0.395731"), (3, "0.523748"), (4, "0.589587"), (5, "0.629827")];

/// Upper bound for Disc_ℓ^(1/2n) obtained from the Brauer–Siegel and
/// Slavutskii estimates with parameter s = 1 + δ.
pub fn disc_upper_bound(n: u32, delta: &Q, eps: &Q) -> Result<RealInterval, CovolumeError> {
    if !(1..=5).contains(&n) {
        return Err(CovolumeError::Range(format!("degree n = {n} outside 1..=5")));
    }
    if delta <= &Q::from_integer(0.into()) || delta > &qi(2) {
        return Err(CovolumeError::Range("delta must lie in (0, 2]".into()));
    }
    Ok(refine(eps, |bits| disc_upper_bound_bits(n, delta, bits))?)
}

fn disc_upper_bound_bits(n: u32, delta: &Q, bits: u64) -> Result<RealInterval, crate::exactmath::ExactError> {
    let wp = bits + 32;
    let s = RealInterval::point(Q::one() + delta);
    let g = gamma_bits(&s, wp)?;
    let z = riemann_zeta_bits(&s, wp)?;
    let p = pi(wp);
    let p_pow = p.pow_q(&(qi(4) - delta), wp)?;
    let e = exp_point(&dec("-0.57"), wp);
    let inner = &(&(&g * &z) * &p_pow) * &e;
    let three_minus = qi(3) - delta;
    let a = inner.pow_q(&three_minus.recip(), wp)?;
    let z2n = riemann_zeta_bits(&RealInterval::int(2 * n as i64), wp)?;
    let denom = z2n.sqrt(wp)?.scale(&dec("1.17504"));
    let num = RealInterval::point(delta * (delta + Q::one()));
    let ratio = num.div(&denom)?;
    let b = ratio.pow_q(&(three_minus * qi(n as i64)).recip(), wp)?;
    Ok((&a * &b).scale(&qi(2)).round(bits + 4))
}

/// (16 π⁵)^m
pub(crate) fn sixteen_pi5(m: u32, bits: u64) -> RealInterval {
    let p = pi(bits + 16);
    let p5 = p.powi(5).expect("positive").scale(&qi(16));
    p5.powi(m as i64).expect("positive").round(bits + 8)
}

/// Cap on Disc_ℓ for k = Q: (16π⁵ h / (864 ζ(2)^(1/2)))^(2/5).
pub fn rational_cap(h3: u64, eps: &Q) -> Result<RealInterval, CovolumeError> {
    Ok(refine(eps, |bits| {
        let wp = bits + 24;
        let z = riemann_zeta_bits(&RealInterval::int(2), wp)?.sqrt(wp)?;
        let num = sixteen_pi5(1, wp).scale(&q(h3 as i64, 864));
        num.div(&z)?.pow_q(&q(2, 5), wp).map(|r| r.round(bits + 4))
    })?)
}

/// Cap on Disc_ℓ^(1/2n) from Disc_ℓ^(1/2)/Disc_k ≥ 1 and ζ_k(2)L(3) > ζ(2n)^(1/2):
/// (16π⁵)^(1/4) (h/864)^(1/4n) / ζ(2n)^(1/8n).
pub fn root_disc_cap(n: u32, h3: u64, eps: &Q) -> Result<RealInterval, CovolumeError> {
    if n < 2 {
        return Err(CovolumeError::Range("root_disc_cap needs n >= 2".into()));
    }
    Ok(refine(eps, |bits| {
        let wp = bits + 24;
        let a = sixteen_pi5(1, wp).pow_q(&q(1, 4), wp)?;
        let b = RealInterval::point(q(h3 as i64, 864)).pow_q(&q(1, 4 * n as i64), wp)?;
        let z = riemann_zeta_bits(&RealInterval::int(2 * n as i64), wp)?.pow_q(&q(1, 8 * n as i64), wp)?;
        Ok((&a * &b).div(&z)?.round(bits + 4))
    })?)
}

/// Disc_ℓ^(5/2) ζ(2n)^(1/2) / ((16π⁵)ⁿ Disc_k h), the lower bound used to
/// eliminate individual (k, ℓ) pairs.
pub fn direct_lower_bound(n: u32, disc_k: u64, disc_l: u64, h3: u64, eps: &Q) -> Result<RealInterval, CovolumeError> {
    Ok(refine(eps, |bits| direct_lower_bound_bits(n, disc_k, disc_l, h3, bits))?)
}

pub(crate) fn direct_lower_bound_bits(
    n: u32,
    disc_k: u64,
    disc_l: u64,
    h3: u64,
    bits: u64,
) -> Result<RealInterval, crate::exactmath::ExactError> {
    let wp = bits + 32;
    let dl = RealInterval::int(disc_l as i64);
    let dl52 = &dl.powi(2)? * &dl.sqrt(wp)?;
    let z = riemann_zeta_bits(&RealInterval::int(2 * n as i64), wp)?.sqrt(wp)?;
    let denom = sixteen_pi5(n, wp).scale(&qi((disc_k * h3) as i64));
    Ok((&dl52 * &z).div(&denom)?.round(bits + 4))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn table1_row2() {
        let b = disc_upper_bound(2, &dec("0.395731"), &dec("1e-7")).unwrap();
        assert!((b.mid_f64() - 9.960439).abs() < 2e-6, "{b:?}");
    }

    #[test]
    fn caps() {
        let c = rational_cap(3, &dec("1e-8")).unwrap();
        assert!((c.mid_f64() - 2.8116486).abs() < 1e-6, "{c:?}");
        let c = root_disc_cap(2, 3, &dec("1e-8")).unwrap();
        assert!((c.mid_f64() - 4.1010585).abs() < 1e-6, "{c:?}");
    }

    #[test]
    fn rejects_bad_delta() {
        assert!(disc_upper_bound(2, &qi(3), &dec("1e-6")).is_err());
        assert!(disc_upper_bound(6, &dec("0.5"), &dec("1e-6")).is_err());
    }
}
