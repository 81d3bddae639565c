use std::sync::OnceLock;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::field::{CharFactor, FieldDesc};
use super::interval::{ln_point, pi, q, qi, refine, RealInterval, Q};
use super::kronecker::{is_fundamental_discriminant, kron};
use super::ExactError;

const MAX_BERNOULLI: usize = 240;

/// B_0 .. B_MAX_BERNOULLI, with B_1 = -1/2.
fn bernoulli() -> &'static [Q] {
    static B: OnceLock<Vec<Q>> = OnceLock::new();
    B.get_or_init(|| {
        let n = MAX_BERNOULLI;
        let mut b: Vec<Q> = Vec::with_capacity(n + 1);
        // sum_{j<=m} C(m+1, j) B_j = 0, with `row` holding C(m+1, .)
        let mut row: Vec<BigInt> = vec![BigInt::one(), BigInt::one()];
        b.push(Q::one());
        for m in 1..=n {
            let mut next = vec![BigInt::one(); m + 2];
            for j in 1..=m {
                next[j] = &row[j - 1] + &row[j];
            }
            row = next;
            if m > 1 && m % 2 == 1 {
                b.push(Q::zero());
                continue;
            }
            let mut s = Q::zero();
            for (j, bj) in b.iter().enumerate() {
                if !bj.is_zero() {
                    s += Q::from_integer(row[j].clone()) * bj;
                }
            }
            b.push(-s / Q::from_integer(row[m].clone()));
        }
        b
    })
}

pub fn bernoulli_number(n: usize) -> Q {
    bernoulli()[n].clone()
}

fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |a, k| a * BigInt::from(k))
}

/// s (s+1) ... (s+m-1)
fn rising(s: &RealInterval, m: u64) -> RealInterval {
    let mut r = RealInterval::int(1);
    for i in 0..m {
        r = &r * &s.add_q(&qi(i as i64));
    }
    r
}

fn as_interval(s: &Q) -> RealInterval {
    RealInterval::point(s.clone())
}

/// x^(-s) for rational x > 0 and an interval exponent.
fn neg_power(x: &Q, s: &RealInterval, bits: u64) -> RealInterval {
    let l = ln_point(x, bits + 16);
    (-&(&l * s)).round(bits + 16).exp(bits + 8)
}

/// Hurwitz zeta by Euler-Maclaurin with the first omitted correction as remainder.
pub fn hurwitz_zeta_bits(s: &RealInterval, a: &Q, bits: u64) -> Result<RealInterval, ExactError> {
    if s.lo() <= &Q::one() {
        return Err(ExactError::Domain("zeta needs s > 1".into()));
    }
    if !a.is_positive() || a > &Q::one() {
        return Err(ExactError::Domain("hurwitz parameter must lie in (0, 1]".into()));
    }
    let s_hi = num_traits::ToPrimitive::to_f64(s.hi()).unwrap_or(4.0).ceil() as u64;
    let mut k_terms = (bits / 5 + 3) as usize;
    if 2 * k_terms + 2 > MAX_BERNOULLI {
        k_terms = MAX_BERNOULLI / 2 - 1;
    }
    let n = (k_terms as u64 + s_hi + 4).max(8);
    let wp = bits + 24;
    let mut sum = RealInterval::int(0);
    for i in 0..n {
        let x = a + qi(i as i64);
        sum = (&sum + &neg_power(&x, s, wp)).round(wp);
    }
    let x = a + qi(n as i64);
    let xi = as_interval(&x);
    let p = neg_power(&x, s, wp);
    let s_minus_one = s.add_q(&-Q::one());
    let tail = (&(&xi * &p) * &s_minus_one.recip()?).round(wp);
    sum = &sum + &tail;
    sum = &sum + &p.scale(&q(1, 2));
    let b = bernoulli();
    let x_inv = x.recip();
    let x_inv2 = &x_inv * &x_inv;
    let mut xpow = x_inv.clone(); // x^-(2k-1)
    let mut last = RealInterval::int(0);
    for k in 1..=k_terms {
        let coeff = &b[2 * k] / Q::from_integer(factorial(2 * k as u64));
        let poch = rising(s, 2 * k as u64 - 1);
        let t = (&poch * &p).scale(&(&coeff * &xpow)).round(wp);
        if k == k_terms {
            last = t;
        } else {
            sum = &sum + &t;
        }
        xpow = &xpow * &x_inv2;
    }
    Ok(sum.widen(&last.mag()).round(bits + 4))
}

pub fn hurwitz_zeta(s: &Q, a: &Q, eps: &Q) -> Result<RealInterval, ExactError> {
    let si = as_interval(s);
    refine(eps, |bits| hurwitz_zeta_bits(&si, a, bits))
}

pub fn riemann_zeta_bits(s: &RealInterval, bits: u64) -> Result<RealInterval, ExactError> {
    hurwitz_zeta_bits(s, &Q::one(), bits)
}

/// zeta(s) for s > 1 enclosed in an interval of width at most eps.
pub fn riemann_zeta(s: &Q, eps: &Q) -> Result<RealInterval, ExactError> {
    if s <= &Q::one() {
        return Err(ExactError::Domain("zeta needs s > 1".into()));
    }
    let si = as_interval(s);
    refine(eps, |bits| riemann_zeta_bits(&si, bits))
}

/// L(s, chi_D) = |D|^-s sum_a chi(a) zeta(s, a/|D|).
pub fn dirichlet_l_bits(d: i64, s: &RealInterval, bits: u64) -> Result<RealInterval, ExactError> {
    if !is_fundamental_discriminant(d) {
        return Err(ExactError::NotFundamental(d));
    }
    if d == 1 {
        return riemann_zeta_bits(s, bits);
    }
    let m = d.abs();
    let wp = bits + 8 + 64 - (m as u64).leading_zeros() as u64;
    let mut sum = RealInterval::int(0);
    for a in 1..=m {
        let c = kron(d, a);
        if c == 0 {
            continue;
        }
        let h = hurwitz_zeta_bits(s, &q(a, m), wp)?;
        sum = if c > 0 { &sum + &h } else { &sum - &h };
    }
    Ok((&sum * &neg_power(&qi(m), s, wp)).round(bits + 4))
}

pub fn dirichlet_l(d: i64, s: &Q, eps: &Q) -> Result<RealInterval, ExactError> {
    if !is_fundamental_discriminant(d) {
        return Err(ExactError::NotFundamental(d));
    }
    if s <= &Q::one() {
        return Err(ExactError::Domain("L-function needs s > 1".into()));
    }
    let si = as_interval(s);
    refine(eps, |bits| dirichlet_l_bits(d, &si, bits))
}

/// |L(s, chi)|^2 for a character with values in {0, ±1, ±i} given as a table mod q.
pub fn complex_pair_bits(
    modulus: i64,
    values: &[(i8, i8)],
    s: &RealInterval,
    bits: u64,
) -> Result<RealInterval, ExactError> {
    let wp = bits + 16;
    let mut re = RealInterval::int(0);
    let mut im = RealInterval::int(0);
    for a in 1..modulus {
        let (cr, ci) = values[a as usize];
        if cr == 0 && ci == 0 {
            continue;
        }
        let h = hurwitz_zeta_bits(s, &q(a, modulus), wp)?;
        re = &re + &h.scale(&qi(cr as i64));
        im = &im + &h.scale(&qi(ci as i64));
    }
    let f = neg_power(&qi(modulus), s, wp);
    let re = &re * &f;
    let im = &im * &f;
    Ok((&re.sqr() + &im.sqr()).round(bits + 4))
}

fn factor_bits(c: &CharFactor, s: &RealInterval, bits: u64) -> Result<RealInterval, ExactError> {
    match c {
        CharFactor::Kronecker(d) => dirichlet_l_bits(*d, s, bits),
        CharFactor::ComplexPair { modulus, values } => complex_pair_bits(*modulus, values, s, bits),
    }
}

pub fn dedekind_zeta_bits(f: &FieldDesc, s: &RealInterval, bits: u64) -> Result<RealInterval, ExactError> {
    let factors = f
        .splitting
        .as_ref()
        .ok_or_else(|| ExactError::Unsupported(format!("no splitting data for {}", f.label)))?;
    let wp = bits + 4 * factors.len() as u64 + 8;
    let mut r = RealInterval::int(1);
    for c in factors {
        r = (&r * &factor_bits(c, s, wp)?).round(wp);
    }
    Ok(r.round(bits + 2))
}

/// Dedekind zeta as a product of Dirichlet L-functions.
pub fn dedekind_zeta(f: &FieldDesc, s: &Q, eps: &Q) -> Result<RealInterval, ExactError> {
    if s <= &Q::one() {
        return Err(ExactError::Domain("zeta needs s > 1".into()));
    }
    let si = as_interval(s);
    refine(eps, |bits| dedekind_zeta_bits(f, &si, bits))
}

/// Gamma(s) for an interval inside (0, 4], via upward shift and Stirling's series.
pub fn gamma_bits(s: &RealInterval, bits: u64) -> Result<RealInterval, ExactError> {
    if !s.lo().is_positive() || s.hi() > &qi(4) {
        return Err(ExactError::Domain("gamma is supported on (0, 4]".into()));
    }
    let wp = bits + 32;
    let target = (bits / 2 + 12) as i64;
    let shift = target.max(1) as u64;
    let z = s.add_q(&qi(shift as i64));
    let ln_z = z.ln(wp)?;
    let two_pi = pi(wp).scale(&qi(2));
    let half_ln_2pi = two_pi.ln(wp)?.scale(&q(1, 2));
    let mut lg = &(&z.add_q(&q(-1, 2)) * &ln_z) - &z;
    lg = (&lg + &half_ln_2pi).round(wp);
    let b = bernoulli();
    let k_terms = ((bits / 3 + 4) as usize).min(MAX_BERNOULLI / 2 - 1);
    let z_inv = z.recip()?;
    let z_inv2 = z_inv.sqr();
    let mut zp = z_inv.clone();
    let mut last = RealInterval::int(0);
    for k in 1..=k_terms {
        let c = &b[2 * k] / qi((2 * k * (2 * k - 1)) as i64);
        let t = zp.scale(&c).round(wp);
        if k == k_terms {
            last = t;
        } else {
            lg = &lg + &t;
        }
        zp = &zp * &z_inv2;
    }
    let lg = lg.widen(&last.mag());
    let g = lg.exp(wp);
    let denom = rising(s, shift);
    Ok(g.div(&denom)?.round(bits + 4))
}

pub fn gamma_fn(s: &Q, eps: &Q) -> Result<RealInterval, ExactError> {
    let si = as_interval(s);
    if !s.is_positive() || s > &qi(4) {
        return Err(ExactError::Domain("gamma is supported on (0, 4]".into()));
    }
    if s.is_one() || s == &qi(2) {
        return Ok(RealInterval::int(1));
    }
    refine(eps, |bits| gamma_bits(&si, bits))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::interval::dec;

    #[test]
    fn bernoulli_values() {
        assert_eq!(bernoulli_number(2), q(1, 6));
        assert_eq!(bernoulli_number(4), q(-1, 30));
        assert_eq!(bernoulli_number(12), q(-691, 2730));
        assert_eq!(bernoulli_number(7), Q::zero());
    }

    #[test]
    fn zeta_two() {
        let z = riemann_zeta(&qi(2), &dec("1e-20")).unwrap();
        assert!(z.gt(&dec("1.6449340668482264364")) && z.lt(&dec("1.6449340668482264365")));
    }

    #[test]
    fn gamma_half() {
        let g = gamma_fn(&q(1, 2), &dec("1e-15")).unwrap();
        assert!(g.gt(&dec("1.7724538509055160")) && g.lt(&dec("1.7724538509055161")));
    }

    #[test]
    fn l_minus_three() {
        // L(2, chi_-3) = 0.78130241289648629686...
        let l = dirichlet_l(-3, &qi(2), &dec("1e-15")).unwrap();
        assert!(l.gt(&dec("0.781302412896486")) && l.lt(&dec("0.781302412896487")));
    }
}
