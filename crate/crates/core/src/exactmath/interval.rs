use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::ExactError;

pub type Q = BigRational;

pub fn q(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

pub fn qi(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

/// Exact value of a decimal literal such as `"1.395731"` or `"-0.57"`.
pub fn dec(s: &str) -> Q {
    parse_decimal(s).unwrap_or_else(|| panic!("bad decimal literal {s:?}"))
}

pub fn parse_decimal(s: &str) -> Option<Q> {
    let s = s.trim();
    if let Some((mant, exp)) = s.split_once(['e', 'E']) {
        let m = parse_decimal(mant)?;
        let e: i32 = exp.parse().ok()?;
        let p = Q::from_integer(BigInt::from(10u32).pow(e.unsigned_abs()));
        return Some(if e >= 0 { m * p } else { m / p });
    }
    let (neg, body) = match s.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, s.strip_prefix('+').unwrap_or(s)),
    };
    if body.is_empty() {
        return None;
    }
    let (int_part, frac_part) = match body.split_once('.') {
        Some((a, b)) => (a, b),
        None => (body, ""),
    };
    if !int_part.chars().chain(frac_part.chars()).all(|c| c.is_ascii_digit()) {
        return None;
    }
    let digits = format!("{int_part}{frac_part}");
    let n: BigInt = if digits.is_empty() { BigInt::zero() } else { digits.parse().ok()? };
    let d = BigInt::from(10u32).pow(frac_part.len() as u32);
    let v = Q::new(n, d);
    Some(if neg { -v } else { v })
}

/// Parses `a/b`, a decimal, or an integer.
pub fn parse_rational(s: &str) -> Option<Q> {
    let s = s.trim();
    if let Some((a, b)) = s.split_once('/') {
        let n: BigInt = a.trim().parse().ok()?;
        let d: BigInt = b.trim().parse().ok()?;
        if d.is_zero() {
            return None;
        }
        return Some(Q::new(n, d));
    }
    parse_decimal(s)
}

fn pow2(bits: u64) -> BigInt {
    BigInt::one() << bits
}

/// Largest multiple of 2^-bits that is <= x.
pub fn floor_dyadic(x: &Q, bits: u64) -> Q {
    if x.denom().is_one() {
        return x.clone();
    }
    let s = pow2(bits);
    let n = (x.numer() * &s).div_floor(x.denom());
    Q::new(n, s)
}

/// Smallest multiple of 2^-bits that is >= x.
pub fn ceil_dyadic(x: &Q, bits: u64) -> Q {
    if x.denom().is_one() {
        return x.clone();
    }
    let s = pow2(bits);
    let n = -((-(x.numer() * &s)).div_floor(x.denom()));
    Q::new(n, s)
}

/// Number of bits b with 2^-b <= eps.
pub fn bits_for(eps: &Q) -> u64 {
    assert!(eps.is_positive(), "eps must be positive");
    let nb = eps.numer().bits() as i64;
    let db = eps.denom().bits() as i64;
    (db - nb + 2).max(1) as u64
}

/// A closed interval [lo, hi] with exact rational endpoints.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RealInterval {
    lo: Q,
    hi: Q,
}

impl fmt::Debug for RealInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{:.12e}, {:.12e}]", self.lo_f64(), self.hi_f64())
    }
}

/// Serializes a rational as "p/q" (or "p" for integers).
pub fn serialize_q<S: serde::Serializer>(x: &Q, ser: S) -> Result<S::Ok, S::Error> {
    ser.serialize_str(&x.to_string())
}

impl serde::Serialize for RealInterval {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = ser.serialize_struct("RealInterval", 2)?;
        st.serialize_field("lo", &format!("{:.15e}", self.lo_f64()))?;
        st.serialize_field("hi", &format!("{:.15e}", self.hi_f64()))?;
        st.end()
    }
}

impl fmt::Display for RealInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let digits = f.precision().unwrap_or(10);
        write!(f, "[{}, {}]", fmt_q(&self.lo, digits), fmt_q(&self.hi, digits))
    }
}

/// Decimal rendering of a rational with a fixed number of significant digits.
pub fn fmt_q(x: &Q, digits: usize) -> String {
    let v = x.to_f64().unwrap_or(f64::NAN);
    if v != 0.0 && (v.abs() < 1e-3 || v.abs() >= 1e7) {
        format!("{:.*e}", digits.saturating_sub(1), v)
    } else {
        let int_digits = if v.abs() < 1.0 { 1 } else { (v.abs().log10().floor() as usize) + 1 };
        let frac = digits.saturating_sub(int_digits).max(1);
        let leading_zeros = if v != 0.0 && v.abs() < 1.0 { (-v.abs().log10().floor()) as usize - 1 } else { 0 };
        format!("{:.*}", frac + leading_zeros, v)
    }
}

impl RealInterval {
    pub fn new(lo: Q, hi: Q) -> Self {
        assert!(lo <= hi, "interval endpoints out of order");
        RealInterval { lo, hi }
    }

    pub fn try_new(lo: Q, hi: Q) -> Result<Self, ExactError> {
        if lo <= hi {
            Ok(RealInterval { lo, hi })
        } else {
            Err(ExactError::Domain("interval endpoints out of order".into()))
        }
    }

    pub fn point(x: Q) -> Self {
        RealInterval { lo: x.clone(), hi: x }
    }

    pub fn int(n: i64) -> Self {
        Self::point(qi(n))
    }

    pub fn frac(n: i64, d: i64) -> Self {
        Self::point(q(n, d))
    }

    pub fn dec(s: &str) -> Self {
        Self::point(dec(s))
    }

    pub fn lo(&self) -> &Q {
        &self.lo
    }

    pub fn hi(&self) -> &Q {
        &self.hi
    }

    pub fn lo_f64(&self) -> f64 {
        self.lo.to_f64().unwrap_or(f64::NAN)
    }

    pub fn hi_f64(&self) -> f64 {
        self.hi.to_f64().unwrap_or(f64::NAN)
    }

    pub fn mid(&self) -> Q {
        (&self.lo + &self.hi) / qi(2)
    }

    pub fn mid_f64(&self) -> f64 {
        self.mid().to_f64().unwrap_or(f64::NAN)
    }

    pub fn width(&self) -> Q {
        &self.hi - &self.lo
    }

    pub fn is_point(&self) -> bool {
        self.lo == self.hi
    }

    pub fn contains(&self, x: &Q) -> bool {
        &self.lo <= x && x <= &self.hi
    }

    pub fn contains_f64(&self, x: f64) -> bool {
        match Q::from_float(x) {
            Some(v) => self.contains(&v),
            None => false,
        }
    }

    pub fn overlaps(&self, other: &RealInterval) -> bool {
        self.lo <= other.hi && other.lo <= self.hi
    }

    pub fn subset_of(&self, other: &RealInterval) -> bool {
        other.lo <= self.lo && self.hi <= other.hi
    }

    pub fn hull(&self, other: &RealInterval) -> RealInterval {
        RealInterval {
            lo: self.lo.clone().min(other.lo.clone()),
            hi: self.hi.clone().max(other.hi.clone()),
        }
    }

    pub fn intersect(&self, other: &RealInterval) -> Option<RealInterval> {
        let lo = self.lo.clone().max(other.lo.clone());
        let hi = self.hi.clone().min(other.hi.clone());
        (lo <= hi).then_some(RealInterval { lo, hi })
    }

    pub fn is_positive(&self) -> bool {
        self.lo.is_positive()
    }

    pub fn gt(&self, x: &Q) -> bool {
        &self.lo > x
    }

    pub fn lt(&self, x: &Q) -> bool {
        &self.hi < x
    }

    /// Widens each endpoint outward onto the grid 2^-bits.
    pub fn round(&self, bits: u64) -> RealInterval {
        RealInterval { lo: floor_dyadic(&self.lo, bits), hi: ceil_dyadic(&self.hi, bits) }
    }

    pub fn widen(&self, r: &Q) -> RealInterval {
        let r = r.abs();
        RealInterval { lo: &self.lo - &r, hi: &self.hi + &r }
    }

    pub fn abs(&self) -> RealInterval {
        if self.lo.is_negative() && self.hi.is_positive() {
            RealInterval { lo: Q::zero(), hi: self.hi.clone().max(-self.lo.clone()) }
        } else if self.hi.is_negative() || self.hi.is_zero() {
            -self
        } else {
            self.clone()
        }
    }

    pub fn mag(&self) -> Q {
        self.lo.abs().max(self.hi.abs())
    }

    pub fn recip(&self) -> Result<RealInterval, ExactError> {
        if self.contains(&Q::zero()) {
            return Err(ExactError::Domain("reciprocal of an interval containing 0".into()));
        }
        Ok(RealInterval { lo: self.hi.recip(), hi: self.lo.recip() })
    }

    pub fn div(&self, other: &RealInterval) -> Result<RealInterval, ExactError> {
        Ok(self * &other.recip()?)
    }

    pub fn scale(&self, c: &Q) -> RealInterval {
        let a = &self.lo * c;
        let b = &self.hi * c;
        if a <= b {
            RealInterval { lo: a, hi: b }
        } else {
            RealInterval { lo: b, hi: a }
        }
    }

    pub fn add_q(&self, c: &Q) -> RealInterval {
        RealInterval { lo: &self.lo + c, hi: &self.hi + c }
    }

    pub fn sqr(&self) -> RealInterval {
        let a = self.abs();
        RealInterval { lo: &a.lo * &a.lo, hi: &a.hi * &a.hi }
    }

    pub fn powi(&self, n: i64) -> Result<RealInterval, ExactError> {
        if n < 0 {
            return self.recip()?.powi(-n);
        }
        let mut acc = RealInterval::int(1);
        let mut base = self.clone();
        let mut e = n as u64;
        // odd powers are monotone, even powers go through |x|
        if e.is_multiple_of(2) {
            base = base.abs();
        }
        let nonneg = !base.lo.is_negative();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = if nonneg { base.sqr() } else { &base * &base };
            }
        }
        if !nonneg && n % 2 == 1 {
            // tighten: odd power of a sign-changing interval is monotone
            let lo = self.lo.clone();
            let hi = self.hi.clone();
            let p = |x: &Q| -> Q {
                let mut r = Q::one();
                for _ in 0..n {
                    r = &r * x;
                }
                r
            };
            return Ok(RealInterval { lo: p(&lo), hi: p(&hi) });
        }
        Ok(acc)
    }

    pub fn sqrt(&self, bits: u64) -> Result<RealInterval, ExactError> {
        if self.lo.is_negative() {
            return Err(ExactError::Domain("sqrt of a negative interval".into()));
        }
        Ok(RealInterval { lo: sqrt_bound(&self.lo, bits, false), hi: sqrt_bound(&self.hi, bits, true) })
    }

    pub fn exp(&self, bits: u64) -> RealInterval {
        let lo = exp_point(&self.lo, bits).lo;
        if self.is_point() {
            return exp_point(&self.lo, bits);
        }
        let hi = exp_point(&self.hi, bits).hi;
        RealInterval { lo, hi }
    }

    pub fn ln(&self, bits: u64) -> Result<RealInterval, ExactError> {
        if !self.lo.is_positive() {
            return Err(ExactError::Domain("log of a nonpositive interval".into()));
        }
        let lo = ln_point(&self.lo, bits).lo;
        let hi = ln_point(&self.hi, bits).hi;
        Ok(RealInterval { lo, hi })
    }

    /// x^y for x > 0.
    pub fn pow(&self, y: &RealInterval, bits: u64) -> Result<RealInterval, ExactError> {
        let l = self.ln(bits + 8)?;
        Ok((&l * y).round(bits + 8).exp(bits))
    }

    pub fn pow_q(&self, y: &Q, bits: u64) -> Result<RealInterval, ExactError> {
        if y.denom().is_one() {
            if let Some(n) = y.numer().to_i64() {
                return self.powi(n);
            }
        }
        self.pow(&RealInterval::point(y.clone()), bits)
    }

    pub fn max(&self, other: &RealInterval) -> RealInterval {
        RealInterval { lo: self.lo.clone().max(other.lo.clone()), hi: self.hi.clone().max(other.hi.clone()) }
    }
}

impl Add for &RealInterval {
    type Output = RealInterval;
    fn add(self, o: &RealInterval) -> RealInterval {
        RealInterval { lo: &self.lo + &o.lo, hi: &self.hi + &o.hi }
    }
}

impl Sub for &RealInterval {
    type Output = RealInterval;
    fn sub(self, o: &RealInterval) -> RealInterval {
        RealInterval { lo: &self.lo - &o.hi, hi: &self.hi - &o.lo }
    }
}

impl Mul for &RealInterval {
    type Output = RealInterval;
    fn mul(self, o: &RealInterval) -> RealInterval {
        if !self.lo.is_negative() && !o.lo.is_negative() {
            return RealInterval { lo: &self.lo * &o.lo, hi: &self.hi * &o.hi };
        }
        let c = [&self.lo * &o.lo, &self.lo * &o.hi, &self.hi * &o.lo, &self.hi * &o.hi];
        let lo = c.iter().min().unwrap().clone();
        let hi = c.iter().max().unwrap().clone();
        RealInterval { lo, hi }
    }
}

impl Neg for &RealInterval {
    type Output = RealInterval;
    fn neg(self) -> RealInterval {
        RealInterval { lo: -self.hi.clone(), hi: -self.lo.clone() }
    }
}

impl Add for RealInterval {
    type Output = RealInterval;
    fn add(self, o: RealInterval) -> RealInterval {
        &self + &o
    }
}

impl Sub for RealInterval {
    type Output = RealInterval;
    fn sub(self, o: RealInterval) -> RealInterval {
        &self - &o
    }
}

impl Mul for RealInterval {
    type Output = RealInterval;
    fn mul(self, o: RealInterval) -> RealInterval {
        &self * &o
    }
}

impl Neg for RealInterval {
    type Output = RealInterval;
    fn neg(self) -> RealInterval {
        -&self
    }
}

fn sqrt_bound(x: &Q, bits: u64, upper: bool) -> Q {
    if x.is_zero() {
        return Q::zero();
    }
    // sqrt(n/d) = sqrt(n d) / d
    let nd = x.numer() * x.denom();
    let s = pow2(bits);
    let r = (nd * &s * &s).sqrt();
    let r = if upper { r + 1 } else { r };
    Q::new(r, x.denom() * s)
}

/// exp(x) for a rational point, enclosed at absolute precision about 2^-bits
/// relative to max(1, exp(x)).
pub fn exp_point(x: &Q, bits: u64) -> RealInterval {
    if x.is_zero() {
        return RealInterval::int(1);
    }
    // halve until |y| <= 1/2, then square back
    let mut m: u64 = 0;
    let mut bound = x.abs();
    let half = q(1, 2);
    while bound > half {
        bound /= qi(2);
        m += 1;
    }
    let mag = x.abs().to_f64().unwrap_or(0.0);
    let extra = (mag * 1.5).ceil() as u64;
    let wp = bits + 2 * m + extra + 16;
    let y = x / Q::from_integer(pow2(m));
    let yi = RealInterval::point(y.clone());
    let mut sum = RealInterval::int(1);
    let mut term = RealInterval::int(1);
    let tiny = Q::new(BigInt::one(), pow2(wp + 2));
    let mut k: i64 = 1;
    loop {
        term = (&term * &yi).scale(&q(1, k)).round(wp + 8);
        sum = &sum + &term;
        if term.mag() < tiny {
            break;
        }
        k += 1;
    }
    // geometric tail with ratio <= 1/2
    sum = sum.widen(&(term.mag() + &tiny));
    for _ in 0..m {
        sum = sum.sqr().round(wp);
    }
    sum.round(bits + 4)
}

/// atanh(z) = sum z^(2k+1)/(2k+1) for |z| <= 1/2.
fn atanh_point(z: &Q, wp: u64) -> RealInterval {
    let z2 = z * z;
    let mut pw = RealInterval::point(z.clone());
    let mut sum = pw.clone();
    let tiny = Q::new(BigInt::one(), pow2(wp + 2));
    let mut k: i64 = 1;
    loop {
        pw = pw.scale(&z2).round(wp + 8);
        let t = pw.scale(&q(1, 2 * k + 1)).round(wp + 8);
        sum = &sum + &t;
        if t.mag() < tiny {
            // remaining terms are bounded by a geometric series with ratio z^2 <= 1/4
            sum = sum.widen(&(t.mag() * q(4, 3) + &tiny));
            break;
        }
        k += 1;
    }
    sum
}

/// atan(z) for |z| < 1 by the alternating series.
fn atan_point(z: &Q, wp: u64) -> RealInterval {
    let z2 = z * z;
    let mut pw = RealInterval::point(z.clone());
    let mut sum = pw.clone();
    let tiny = Q::new(BigInt::one(), pow2(wp + 2));
    let mut k: i64 = 1;
    loop {
        pw = pw.scale(&z2).round(wp + 8);
        let t = pw.scale(&q(if k % 2 == 1 { -1 } else { 1 }, 2 * k + 1)).round(wp + 8);
        sum = &sum + &t;
        if t.mag() < tiny {
            sum = sum.widen(&(t.mag() + &tiny));
            break;
        }
        k += 1;
    }
    sum
}

pub fn ln2(bits: u64) -> RealInterval {
    atanh_point(&q(1, 3), bits + 4).scale(&qi(2)).round(bits + 2)
}

/// ln(x) for a positive rational point.
pub fn ln_point(x: &Q, bits: u64) -> RealInterval {
    assert!(x.is_positive());
    if x.is_one() {
        return RealInterval::int(0);
    }
    let mut e: i64 = x.numer().bits() as i64 - x.denom().bits() as i64;
    let two = qi(2);
    let scale = |e: i64| -> Q {
        if e >= 0 {
            Q::from_integer(pow2(e as u64))
        } else {
            Q::new(BigInt::one(), pow2((-e) as u64))
        }
    };
    let mut m = x / scale(e);
    while m > q(4, 3) {
        m /= &two;
        e += 1;
    }
    while m < q(2, 3) {
        m *= &two;
        e -= 1;
    }
    let wp = bits + 8 + (64 - (e.unsigned_abs()).leading_zeros() as u64);
    let z = (&m - Q::one()) / (&m + Q::one());
    let mut r = atanh_point(&z, wp).scale(&two);
    if e != 0 {
        r = &r + &ln2(wp).scale(&qi(e));
    }
    r.round(bits + 2)
}

pub fn pi(bits: u64) -> RealInterval {
    let wp = bits + 10;
    let a = atan_point(&q(1, 5), wp).scale(&qi(16));
    let b = atan_point(&q(1, 239), wp).scale(&qi(4));
    (&a - &b).round(bits + 2)
}

/// Iterates `f` at growing precision until the enclosure is no wider than eps.
pub fn refine<F>(eps: &Q, mut f: F) -> Result<RealInterval, ExactError>
where
    F: FnMut(u64) -> Result<RealInterval, ExactError>,
{
    let mut bits = bits_for(eps) + 12;
    for _ in 0..8 {
        let r = f(bits)?;
        if &r.width() <= eps {
            return Ok(r);
        }
        bits = bits * 2 + 16;
    }
    Err(ExactError::Precision(format!("could not reach width {}", fmt_q(eps, 3))))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn decimal_parsing() {
        assert_eq!(dec("1.5"), q(3, 2));
        assert_eq!(dec("-0.57"), q(-57, 100));
        assert_eq!(parse_rational("7/12"), Some(q(7, 12)));
        assert_eq!(parse_decimal("1.2.3"), None);
        assert_eq!(dec("2.5e-3"), q(1, 400));
    }

    #[test]
    fn dyadic_rounding_brackets() {
        let x = q(1, 3);
        assert!(floor_dyadic(&x, 10) <= x && x <= ceil_dyadic(&x, 10));
        let y = q(-1, 3);
        assert!(floor_dyadic(&y, 10) <= y && y <= ceil_dyadic(&y, 10));
    }

    #[test]
    fn pi_digits() {
        let p = pi(200);
        assert!(p.gt(&dec("3.1415926535897932384626")) && p.lt(&dec("3.1415926535897932384627")));
    }

    #[test]
    fn exp_ln_roundtrip() {
        let e1 = exp_point(&qi(1), 80);
        assert!(e1.gt(&dec("2.718281828459045235360")) && e1.lt(&dec("2.718281828459045235361")));
        let l = ln_point(&qi(10), 80);
        assert!(l.gt(&dec("2.302585092994045684017")) && l.lt(&dec("2.302585092994045684018")));
        let back = l.exp(80);
        assert!(back.contains(&qi(10)));
        let small = exp_point(&qi(-20), 80);
        assert!(small.gt(&dec("2.0611536224385578e-9")) && small.lt(&dec("2.0611536224385579e-9")));
    }

    #[test]
    fn sqrt_two() {
        let r = RealInterval::int(2).sqrt(60).unwrap();
        assert!(r.gt(&dec("1.41421356237309504")) && r.lt(&dec("1.41421356237309505")));
    }

    #[test]
    fn mul_signs() {
        let a = RealInterval::new(qi(-1), qi(2));
        let b = RealInterval::new(qi(-3), qi(1));
        let c = &a * &b;
        assert_eq!(c, RealInterval::new(qi(-6), qi(3)));
        assert_eq!(a.powi(2).unwrap(), RealInterval::new(qi(0), qi(4)));
        assert_eq!(a.powi(3).unwrap(), RealInterval::new(qi(-1), qi(8)));
    }
}
