use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::interval::{qi, Q};

/// An element of Q(ζ) with ζ a primitive 12th root of unity, stored on the
/// basis 1, ζ, ζ², ζ³ (ζ⁴ = ζ² − 1).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CycloElem {
    pub c: [Q; 4],
}

impl CycloElem {
    pub fn new(c: [Q; 4]) -> Self {
        CycloElem { c }
    }

    pub fn from_ints(c: [i64; 4]) -> Self {
        CycloElem { c: c.map(qi) }
    }

    pub fn zero() -> Self {
        Self::from_ints([0, 0, 0, 0])
    }

    pub fn one() -> Self {
        Self::from_ints([1, 0, 0, 0])
    }

    pub fn rational(x: Q) -> Self {
        CycloElem { c: [x, Q::zero(), Q::zero(), Q::zero()] }
    }

    pub fn zeta() -> Self {
        Self::from_ints([0, 1, 0, 0])
    }

    /// α = ζ + ζ⁻¹, with α² = 3.
    pub fn alpha() -> Self {
        Self::from_ints([0, 2, 0, -1])
    }

    /// β = ζ³, with β² = −1.
    pub fn beta() -> Self {
        Self::from_ints([0, 0, 0, 1])
    }

    /// ω = ζ⁴, a primitive cube root of unity.
    pub fn omega() -> Self {
        Self::from_ints([-1, 0, 1, 0])
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(|x| x.is_zero())
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut acc = Self::one();
        let mut b = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &b;
            }
            b = &b * &b;
            e >>= 1;
        }
        acc
    }

    /// Complex conjugation ζ ↦ ζ⁻¹.
    pub fn tau(&self) -> Self {
        let [a0, a1, a2, a3] = &self.c;
        CycloElem { c: [a0 + a2, a1.clone(), -a2.clone(), -(a1 + a3)] }
    }

    /// The automorphism ζ ↦ ζʲ for j ∈ {1, 5, 7, 11}.
    pub fn galois(&self, j: u32) -> Self {
        assert!(matches!(j, 1 | 5 | 7 | 11), "not a unit mod 12");
        let z = Self::zeta().pow(j);
        let mut acc = Self::zero();
        let mut p = Self::one();
        for a in &self.c {
            acc = &acc + &p.scale(a);
            p = &p * &z;
        }
        acc
    }

    pub fn scale(&self, x: &Q) -> Self {
        CycloElem { c: self.c.clone().map(|a| a * x) }
    }

    /// x · τ(x), which lies in k = Q(α).
    pub fn relative_norm(&self) -> Self {
        self * &self.tau()
    }

    /// Coordinates (a, b) with self = a + bα, if self ∈ k.
    pub fn in_k(&self) -> Option<(Q, Q)> {
        let [a0, a1, a2, a3] = &self.c;
        if !a2.is_zero() || a1 != &(-a3 * qi(2)) {
            return None;
        }
        Some((a0.clone(), -a3.clone()))
    }

    pub fn from_k(a: Q, b: Q) -> Self {
        &Self::rational(a) + &Self::alpha().scale(&b)
    }

    /// Norm from k to Q of a + bα.
    pub fn norm_k(&self) -> Option<Q> {
        self.in_k().map(|(a, b)| &a * &a - qi(3) * &b * &b)
    }

    /// Absolute norm to Q: product of the four Galois conjugates.
    pub fn norm(&self) -> Q {
        let p = [1, 5, 7, 11].iter().fold(Self::one(), |acc, &j| &acc * &self.galois(j));
        p.c[0].clone()
    }

    pub fn is_integral_coords(&self) -> bool {
        self.c.iter().all(|x| x.is_integer())
    }

    pub fn inverse(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let others = [5, 7, 11].iter().fold(Self::one(), |acc, &j| &acc * &self.galois(j));
        let n = (self * &others).c[0].clone();
        Some(others.scale(&n.recip()))
    }
}

impl Add for &CycloElem {
    type Output = CycloElem;
    fn add(self, o: &CycloElem) -> CycloElem {
        CycloElem { c: std::array::from_fn(|i| &self.c[i] + &o.c[i]) }
    }
}

impl Sub for &CycloElem {
    type Output = CycloElem;
    fn sub(self, o: &CycloElem) -> CycloElem {
        CycloElem { c: std::array::from_fn(|i| &self.c[i] - &o.c[i]) }
    }
}

impl Neg for &CycloElem {
    type Output = CycloElem;
    fn neg(self) -> CycloElem {
        CycloElem { c: std::array::from_fn(|i| -&self.c[i]) }
    }
}

impl Mul for &CycloElem {
    type Output = CycloElem;
    fn mul(self, o: &CycloElem) -> CycloElem {
        let mut p: [Q; 7] = std::array::from_fn(|_| Q::zero());
        for i in 0..4 {
            if self.c[i].is_zero() {
                continue;
            }
            for j in 0..4 {
                p[i + j] += &self.c[i] * &o.c[j];
            }
        }
        for d in (4..7).rev() {
            let t = std::mem::take(&mut p[d]);
            if !t.is_zero() {
                p[d - 2] += &t;
                p[d - 4] -= &t;
            }
        }
        CycloElem { c: [p[0].clone(), p[1].clone(), p[2].clone(), p[3].clone()] }
    }
}

impl Add for CycloElem {
    type Output = CycloElem;
    fn add(self, o: CycloElem) -> CycloElem {
        &self + &o
    }
}

impl Sub for CycloElem {
    type Output = CycloElem;
    fn sub(self, o: CycloElem) -> CycloElem {
        &self - &o
    }
}

impl Mul for CycloElem {
    type Output = CycloElem;
    fn mul(self, o: CycloElem) -> CycloElem {
        &self * &o
    }
}

impl Neg for CycloElem {
    type Output = CycloElem;
    fn neg(self) -> CycloElem {
        -&self
    }
}

impl fmt::Debug for CycloElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for CycloElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some((a, b)) = self.in_k() {
            return match (a.is_zero(), b.is_zero()) {
                (_, true) => write!(f, "{a}"),
                (true, false) => write!(f, "{}α", coeff(&b)),
                (false, false) => {
                    let sign = if b < Q::zero() { "-" } else { "+" };
                    let babs = if b < Q::zero() { -b } else { b };
                    write!(f, "{a}{sign}{}α", coeff(&babs))
                }
            };
        }
        let names = ["", "ζ", "ζ^2", "ζ^3"];
        let mut first = true;
        for (x, n) in self.c.iter().zip(names) {
            if x.is_zero() {
                continue;
            }
            let neg = x < &Q::zero();
            let ax = if neg { -x.clone() } else { x.clone() };
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { "-" } else { "+" })?;
            }
            if n.is_empty() {
                write!(f, "{ax}")?;
            } else {
                write!(f, "{}{n}", coeff(&ax))?;
            }
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

fn coeff(x: &Q) -> String {
    if x.is_one() {
        String::new()
    } else {
        format!("{x}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::interval::q;

    #[test]
    fn basic_identities() {
        let a = CycloElem::alpha();
        let b = CycloElem::beta();
        assert_eq!(&a * &a, CycloElem::from_ints([3, 0, 0, 0]));
        assert_eq!(&b * &b, CycloElem::from_ints([-1, 0, 0, 0]));
        assert_eq!(CycloElem::zeta().pow(12), CycloElem::one());
        assert_eq!(CycloElem::zeta().pow(6), CycloElem::from_ints([-1, 0, 0, 0]));
        assert_eq!(b.tau(), -&b);
        assert_eq!(a.tau(), a);
        let w = CycloElem::omega();
        assert_eq!(&(&(&w * &w) + &w) + &CycloElem::one(), CycloElem::zero());
    }

    #[test]
    fn norms() {
        let x = &CycloElem::one() - &CycloElem::alpha();
        assert_eq!(x.norm_k(), Some(qi(-2)));
        assert_eq!(x.relative_norm(), &x * &x);
        assert_eq!(CycloElem::zeta().norm(), qi(1));
        assert_eq!(CycloElem::from_ints([2, 0, 0, 0]).norm(), qi(16));
        let y = CycloElem::new([q(1, 2), qi(3), qi(-1), q(2, 5)]);
        assert_eq!(&y * &y.inverse().unwrap(), CycloElem::one());
    }

    #[test]
    fn display() {
        let x = &CycloElem::one() - &CycloElem::alpha();
        assert_eq!(x.to_string(), "1-α");
        assert_eq!(CycloElem::beta().to_string(), "ζ^3");
    }
}
