use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// a + b·i in F₉ = F₃[i], i² = −1.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Gf9 {
    pub a: u8,
    pub b: u8,
}

impl Gf9 {
    pub const ZERO: Gf9 = Gf9 { a: 0, b: 0 };
    pub const ONE: Gf9 = Gf9 { a: 1, b: 0 };
    pub const I: Gf9 = Gf9 { a: 0, b: 1 };

    pub fn new(a: i64, b: i64) -> Self {
        Gf9 { a: a.rem_euclid(3) as u8, b: b.rem_euclid(3) as u8 }
    }

    pub fn all() -> impl Iterator<Item = Gf9> {
        (0..9u8).map(|k| Gf9 { a: k % 3, b: k / 3 })
    }

    pub fn is_zero(self) -> bool {
        self == Self::ZERO
    }

    /// x ↦ x³, i.e. a + bi ↦ a − bi
    pub fn frob(self) -> Self {
        Gf9::new(self.a as i64, -(self.b as i64))
    }

    /// x · x³ ∈ F₃
    pub fn norm(self) -> u8 {
        (self * self.frob()).a
    }

    pub fn pow(self, mut e: u32) -> Self {
        let mut acc = Self::ONE;
        let mut b = self;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * b;
            }
            b = b * b;
            e >>= 1;
        }
        acc
    }

    pub fn inv(self) -> Option<Self> {
        (!self.is_zero()).then(|| self.pow(7))
    }
}

impl Add for Gf9 {
    type Output = Gf9;
    fn add(self, o: Gf9) -> Gf9 {
        Gf9 { a: (self.a + o.a) % 3, b: (self.b + o.b) % 3 }
    }
}

impl Sub for Gf9 {
    type Output = Gf9;
    fn sub(self, o: Gf9) -> Gf9 {
        self + (-o)
    }
}

impl Neg for Gf9 {
    type Output = Gf9;
    fn neg(self) -> Gf9 {
        Gf9 { a: (3 - self.a) % 3, b: (3 - self.b) % 3 }
    }
}

impl Mul for Gf9 {
    type Output = Gf9;
    fn mul(self, o: Gf9) -> Gf9 {
        let (a, b, c, d) = (self.a as i64, self.b as i64, o.a as i64, o.b as i64);
        Gf9::new(a * c - b * d, a * d + b * c)
    }
}

impl fmt::Display for Gf9 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.a, self.b) {
            (a, 0) => write!(f, "{a}"),
            (0, 1) => write!(f, "i"),
            (0, b) => write!(f, "{b}i"),
            (a, 1) => write!(f, "{a}+i"),
            (a, b) => write!(f, "{a}+{b}i"),
        }
    }
}

impl fmt::Debug for Gf9 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn field_axioms() {
        for x in Gf9::all() {
            assert_eq!(x.frob().frob(), x);
            assert_eq!(x.pow(3), x.frob());
            if let Some(y) = x.inv() {
                assert_eq!(x * y, Gf9::ONE);
            }
            for y in Gf9::all() {
                assert_eq!((x * y).frob(), x.frob() * y.frob());
                assert_eq!((x + y).frob(), x.frob() + y.frob());
            }
        }
        assert_eq!(Gf9::I * Gf9::I, -Gf9::ONE);
        assert_eq!(Gf9::all().filter(|x| x.norm() == 1).count(), 4);
    }
}
