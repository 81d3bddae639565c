use std::path::Path;

use serde::{Deserialize, Serialize};

use super::kronecker::is_fundamental_discriminant;
use super::ExactError;

pub const FIELDS_JSON: &str = include_str!("../../data/fields.json");

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub enum FieldKind {
    Rationals,
    RealQuadratic(i64),
    ImaginaryQuadratic(i64),
    Cyclotomic(u32),
    Tabulated,
}

/// One Dirichlet L-factor of a Dedekind zeta function.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub enum CharFactor {
    /// L(s, χ_D) for the Kronecker character of a fundamental discriminant.
    Kronecker(i64),
    /// L(s, χ) L(s, χ̄) for a character with values in {0, ±1, ±i};
    /// `values[a]` is χ(a) as (re, im).
    ComplexPair { modulus: i64, values: Vec<(i8, i8)> },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct FieldDesc {
    pub label: String,
    pub degree: u32,
    pub signature: (u32, u32),
    pub disc: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub class_number: Option<u32>,
    pub kind: FieldKind,
    #[serde(default, rename = "splittingData", skip_serializing_if = "Option::is_none")]
    pub splitting: Option<Vec<CharFactor>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub source: Option<String>,
}

impl FieldDesc {
    pub fn rationals() -> Self {
        FieldDesc {
            label: "Q".into(),
            degree: 1,
            signature: (1, 0),
            disc: 1,
            class_number: Some(1),
            kind: FieldKind::Rationals,
            splitting: Some(vec![CharFactor::Kronecker(1)]),
            source: None,
        }
    }

    pub fn real_quadratic(d: i64) -> Result<Self, ExactError> {
        if d <= 1 || !is_fundamental_discriminant(d) {
            return Err(ExactError::NotFundamental(d));
        }
        Ok(FieldDesc {
            label: format!("Q(sqrt({}))", if d % 4 == 0 { d / 4 } else { d }),
            degree: 2,
            signature: (2, 0),
            disc: d as u64,
            class_number: None,
            kind: FieldKind::RealQuadratic(d),
            splitting: Some(vec![CharFactor::Kronecker(1), CharFactor::Kronecker(d)]),
            source: None,
        })
    }

    pub fn imaginary_quadratic(d: i64) -> Result<Self, ExactError> {
        if d >= 0 || !is_fundamental_discriminant(d) {
            return Err(ExactError::NotFundamental(d));
        }
        Ok(FieldDesc {
            label: format!("Q(sqrt({}))", if d % 4 == 0 { d / 4 } else { d }),
            degree: 2,
            signature: (0, 1),
            disc: d.unsigned_abs(),
            class_number: None,
            kind: FieldKind::ImaginaryQuadratic(d),
            splitting: Some(vec![CharFactor::Kronecker(1), CharFactor::Kronecker(d)]),
            source: None,
        })
    }

    /// Q(√3), discriminant 12.
    pub fn k_sqrt3() -> Self {
        let mut f = Self::real_quadratic(12).expect("12 is fundamental");
        f.class_number = Some(1);
        f
    }

    /// Q(ζ₁₂) = Q(√3, i), discriminant 144.
    pub fn l_zeta12() -> Self {
        FieldDesc {
            label: "Q(zeta12)".into(),
            degree: 4,
            signature: (0, 2),
            disc: 144,
            class_number: Some(1),
            kind: FieldKind::Cyclotomic(12),
            splitting: Some(vec![
                CharFactor::Kronecker(1),
                CharFactor::Kronecker(12),
                CharFactor::Kronecker(-4),
                CharFactor::Kronecker(-3),
            ]),
            source: None,
        }
    }

    pub fn is_totally_complex(&self) -> bool {
        self.signature.0 == 0
    }

    pub fn is_totally_real(&self) -> bool {
        self.signature.1 == 0
    }

    pub fn validate(&self) -> Result<(), ExactError> {
        let bad = |m: &str| Err(ExactError::Data(format!("{}: {m}", self.label)));
        if self.signature.0 + 2 * self.signature.1 != self.degree {
            return bad("signature does not match degree");
        }
        if self.disc == 0 {
            return bad("zero discriminant");
        }
        match &self.kind {
            FieldKind::Rationals if self.degree != 1 || self.disc != 1 => return bad("rationals must have degree 1"),
            FieldKind::RealQuadratic(d) => {
                if *d <= 0 || !is_fundamental_discriminant(*d) || self.disc != *d as u64 || self.degree != 2 {
                    return bad("inconsistent real quadratic data");
                }
            }
            FieldKind::ImaginaryQuadratic(d)
                if (*d >= 0 || !is_fundamental_discriminant(*d) || self.disc != d.unsigned_abs() || self.degree != 2) => {
                    return bad("inconsistent imaginary quadratic data");
                }
            _ => {}
        }
        if let Some(fs) = &self.splitting {
            let mut deg = 0;
            let mut disc: u64 = 1;
            for f in fs {
                match f {
                    CharFactor::Kronecker(d) => {
                        if !is_fundamental_discriminant(*d) {
                            return bad("splitting character is not fundamental");
                        }
                        deg += 1;
                        disc *= d.unsigned_abs();
                    }
                    CharFactor::ComplexPair { modulus, values } => {
                        if values.len() != *modulus as usize {
                            return bad("character table has the wrong length");
                        }
                        deg += 2;
                        disc *= (*modulus as u64) * (*modulus as u64);
                    }
                }
            }
            // conductor-discriminant formula
            if deg != self.degree || disc != self.disc {
                return bad("splitting data contradicts degree or discriminant");
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FieldTable {
    pub fields: Vec<FieldDesc>,
}

impl FieldTable {
    pub fn builtin() -> Self {
        Self::parse(FIELDS_JSON).expect("embedded field table is valid")
    }

    pub fn parse(text: &str) -> Result<Self, ExactError> {
        let fields: Vec<FieldDesc> = serde_json::from_str(text).map_err(|e| ExactError::Data(e.to_string()))?;
        for f in &fields {
            f.validate()?;
        }
        Ok(FieldTable { fields })
    }

    pub fn load(path: &Path) -> Result<Self, ExactError> {
        let text = std::fs::read_to_string(path).map_err(|e| ExactError::Data(format!("{}: {e}", path.display())))?;
        Self::parse(&text)
    }

    /// Fields of the given degree and signature with discriminant at most `max_disc`.
    pub fn select(&self, degree: u32, totally_complex: bool, max_disc: u64) -> Vec<&FieldDesc> {
        let mut v: Vec<&FieldDesc> = self
            .fields
            .iter()
            .filter(|f| {
                f.degree == degree
                    && f.disc <= max_disc
                    && if totally_complex { f.is_totally_complex() } else { f.is_totally_real() }
            })
            .collect();
        v.sort_by_key(|f| f.disc);
        v
    }

    pub fn find(&self, degree: u32, disc: u64) -> Option<&FieldDesc> {
        self.fields.iter().find(|f| f.degree == degree && f.disc == disc)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtin_table_loads() {
        let t = FieldTable::builtin();
        assert_eq!(t.select(2, false, 16).iter().map(|f| f.disc).collect::<Vec<_>>(), vec![5, 8, 12, 13]);
        assert_eq!(t.select(4, true, 282).len(), 9);
        assert_eq!(t.select(3, false, 141).iter().map(|f| f.disc).collect::<Vec<_>>(), vec![49, 81]);
        assert_eq!(t.find(4, 144).unwrap().splitting, FieldDesc::l_zeta12().splitting);
    }

    #[test]
    fn validation_catches_bad_splitting() {
        let mut f = FieldDesc::l_zeta12();
        f.disc = 145;
        assert!(f.validate().is_err());
        assert!(FieldDesc::real_quadratic(3).is_err());
    }
}
