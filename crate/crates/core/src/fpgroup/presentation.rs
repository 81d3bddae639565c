use std::path::Path;

use serde::{Deserialize, Serialize};

use super::{FpError, Word};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    generators: Vec<String>,
    relators: Vec<Word>,
}

/// JSON form: generator names and relators in letter-exponent notation.
#[derive(Serialize, Deserialize)]
struct PresentationJson {
    generators: Vec<String>,
    relators: Vec<String>,
}

/// Which reading of the (bj)-relator to use.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum BjVariant {
    /// (bj)² u⁻² v⁻¹
    #[default]
    Square,
    /// (bj)² bj u⁻² v⁻¹
    Cube,
}

pub const GAMMA_GENERATORS: [&str; 4] = ["b", "j", "u", "v"];

pub const GAMMA_RELATORS: [&str; 10] = [
    "b^3",
    "u^4",
    "v^8",
    "(u,j)",
    "(v,j)",
    "j^-3 v^2",
    "(b v u^3)^3",
    "u v (u v^-1)^2",
    "(b j)^2 u^-2 v^-1",
    "b^-1 u^-2 v^-1 b v u^2",
];

const BJ_CUBE: &str = "(b j)^2 b j u^-2 v^-1";

/// Relators of the subgroup generated by j, u, v (the reflection group G₁₀).
pub const G10_RELATORS: [&str; 6] = ["u^4", "v^8", "(u,j)", "(v,j)", "j^-3 v^2", "u v (u v^-1)^2"];

/// The three relators that tie b to the order-288 subgroup.
pub const B_RELATORS: [&str; 3] = ["(b v u^3)^3", "(b j)^2 u^-2 v^-1", "b^-1 u^-2 v^-1 b v u^2"];

impl Presentation {
    /// Relators are freely and cyclically reduced; trivial ones are dropped.
    pub fn new(generators: Vec<String>, relators: Vec<Word>) -> Result<Self, FpError> {
        let mut seen = std::collections::HashSet::new();
        for g in &generators {
            if g.is_empty() || !g.chars().next().is_some_and(|c| c.is_alphabetic() || c == '_') {
                return Err(FpError::Parse(format!("bad generator name {g:?}")));
            }
            if !seen.insert(g) {
                return Err(FpError::Parse(format!("duplicate generator {g:?}")));
            }
        }
        for r in &relators {
            if r.letters().iter().any(|&(g, _)| g >= generators.len()) {
                return Err(FpError::Parse("relator uses an undeclared generator".into()));
            }
        }
        let relators = relators.into_iter().map(|r| r.cyclically_reduced()).filter(|r| !r.is_identity()).collect();
        Ok(Presentation { generators, relators })
    }

    pub fn parse(generators: &[&str], relators: &[&str]) -> Result<Self, FpError> {
        let names: Vec<String> = generators.iter().map(|s| s.to_string()).collect();
        let rels = relators.iter().map(|r| Word::parse(r, &names)).collect::<Result<Vec<_>, _>>()?;
        Self::new(names, rels)
    }

    pub fn gamma() -> Self {
        Self::gamma_variant(BjVariant::Square)
    }

    pub fn gamma_variant(v: BjVariant) -> Self {
        let mut rels = GAMMA_RELATORS.to_vec();
        if v == BjVariant::Cube {
            rels[8] = BJ_CUBE;
        }
        Self::parse(&GAMMA_GENERATORS, &rels).expect("builtin presentation")
    }

    /// ⟨j, u, v⟩ with the relators of Γ that only involve j, u, v.
    pub fn g10() -> Self {
        Self::parse(&["j", "u", "v"], &G10_RELATORS).expect("builtin presentation")
    }

    pub fn generators(&self) -> &[String] {
        &self.generators
    }

    pub fn relators(&self) -> &[Word] {
        &self.relators
    }

    pub fn ngens(&self) -> usize {
        self.generators.len()
    }

    pub fn generator_index(&self, name: &str) -> Option<usize> {
        self.generators.iter().position(|g| g == name)
    }

    pub fn word(&self, s: &str) -> Result<Word, FpError> {
        Word::parse(s, &self.generators)
    }

    pub fn format_word(&self, w: &Word) -> String {
        w.format(&self.generators)
    }

    pub fn with_relator(&self, r: Word) -> Result<Self, FpError> {
        let mut rels = self.relators.clone();
        rels.push(r);
        Self::new(self.generators.clone(), rels)
    }

    pub fn to_json(&self) -> String {
        let j = PresentationJson {
            generators: self.generators.clone(),
            relators: self.relators.iter().map(|r| self.format_word(r)).collect(),
        };
        serde_json::to_string_pretty(&j).expect("serializable")
    }

    pub fn from_json(s: &str) -> Result<Self, FpError> {
        let j: PresentationJson = serde_json::from_str(s).map_err(|e| FpError::Parse(e.to_string()))?;
        let rels = j.relators.iter().map(|r| Word::parse(r, &j.generators)).collect::<Result<Vec<_>, _>>()?;
        Self::new(j.generators, rels)
    }

    pub fn load(path: &Path) -> Result<Self, FpError> {
        let s = std::fs::read_to_string(path).map_err(|e| FpError::Data(format!("{}: {e}", path.display())))?;
        Self::from_json(&s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gamma_round_trips() {
        let g = Presentation::gamma();
        assert_eq!(g.ngens(), 4);
        assert_eq!(g.relators().len(), 10);
        assert_eq!(Presentation::from_json(&g.to_json()).unwrap(), g);
        assert_ne!(Presentation::gamma_variant(BjVariant::Cube), g);
        assert_eq!(Presentation::g10().relators().len(), 6);
    }

    #[test]
    fn rejects_bad_input() {
        assert!(Presentation::parse(&["x", "x"], &[]).is_err());
        assert!(Presentation::from_json(r#"{"generators":["x"],"relators":["y^2"]}"#).is_err());
    }
}
