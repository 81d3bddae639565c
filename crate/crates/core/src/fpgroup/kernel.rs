use std::path::Path;

use serde::{Deserialize, Serialize};

use super::presentation::{B_RELATORS, G10_RELATORS};
use super::{todd_coxeter, BjVariant, FiniteQuotientMap, FpError, Presentation, Word};
use crate::finitegrp::{Perm, PermGroup};

pub const TORSION_WITNESSES_JSON: &str = include_str!("../../data/torsion_witnesses.json");

/// Order of the subgroup generated by j, u, v.
pub const G10_ORDER: u128 = 288;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TorsionWitness {
    pub text: String,
    #[serde(skip)]
    pub word: Word,
    pub order: u64,
}

/// Words for torsion elements of Γ with their orders. This is a subset of
/// the full list of conjugacy classes of torsion elements.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TorsionWitnessList {
    pub entries: Vec<TorsionWitness>,
}

#[derive(Deserialize)]
struct WitnessFile {
    generators: Vec<String>,
    witnesses: Vec<WitnessEntry>,
}

#[derive(Deserialize)]
struct WitnessEntry {
    word: String,
    order: u64,
}

impl TorsionWitnessList {
    pub fn builtin() -> Self {
        Self::from_json(TORSION_WITNESSES_JSON).expect("builtin witness list")
    }

    pub fn from_json(s: &str) -> Result<Self, FpError> {
        let f: WitnessFile = serde_json::from_str(s).map_err(|e| FpError::Data(e.to_string()))?;
        let mut entries = Vec::new();
        for w in f.witnesses {
            if w.order < 2 {
                return Err(FpError::Data(format!("witness {:?} has order {}", w.word, w.order)));
            }
            let word = Word::parse(&w.word, &f.generators)?;
            entries.push(TorsionWitness { text: w.word, word, order: w.order });
        }
        if entries.is_empty() {
            return Err(FpError::Data("empty witness list".into()));
        }
        Ok(TorsionWitnessList { entries })
    }

    pub fn load(path: &Path) -> Result<Self, FpError> {
        let s = std::fs::read_to_string(path).map_err(|e| FpError::Data(format!("{}: {e}", path.display())))?;
        Self::from_json(&s)
    }

    pub fn single(p: &Presentation, word: &str, order: u64) -> Result<Self, FpError> {
        Ok(TorsionWitnessList { entries: vec![TorsionWitness { text: word.into(), word: p.word(word)?, order }] })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct WitnessFailure {
    pub word: String,
    pub expected: u64,
    pub actual: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct TorsionCheck {
    pub holds: bool,
    pub failing: Option<WitnessFailure>,
}

/// True iff every witness keeps its order in the quotient; the kernel then
/// contains none of the listed torsion.
pub fn torsion_free_kernel(m: &FiniteQuotientMap, w: &TorsionWitnessList) -> TorsionCheck {
    for e in &w.entries {
        let actual = m.image_of(&e.word).order();
        if actual != e.order {
            return TorsionCheck {
                holds: false,
                failing: Some(WitnessFailure { word: e.text.clone(), expected: e.order, actual }),
            };
        }
    }
    TorsionCheck { holds: true, failing: None }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct HurwitzCheck {
    pub generates: bool,
    pub b_order: u64,
    pub jvu_order: u128,
    pub jvu_relators_hold: bool,
    /// H = ⟨b, j, u, v⟩, b of order 3, ⟨j, u, v⟩ ≅ G₁₀
    pub condition1: bool,
    /// the relators tying b to ⟨j, u, v⟩ vanish
    pub condition2: bool,
    /// torsion keeps its order
    pub condition3: bool,
    pub torsion: TorsionCheck,
}

impl HurwitzCheck {
    pub fn passes(&self) -> bool {
        self.condition1 && self.condition2 && self.condition3
    }
}

/// Checks whether H with images of b, j, u, v is the quotient of Γ by a
/// torsion-free normal subgroup. ⟨j, u, v⟩ ≅ G₁₀ is certified by the
/// relators of G₁₀ holding together with the image having order 288, the
/// order of the presented group.
pub fn hurwitz_ball_group_check(
    h: &PermGroup,
    images: &[Perm; 4],
    witnesses: &TorsionWitnessList,
    variant: BjVariant,
) -> HurwitzCheck {
    let gamma = Presentation::gamma_variant(variant);
    let generated = PermGroup::new(h.degree(), images.to_vec()).expect("degree");
    let generates = images.iter().all(|x| h.contains(x)) && generated.order() == h.order();
    let b_order = images[0].order();
    let jvu = PermGroup::new(h.degree(), images[1..].to_vec()).expect("degree");
    let jvu_order = jvu.order();
    let g10 = Presentation::g10();
    let jvu_relators_hold = G10_RELATORS.iter().all(|r| g10.word(r).expect("builtin").evaluate(&images[1..]).is_identity());
    let condition1 = generates && b_order == 3 && jvu_order == G10_ORDER && jvu_relators_hold;
    let mut b_rels: Vec<Word> = B_RELATORS.iter().map(|r| gamma.word(r).expect("builtin")).collect();
    if variant == BjVariant::Cube {
        b_rels[1] = gamma.relators()[8].clone();
    }
    let condition2 = b_rels.iter().all(|r| r.evaluate(images).is_identity());
    let m = FiniteQuotientMap::new("H", h.clone(), images.to_vec());
    let torsion = torsion_free_kernel(&m, witnesses);
    HurwitzCheck {
        generates,
        b_order,
        jvu_order,
        jvu_relators_hold,
        condition1,
        condition2,
        condition3: torsion.holds,
        torsion,
    }
}

/// Order of the group presented by the j, u, v relators, by coset enumeration.
pub fn g10_presented_order(max_cosets: usize) -> Result<Option<usize>, FpError> {
    Ok(todd_coxeter(&Presentation::g10(), &[], max_cosets)?.index())
}
