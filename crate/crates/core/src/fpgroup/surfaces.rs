use serde::Serialize;

use super::{
    cover_invariants, find_epimorphisms, hurwitz_ball_group_check, regular_cover_relation, torsion_free_kernel,
    BjVariant, CoverInvariants, CoverRelation, EpiOptions, FiniteQuotientMap, FpError, HurwitzCheck, Presentation,
    TorsionWitnessList,
};
use crate::exactmath::Q;
use crate::finitegrp::{target, Perm};

/// Orders of b, j, u, v forced by a torsion-free kernel.
pub const GAMMA_ORDERS: [(&str, u64); 4] = [("b", 3), ("j", 12), ("u", 4), ("v", 8)];

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct SurfaceCheck {
    pub target: String,
    pub target_order: u128,
    pub search_order: Vec<String>,
    pub nodes: u64,
    /// classes of surjections up to automorphisms of the target
    pub classes: usize,
    /// classes whose kernel passes the torsion test
    pub torsion_free_classes: usize,
    pub images: Vec<String>,
    pub hurwitz: HurwitzCheck,
    pub cover: CoverInvariants,
    #[serde(skip)]
    pub map: FiniteQuotientMap,
}

impl SurfaceCheck {
    pub fn passes(&self, expected_e: i64) -> bool {
        self.hurwitz.passes() && self.cover.integral && self.cover.euler_char == Q::from_integer(expected_e.into())
    }
}

/// Searches Γ → target with the torsion orders imposed and keeps the
/// classes with torsion-free kernel.
pub fn verify_surface(
    target_name: &str,
    budget: u64,
    witnesses: &TorsionWitnessList,
    variant: BjVariant,
    eps: &Q,
) -> Result<SurfaceCheck, FpError> {
    let gamma = Presentation::gamma_variant(variant);
    let t = target(target_name)?;
    let mut opts = EpiOptions::with_orders(&gamma, &GAMMA_ORDERS)?;
    opts.budget = budget;
    let search = find_epimorphisms(&gamma, &t, &opts)?;
    let good: Vec<&FiniteQuotientMap> = search.maps.iter().filter(|m| torsion_free_kernel(m, witnesses).holds).collect();
    let map = (*good.first().ok_or_else(|| FpError::NotFound(format!("no surjection onto {target_name} with torsion-free kernel")))?).clone();
    let images: [Perm; 4] = map.images.clone().try_into().map_err(|_| FpError::Invalid("expected four images".into()))?;
    let hurwitz = hurwitz_ball_group_check(&t.group, &images, witnesses, variant);
    let cover = cover_invariants(&map, eps)?;
    Ok(SurfaceCheck {
        target: target_name.into(),
        target_order: t.group.order(),
        search_order: search.search_order.clone(),
        nodes: search.nodes,
        classes: search.count(),
        torsion_free_classes: good.len(),
        images: map.images.iter().map(|p| p.to_string()).collect(),
        hurwitz,
        cover,
        map,
    })
}

pub fn verify_s1(budget: u64, eps: &Q) -> Result<SurfaceCheck, FpError> {
    verify_surface("psu33xz3", budget, &TorsionWitnessList::builtin(), BjVariant::Square, eps)
}

pub fn verify_s2(budget: u64, eps: &Q) -> Result<SurfaceCheck, FpError> {
    verify_surface("psu33xa4", budget, &TorsionWitnessList::builtin(), BjVariant::Square, eps)
}

/// The S₂ map covers the S₁ map.
pub fn cover_between(s2: &SurfaceCheck, s1: &SurfaceCheck) -> Result<CoverRelation, FpError> {
    regular_cover_relation(&s2.map, &s1.map)
}
