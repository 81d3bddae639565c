use std::sync::OnceLock;

use super::perm::{Perm, PermGroup};
use super::unitary::{build_psu33, Psu33};
use super::GroupError;

fn p(n: usize, s: &str) -> Perm {
    Perm::parse(n, s).expect("valid cycle literal")
}

/// Z/n acting regularly on n points.
pub fn cyclic(n: usize) -> PermGroup {
    let c: Vec<u32> = (0..n as u32).map(|i| (i + 1) % n as u32).collect();
    PermGroup::new(n, vec![Perm::from_images(c).expect("cycle")]).expect("degree")
}

pub fn symmetric(n: usize) -> PermGroup {
    if n < 2 {
        return PermGroup::trivial(n);
    }
    let c: Vec<u32> = (0..n as u32).map(|i| (i + 1) % n as u32).collect();
    let t = Perm::from_cycles(n, &[&[0, 1]]).expect("transposition");
    PermGroup::new(n, vec![t, Perm::from_images(c).expect("cycle")]).expect("degree")
}

pub fn alternating4() -> PermGroup {
    PermGroup::new(4, vec![p(4, "(1,2,3)"), p(4, "(2,3,4)")]).expect("degree")
}

/// Disjoint-support product; the first factor acts on 0..deg₁.
pub fn direct_product(g1: &PermGroup, g2: &PermGroup) -> PermGroup {
    let (d1, d2) = (g1.degree(), g2.degree());
    let mut gens: Vec<Perm> = g1.generators().iter().map(|g| g.shifted(0, d1 + d2)).collect();
    gens.extend(g2.generators().iter().map(|g| g.shifted(d1, d1 + d2)));
    PermGroup::new(d1 + d2, gens).expect("degree")
}

/// Pairs (a, b) ↦ a on the first factor's points.
pub fn embed_pair(a: &Perm, b: &Perm) -> Perm {
    let n = a.degree() + b.degree();
    a.shifted(0, n).mul(&b.shifted(a.degree(), n))
}

/// The three partitions of {1,2,3,4} into pairs, permuted by A₄; the action
/// is the quotient A₄ → A₄/V₄ ≅ Z/3.
pub fn a4_to_z3(g: &Perm) -> Result<Perm, GroupError> {
    if g.degree() != 4 {
        return Err(GroupError::Invalid("expected a permutation of 4 points".into()));
    }
    let parts: [[[u32; 2]; 2]; 3] = [[[0, 1], [2, 3]], [[0, 2], [1, 3]], [[0, 3], [1, 2]]];
    let key = |pp: [[u32; 2]; 2]| {
        let mut a = pp.map(|mut e| {
            e.sort();
            e
        });
        a.sort();
        a
    };
    let mut img = Vec::new();
    for part in parts {
        let moved = key(part.map(|e| e.map(|x| g.apply(x))));
        img.push(parts.iter().position(|q| key(*q) == moved).expect("partition") as u32);
    }
    Perm::from_images(img)
}

/// PSU(3,3) × A₄ → PSU(3,3) × Z/3.
pub fn project_a4_factor(g: &Perm, psu_degree: usize) -> Result<Perm, GroupError> {
    let a = g.restrict(0, psu_degree)?;
    let b = g.restrict(psu_degree, 4)?;
    Ok(embed_pair(&a, &a4_to_z3(&b)?))
}

/// x ↦ ax + b on Z/7 with a ∈ {1, 2, 4}; automorphisms come from a ∈ (Z/7)^×.
pub fn frobenius21_abstract() -> (PermGroup, PermGroup) {
    let t = Perm::from_images((0..7).map(|x| (x + 1) % 7).collect()).expect("perm");
    let m2 = Perm::from_images((0..7).map(|x| (2 * x) % 7).collect()).expect("perm");
    let m3 = Perm::from_images((0..7).map(|x| (3 * x) % 7).collect()).expect("perm");
    (PermGroup::new(7, vec![t.clone(), m2]).expect("degree"), PermGroup::new(7, vec![t, m3]).expect("degree"))
}

#[derive(Debug, Clone)]
pub struct Frobenius21 {
    pub a: Perm,
    pub b: Perm,
    pub group: PermGroup,
    pub is_abelian: bool,
    pub is_normal: bool,
}

/// A subgroup ⟨a, b⟩ of order 21: a of order 7 and b of order 3 normalizing ⟨a⟩.
pub fn frobenius21(g: &PermGroup) -> Result<Frobenius21, GroupError> {
    let elems = g.elements()?;
    let a = elems
        .iter()
        .find(|x| x.order() == 7)
        .cloned()
        .ok_or_else(|| GroupError::Construction("no element of order 7".into()))?;
    let powers: Vec<Perm> = (1..7).map(|k| a.pow(k)).collect();
    for b in elems.iter().filter(|x| x.order() == 3) {
        let c = a.conj(b);
        if powers.contains(&c) && c != a {
            let group = g.subgroup(vec![a.clone(), b.clone()])?;
            if group.order() == 21 {
                let is_abelian = group.is_abelian();
                let is_normal = group.is_normalized_by(g.generators());
                return Ok(Frobenius21 { a, b: b.clone(), group, is_abelian, is_normal });
            }
        }
    }
    Err(GroupError::Construction("no Frobenius subgroup of order 21".into()))
}

/// A finite group with a supergroup N in the same symmetric group whose
/// conjugation action realizes the automorphisms used for deduplication.
#[derive(Debug, Clone)]
pub struct Target {
    pub name: String,
    pub description: String,
    pub group: PermGroup,
    pub automorphisms: PermGroup,
    /// whether N realizes all of Aut(group)
    pub full_aut: bool,
}

pub const TARGET_NAMES: [&str; 6] = ["z3", "a4", "psu33", "psu33xz3", "psu33xa4", "frob21"];

pub fn psu33_cached() -> Result<&'static Psu33, GroupError> {
    static CELL: OnceLock<Result<Psu33, GroupError>> = OnceLock::new();
    CELL.get_or_init(build_psu33).as_ref().map_err(|e| e.clone())
}

pub fn target(name: &str) -> Result<Target, GroupError> {
    let t = |name: &str, description: &str, group: PermGroup, automorphisms: PermGroup, full_aut: bool| Target {
        name: name.into(),
        description: description.into(),
        group,
        automorphisms,
        full_aut,
    };
    Ok(match name {
        "z3" => t("z3", "Z/3", cyclic(3), symmetric(3), true),
        "a4" => t("a4", "A4", alternating4(), symmetric(4), true),
        "psu33" => {
            let p = psu33_cached()?;
            t("psu33", "PSU(3,F3)", p.group.clone(), p.gamma_u()?, true)
        }
        "psu33xz3" => {
            let p = psu33_cached()?;
            t(
                "psu33xz3",
                "PSU(3,F3) x Z/3",
                direct_product(&p.group, &cyclic(3)),
                direct_product(&p.gamma_u()?, &symmetric(3)),
                true,
            )
        }
        "psu33xa4" => {
            let p = psu33_cached()?;
            t(
                "psu33xa4",
                "PSU(3,F3) x A4",
                direct_product(&p.group, &alternating4()),
                direct_product(&p.gamma_u()?, &symmetric(4)),
                true,
            )
        }
        "frob21" => {
            let (f, n) = frobenius21_abstract();
            t("frob21", "7:3", f, n, true)
        }
        other => return Err(GroupError::Invalid(format!("unknown target {other:?}; known: {}", TARGET_NAMES.join(", ")))),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_groups() {
        assert_eq!(alternating4().order(), 12);
        assert_eq!(cyclic(3).order(), 3);
        assert_eq!(direct_product(&cyclic(3), &cyclic(3)).order(), 9);
        assert_eq!(direct_product(&cyclic(3), &cyclic(4)).order(), 12);
        assert_eq!(direct_product(&cyclic(4), &cyclic(2)).order(), 8);
        let kernel: Vec<Perm> =
            alternating4().elements().unwrap().into_iter().filter(|g| a4_to_z3(g).unwrap().is_identity()).collect();
        assert_eq!(kernel.len(), 4);
        for x in alternating4().elements().unwrap() {
            for y in alternating4().elements().unwrap() {
                assert_eq!(a4_to_z3(&x.mul(&y)).unwrap(), a4_to_z3(&x).unwrap().mul(&a4_to_z3(&y).unwrap()));
            }
        }
    }

    #[test]
    fn frobenius_subgroup() {
        let p = psu33_cached().unwrap();
        let f = frobenius21(&p.group).unwrap();
        assert_eq!(f.group.order(), 21);
        assert!(!f.is_abelian);
        assert!(!f.is_normal);
        let (abs, n) = frobenius21_abstract();
        assert_eq!((abs.order(), n.order()), (21, 42));
    }

    #[test]
    fn targets() {
        for name in TARGET_NAMES {
            let t = target(name).unwrap();
            assert!(t.group.generators().iter().all(|g| t.automorphisms.contains(g)));
        }
        assert_eq!(target("psu33xa4").unwrap().group.order(), 72576);
        assert_eq!(target("psu33xz3").unwrap().group.order(), 18144);
    }
}
