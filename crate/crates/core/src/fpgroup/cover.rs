use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use serde::Serialize;

use super::abelian::SparseRelations;
use super::{CosetTable, FiniteQuotientMap, FpError, Presentation, Word};
use crate::dmorbifold::surface::orbifold_volume;
use crate::exactmath::interval::serialize_q;
use crate::exactmath::{q, RealInterval, Q};
use crate::finitegrp::{embed_pair, Perm, PermGroup};

use super::kernel::G10_ORDER;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct CoverInvariants {
    pub index: u128,
    /// e(S) = index / 288
    #[serde(serialize_with = "serialize_q")]
    pub euler_char: Q,
    pub integral: bool,
    pub volume: RealInterval,
}

pub fn cover_invariants(m: &FiniteQuotientMap, eps: &Q) -> Result<CoverInvariants, FpError> {
    let index = m.image_order();
    let e = q(index as i64, G10_ORDER as i64);
    let volume = orbifold_volume(&e, eps).map_err(|err| FpError::Invalid(err.to_string()))?;
    Ok(CoverInvariants { index, integral: e.is_integer(), euler_char: e, volume })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct CoverRelation {
    pub holds: bool,
    /// [ker(base) : ker(cover)] when the relation holds
    pub degree: Option<u128>,
    pub diagonal_order: u128,
}

/// Whether ker(cover) ⊆ ker(base), i.e. x_cover(g) ↦ x_base(g) extends to
/// a homomorphism image(cover) → image(base). The diagonal subgroup
/// ⟨(x_cover(g), x_base(g))⟩ is the graph of that map exactly when its
/// order equals |image(cover)|; the cover is then regular of degree
/// |image(cover)| / |image(base)|.
pub fn regular_cover_relation(cover: &FiniteQuotientMap, base: &FiniteQuotientMap) -> Result<CoverRelation, FpError> {
    if cover.images.len() != base.images.len() {
        return Err(FpError::Invalid("maps are defined on different generator sets".into()));
    }
    let gens: Vec<Perm> = cover.images.iter().zip(&base.images).map(|(a, b)| embed_pair(a, b)).collect();
    let deg = cover.target.degree() + base.target.degree();
    let diagonal_order = PermGroup::new(deg, gens)?.order();
    let oc = cover.image_order();
    let ob = base.image_order();
    let holds = diagonal_order == oc;
    Ok(CoverRelation { holds, degree: holds.then(|| oc / ob), diagonal_order })
}

/// Schreier transversal of a complete table: for each coset other than 0
/// the column through which it was first reached (breadth first).
fn spanning_tree(t: &CosetTable) -> Vec<Option<(usize, usize)>> {
    let mut parent = vec![None; t.index()];
    let mut seen = vec![false; t.index()];
    seen[0] = true;
    let mut queue = std::collections::VecDeque::from([0usize]);
    while let Some(c) = queue.pop_front() {
        for col in 0..2 * t.ngens {
            let d = t.act(c, col);
            if !seen[d] {
                seen[d] = true;
                parent[d] = Some((c, col));
                queue.push_back(d);
            }
        }
    }
    parent
}

/// Schreier generators: non-tree edges c -g-> c·g, numbered in order.
fn schreier_generators(t: &CosetTable) -> (HashMap<(usize, usize), usize>, Vec<(usize, usize)>) {
    let parent = spanning_tree(t);
    let mut tree = std::collections::HashSet::new();
    for (d, p) in parent.iter().enumerate() {
        if let Some((c, col)) = *p {
            // store as the positive-generator edge
            if col % 2 == 0 {
                tree.insert((c, col / 2));
            } else {
                tree.insert((d, col / 2));
            }
        }
    }
    let mut index = HashMap::new();
    let mut list = Vec::new();
    for c in 0..t.index() {
        for g in 0..t.ngens {
            if !tree.contains(&(c, g)) {
                index.insert((c, g), list.len());
                list.push((c, g));
            }
        }
    }
    (index, list)
}

/// Rewrites `w` read from coset `c` as Schreier generators.
fn rewrite(t: &CosetTable, index: &HashMap<(usize, usize), usize>, c: usize, w: &Word) -> (usize, Vec<(usize, i32)>) {
    let mut x = c;
    let mut out = Vec::new();
    for col in w.columns() {
        let g = col / 2;
        if col % 2 == 0 {
            if let Some(&s) = index.get(&(x, g)) {
                out.push((s, 1));
            }
            x = t.act(x, col);
        } else {
            let y = t.act(x, col);
            if let Some(&s) = index.get(&(y, g)) {
                out.push((s, -1));
            }
            x = y;
        }
    }
    (x, out)
}

/// Reidemeister–Schreier presentation of the subgroup with coset table `t`.
pub fn reidemeister_schreier(p: &Presentation, t: &CosetTable) -> Result<Presentation, FpError> {
    check_table(p, t)?;
    let (index, list) = schreier_generators(t);
    let names: Vec<String> = list.iter().map(|(c, g)| format!("s{c}_{}", p.generators()[*g])).collect();
    let mut rels = Vec::new();
    for c in 0..t.index() {
        for r in p.relators() {
            let (end, w) = rewrite(t, &index, c, r);
            if end != c {
                return Err(FpError::Incomplete("relator does not close in the table".into()));
            }
            rels.push(Word::from_letters(w));
        }
    }
    Presentation::new(names, rels)
}

fn check_table(p: &Presentation, t: &CosetTable) -> Result<(), FpError> {
    if t.ngens != p.ngens() || t.index() == 0 {
        return Err(FpError::Incomplete("coset table does not match the presentation".into()));
    }
    if t.table.iter().any(|row| row.len() != 2 * t.ngens || row.iter().any(|&d| d as usize >= t.index())) {
        return Err(FpError::Incomplete("coset table has undefined entries".into()));
    }
    Ok(())
}

/// Abelian invariants of the subgroup with coset table `t`, going straight
/// from the rewritten relators to a sparse relation matrix.
pub fn subgroup_abelian_invariants(p: &Presentation, t: &CosetTable) -> Result<Vec<BigInt>, FpError> {
    check_table(p, t)?;
    let (index, list) = schreier_generators(t);
    let mut rel = SparseRelations::new(list.len());
    for c in 0..t.index() {
        for r in p.relators() {
            let (end, w) = rewrite(t, &index, c, r);
            if end != c {
                return Err(FpError::Incomplete("relator does not close in the table".into()));
            }
            let mut row: BTreeMap<usize, i64> = BTreeMap::new();
            for (s, e) in w {
                *row.entry(s).or_insert(0) += e as i64;
            }
            rel.push(row);
        }
    }
    Ok(rel.invariants())
}

/// Coset table of ker(m): the right regular action of the image on itself.
pub fn kernel_coset_table(m: &FiniteQuotientMap) -> Result<CosetTable, FpError> {
    let elems = m.image().elements()?;
    let idx: HashMap<&Perm, u32> = elems.iter().enumerate().map(|(i, e)| (e, i as u32)).collect();
    let acts: Vec<Perm> = m
        .images
        .iter()
        .map(|x| Perm::from_images(elems.iter().map(|e| idx[&e.mul(x)]).collect()))
        .collect::<Result<_, _>>()?;
    let id = idx[&Perm::identity(m.target.degree())];
    Ok(CosetTable::from_action(&acts, id))
}

/// Coset table of ρ⁻¹(K) for a subgroup K of the image of ρ = `m`: the
/// action on right cosets Kh.
pub fn preimage_coset_table(m: &FiniteQuotientMap, k: &PermGroup) -> Result<CosetTable, FpError> {
    let image = m.image();
    if k.degree() != m.target.degree() || !k.generators().iter().all(|x| image.contains(x)) {
        return Err(FpError::Invalid("subgroup is not contained in the image".into()));
    }
    let ke = k.elements()?;
    let rep = |h: &Perm| ke.iter().map(|x| x.mul(h)).min().expect("nonempty");
    let mut idx: HashMap<Perm, u32> = HashMap::new();
    let mut reps = Vec::new();
    for h in image.elements()? {
        let r = rep(&h);
        if !idx.contains_key(&r) {
            idx.insert(r.clone(), reps.len() as u32);
            reps.push(r);
        }
    }
    let acts: Vec<Perm> = m
        .images
        .iter()
        .map(|g| Perm::from_images(reps.iter().map(|r| idx[&rep(&r.mul(g))]).collect()))
        .collect::<Result<_, _>>()?;
    let base = idx[&rep(&Perm::identity(m.target.degree()))];
    Ok(CosetTable::from_action(&acts, base))
}

/// H₁ of the kernel of `m` on Γ.
pub fn kernel_homology(p: &Presentation, m: &FiniteQuotientMap) -> Result<Vec<BigInt>, FpError> {
    subgroup_abelian_invariants(p, &kernel_coset_table(m)?)
}

/// Hodge numbers of a ball quotient from e and the rank of H₁:
/// q = b₁/2, χ(O) = e/3 = 1 − q + p_g, e = 2 − 4q + 2p_g + h¹¹.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct HodgeNumbers {
    pub b1: i64,
    pub q: i64,
    pub p_g: i64,
    pub h11: i64,
}

pub fn hodge_numbers(e: i64, b1: i64) -> Result<HodgeNumbers, FpError> {
    if e % 3 != 0 || b1 % 2 != 0 {
        return Err(FpError::Invalid(format!("e = {e}, b1 = {b1} do not come from a ball quotient")));
    }
    let q = b1 / 2;
    let p_g = e / 3 - 1 + q;
    Ok(HodgeNumbers { b1, q, p_g, h11: e - 2 + 4 * q - 2 * p_g })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fpgroup::{abelianization, todd_coxeter};

    #[test]
    fn hodge() {
        let h = hodge_numbers(63, 14).unwrap();
        assert_eq!((h.q, h.p_g, h.h11), (7, 27, 35));
        let h = hodge_numbers(252, 14).unwrap();
        assert_eq!((h.q, h.p_g, h.h11), (7, 90, 98));
    }

    #[test]
    fn schreier_on_cyclic() {
        let p = Presentation::parse(&["x"], &["x^4"]).unwrap();
        let t = todd_coxeter(&p, &[p.word("x^2").unwrap()], 100).unwrap();
        let crate::fpgroup::Enumeration::Complete(t) = t else { panic!() };
        assert_eq!(t.index(), 2);
        let sub = reidemeister_schreier(&p, &t).unwrap();
        assert_eq!(abelianization(&sub), vec![BigInt::from(2)]);
        assert_eq!(subgroup_abelian_invariants(&p, &t).unwrap(), vec![BigInt::from(2)]);
    }

    #[test]
    fn subgroup_of_s3() {
        let p = Presentation::parse(&["a", "b"], &["a^2", "b^3", "(a b)^2"]).unwrap();
        let crate::fpgroup::Enumeration::Complete(t) = todd_coxeter(&p, &[p.word("b").unwrap()], 100).unwrap() else {
            panic!()
        };
        assert_eq!(t.index(), 2);
        assert_eq!(subgroup_abelian_invariants(&p, &t).unwrap(), vec![BigInt::from(3)]);
    }
}
