//! The hermitian lattice over Z[ζ₁₂], its reduction at the prime over 3, and
//! PSU(3, F₃) acting on the 28 isotropic points.

use std::collections::HashMap;

use num_traits::ToPrimitive;

use crate::exactmath::CycloElem;

use super::gf9::Gf9;
use super::perm::{Perm, PermGroup};
use super::GroupError;

/// 3×3 matrix over Q(ζ₁₂).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct HermitianMatrix3 {
    pub m: [[CycloElem; 3]; 3],
}

impl HermitianMatrix3 {
    pub fn from_fn(f: impl Fn(usize, usize) -> CycloElem) -> Self {
        HermitianMatrix3 { m: std::array::from_fn(|i| std::array::from_fn(|j| f(i, j))) }
    }

    pub fn identity() -> Self {
        Self::from_fn(|i, j| if i == j { CycloElem::one() } else { CycloElem::zero() })
    }

    pub fn diag(d: [CycloElem; 3]) -> Self {
        Self::from_fn(|i, j| if i == j { d[i].clone() } else { CycloElem::zero() })
    }

    /// h = diag(1, 1, 1 − α)
    pub fn form_h() -> Self {
        Self::diag([CycloElem::one(), CycloElem::one(), &CycloElem::one() - &CycloElem::alpha()])
    }

    pub fn mul(&self, o: &Self) -> Self {
        Self::from_fn(|i, j| {
            (0..3).fold(CycloElem::zero(), |acc, k| &acc + &(&self.m[i][k] * &o.m[k][j]))
        })
    }

    pub fn add(&self, o: &Self) -> Self {
        Self::from_fn(|i, j| &self.m[i][j] + &o.m[i][j])
    }

    /// ᵗτ(x)
    pub fn tau_transpose(&self) -> Self {
        Self::from_fn(|i, j| self.m[j][i].tau())
    }

    pub fn is_integral(&self) -> bool {
        self.m.iter().flatten().all(|x| x.is_integral_coords())
    }

    /// ᵗτ(x) h x = h
    pub fn preserves(&self, h: &Self) -> bool {
        &self.tau_transpose().mul(h).mul(self) == h
    }

    /// Complex reflection x ↦ x − (1 − ε) h(v, x)/h(v, v) · v.
    pub fn reflection(v: [CycloElem; 3], eps: &CycloElem, h: &Self) -> Option<Self> {
        let hv: Vec<CycloElem> =
            (0..3).map(|j| (0..3).fold(CycloElem::zero(), |a, i| &a + &(&v[i].tau() * &h.m[i][j]))).collect();
        let hvv = (0..3).fold(CycloElem::zero(), |a, j| &a + &(&hv[j] * &v[j]));
        let c = &(&CycloElem::one() - eps) * &hvv.inverse()?;
        Some(Self::from_fn(|i, j| {
            let id = if i == j { CycloElem::one() } else { CycloElem::zero() };
            &id - &(&(&c * &v[i]) * &hv[j])
        }))
    }
}

/// Reduction Z[ζ₁₂] → F₉ at the prime over 3: ζ ↦ −i, so α ↦ 0 and β ↦ i.
pub fn reduce_elem(x: &CycloElem) -> Result<Gf9, GroupError> {
    if !x.is_integral_coords() {
        return Err(GroupError::Invalid(format!("{x} is not integral")));
    }
    let three = num_bigint::BigInt::from(3);
    let c: Vec<i64> = x.c.iter().map(|v| (v.to_integer() % &three).to_i64().expect("small")).collect();
    // 1, ζ, ζ², ζ³ ↦ 1, −i, −1, i
    Ok(Gf9::new(c[0] - c[2], c[3] - c[1]))
}

pub type Mat3 = [[Gf9; 3]; 3];

pub fn reduce_mod_p3(m: &HermitianMatrix3) -> Result<Mat3, GroupError> {
    let mut out = [[Gf9::ZERO; 3]; 3];
    for i in 0..3 {
        for j in 0..3 {
            out[i][j] = reduce_elem(&m.m[i][j])?;
        }
    }
    Ok(out)
}

pub fn mat_identity() -> Mat3 {
    let mut m = [[Gf9::ZERO; 3]; 3];
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = Gf9::ONE;
    }
    m
}

pub fn mat_mul(a: &Mat3, b: &Mat3) -> Mat3 {
    let mut m = [[Gf9::ZERO; 3]; 3];
    for i in 0..3 {
        for j in 0..3 {
            m[i][j] = (0..3).fold(Gf9::ZERO, |acc, k| acc + a[i][k] * b[k][j]);
        }
    }
    m
}

/// ᵗFrob(x)
pub fn mat_frob_transpose(a: &Mat3) -> Mat3 {
    let mut m = [[Gf9::ZERO; 3]; 3];
    for i in 0..3 {
        for j in 0..3 {
            m[i][j] = a[j][i].frob();
        }
    }
    m
}

pub fn mat_det(a: &Mat3) -> Gf9 {
    a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1]) - a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0])
        + a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0])
}

pub fn is_unitary(m: &Mat3, form: &Mat3) -> bool {
    &mat_mul(&mat_mul(&mat_frob_transpose(m), form), m) == form
}

pub type Point = [Gf9; 3];

/// ᵗFrob(x) · form · y
pub fn herm(form: &Mat3, x: &Point, y: &Point) -> Gf9 {
    let mut s = Gf9::ZERO;
    for i in 0..3 {
        for j in 0..3 {
            s = s + x[i].frob() * form[i][j] * y[j];
        }
    }
    s
}

/// Scales so the first nonzero coordinate is 1.
pub fn normalize(x: &Point) -> Option<Point> {
    let k = x.iter().position(|c| !c.is_zero())?;
    let inv = x[k].inv().expect("nonzero");
    Some([x[0] * inv, x[1] * inv, x[2] * inv])
}

pub fn projective_points() -> Vec<Point> {
    let mut out = Vec::new();
    for a in Gf9::all() {
        for b in Gf9::all() {
            for c in Gf9::all() {
                let p = [a, b, c];
                if normalize(&p) == Some(p) {
                    out.push(p);
                }
            }
        }
    }
    out.sort();
    out
}

/// Projective points with ᵗFrob(x) · form · x = 0.
pub fn isotropic_points(form: &Mat3) -> Result<Vec<Point>, GroupError> {
    if mat_frob_transpose(form) != *form {
        return Err(GroupError::Invalid("form is not hermitian".into()));
    }
    if mat_det(form).is_zero() {
        return Err(GroupError::Invalid("degenerate hermitian form".into()));
    }
    Ok(projective_points().into_iter().filter(|p| herm(form, p, p).is_zero()).collect())
}

pub fn mat_apply(m: &Mat3, x: &Point) -> Point {
    std::array::from_fn(|i| (0..3).fold(Gf9::ZERO, |acc, k| acc + m[i][k] * x[k]))
}

/// Permutation of `points` induced by a semilinear map.
pub fn induced_perm(points: &[Point], f: impl Fn(&Point) -> Point) -> Result<Perm, GroupError> {
    let index: HashMap<Point, u32> = points.iter().enumerate().map(|(i, p)| (*p, i as u32)).collect();
    let mut img = Vec::with_capacity(points.len());
    for p in points {
        let q = normalize(&f(p)).ok_or_else(|| GroupError::Invalid("map is singular".into()))?;
        img.push(*index.get(&q).ok_or_else(|| GroupError::Invalid("point set is not invariant".into()))?);
    }
    Perm::from_images(img)
}

/// Unitary transvection x ↦ x + a · h(v, x) · v, for isotropic v and a + ā = 0.
pub fn transvection(v: &Point, a: Gf9) -> Mat3 {
    let mut m = mat_identity();
    for i in 0..3 {
        for j in 0..3 {
            m[i][j] = m[i][j] + a * v[i] * v[j].frob();
        }
    }
    m
}

#[derive(Debug, Clone)]
pub struct Psu33 {
    pub points: Vec<Point>,
    pub matrices: Vec<Mat3>,
    pub group: PermGroup,
    /// coordinatewise Frobenius on the points
    pub frobenius: Perm,
}

pub const PSU33_ORDER: u128 = 6048;

/// q³(q² − 1)(q³ + 1)/gcd(3, q + 1)
pub fn psu3_order_formula(q: u128) -> u128 {
    let g = if (q + 1).is_multiple_of(3) { 3 } else { 1 };
    q.pow(3) * (q * q - 1) * (q.pow(3) + 1) / g
}

/// PSU(3, F₃) on the 28 isotropic points of the identity form, generated by
/// transvections taken in the order of the sorted point list, keeping only
/// those that enlarge the group.
pub fn build_psu33() -> Result<Psu33, GroupError> {
    let form = mat_identity();
    let points = isotropic_points(&form)?;
    let n = points.len();
    let mut gens: Vec<Perm> = Vec::new();
    let mut mats = Vec::new();
    let mut current = PermGroup::trivial(n);
    'outer: for v in &points {
        for a in [Gf9::I, -Gf9::I] {
            let t = transvection(v, a);
            debug_assert!(is_unitary(&t, &form));
            let p = induced_perm(&points, |x| mat_apply(&t, x))?;
            if current.contains(&p) {
                continue;
            }
            gens.push(p);
            mats.push(t);
            current = PermGroup::new(n, gens.clone())?;
            if current.order() == PSU33_ORDER {
                break 'outer;
            }
        }
    }
    if current.order() != PSU33_ORDER {
        return Err(GroupError::Construction(format!("transvections generate a group of order {}", current.order())));
    }
    let frobenius = induced_perm(&points, |x| [x[0].frob(), x[1].frob(), x[2].frob()])?;
    Ok(Psu33 { points, matrices: mats, group: current, frobenius })
}

impl Psu33 {
    /// PΓU(3, F₃) = ⟨PSU(3, F₃), Frobenius⟩, of order 12096.
    pub fn gamma_u(&self) -> Result<PermGroup, GroupError> {
        let mut g = self.group.generators().to_vec();
        g.push(self.frobenius.clone());
        PermGroup::new(self.points.len(), g)
    }
}

/// Scalars λI in SU(3, F₃): λ^(q+1) = 1 and λ³ = 1.
pub fn su3_center_size() -> usize {
    Gf9::all().filter(|l| !l.is_zero() && l.norm() == 1 && l.pow(3) == Gf9::ONE).count()
}

/// Some elements of U(h, Z[ζ₁₂]): diagonal roots of unity, the swap of the
/// first two coordinates, and reflections in (1, 0, 1), (0, 1, 1), (1, 1, 0)
/// (h((1,0,1),(1,0,1)) = 2 − α is a unit).
pub fn lattice_unitaries() -> Vec<HermitianMatrix3> {
    let h = HermitianMatrix3::form_h();
    let z = CycloElem::zeta();
    let mut out = vec![
        HermitianMatrix3::identity(),
        HermitianMatrix3::diag([z.clone(), z.pow(11), CycloElem::one()]),
        HermitianMatrix3::diag([CycloElem::one(), z.pow(3), z.pow(4)]),
        HermitianMatrix3::from_fn(|i, j| {
            if (i, j) == (0, 1) || (i, j) == (1, 0) || (i, j) == (2, 2) {
                CycloElem::one()
            } else {
                CycloElem::zero()
            }
        }),
    ];
    let one = CycloElem::one;
    let zero = CycloElem::zero;
    for v in [[one(), zero(), one()], [zero(), one(), one()], [one(), one(), zero()]] {
        for k in [1u32, 3, 4, 6] {
            if let Some(r) = HermitianMatrix3::reflection(v.clone(), &z.pow(k), &h) {
                if r.is_integral() {
                    out.push(r);
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduction() {
        assert_eq!(reduce_elem(&CycloElem::alpha()).unwrap(), Gf9::ZERO);
        assert_eq!(reduce_elem(&CycloElem::beta()).unwrap(), Gf9::I);
        assert_eq!(reduce_mod_p3(&HermitianMatrix3::form_h()).unwrap(), mat_identity());
        for x in [CycloElem::zeta(), CycloElem::alpha(), CycloElem::from_ints([2, -1, 5, 7])] {
            assert_eq!(reduce_elem(&x.tau()).unwrap(), reduce_elem(&x).unwrap().frob());
        }
        assert!(reduce_elem(&CycloElem::rational(crate::exactmath::q(1, 2))).is_err());
    }

    #[test]
    fn lattice_witnesses_reduce_to_unitaries() {
        let h = HermitianMatrix3::form_h();
        let us = lattice_unitaries();
        assert!(us.len() > 8);
        for u in &us {
            assert!(u.preserves(&h), "{u:?}");
            let r = reduce_mod_p3(u).unwrap();
            assert!(is_unitary(&r, &mat_identity()));
        }
    }

    #[test]
    fn isotropic_counts() {
        let pts = isotropic_points(&mat_identity()).unwrap();
        assert_eq!(pts.len(), 28);
        assert_eq!(projective_points().len() - pts.len(), 63);
        let mut deg = mat_identity();
        deg[2][2] = Gf9::ZERO;
        assert!(isotropic_points(&deg).is_err());
    }

    #[test]
    fn psu33() {
        let p = build_psu33().unwrap();
        assert_eq!(p.group.order(), 6048);
        assert_eq!(psu3_order_formula(3), 6048);
        assert!(p.group.is_transitive());
        assert_eq!(su3_center_size(), 1);
        assert_eq!(p.gamma_u().unwrap().order(), 12096);
    }
}
