//! The six-line arrangement on P², its Σ₃ quotient, and the stratified
//! Euler characteristic of the (2,2,2,7,11)/12 orbifold.

use num_traits::{One, Zero};
use serde::Serialize;

use crate::exactmath::interval::serialize_q;
use crate::exactmath::{q, qi, CycloElem, Q};

use super::tuple::{curve_weights, BallTuple};
use super::DmError;

pub type Vec3 = [CycloElem; 3];

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Stratum {
    pub label: String,
    #[serde(serialize_with = "serialize_q")]
    pub chi: Q,
    pub weight: u64,
}

impl Stratum {
    pub fn new(label: &str, chi: Q, weight: u64) -> Self {
        Stratum { label: label.into(), chi, weight }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Stratification {
    pub strata: Vec<Stratum>,
}

/// Σ χᵢ / wᵢ.
pub fn orbifold_euler(s: &Stratification) -> Result<Q, DmError> {
    let mut e = Q::zero();
    for st in &s.strata {
        if st.weight == 0 {
            return Err(DmError::Invalid(format!("stratum {} has weight 0", st.label)));
        }
        e += &st.chi / qi(st.weight as i64);
    }
    Ok(e)
}

/// Sphere with cone points of the given orders.
pub fn triangle_stratification(r: &[u64]) -> Stratification {
    let mut strata = vec![Stratum::new("open", qi(2 - r.len() as i64), 1)];
    for (i, &w) in r.iter().enumerate() {
        strata.push(Stratum::new(&format!("cone{}", i + 1), Q::one(), w));
    }
    Stratification { strata }
}

/// Stratum data for the orbifold, as derived by `derive_stratification` and
/// frozen here: (label, χ, weight).
pub const FROZEN_STRATA: [(&str, i64, u64); 8] = [
    ("open", 0, 1),
    ("C1", -1, 4),
    ("C2", -1, 3),
    ("z1", 1, 288),
    ("z2", 1, 24),
    ("z3", 1, 12),
    ("z4", 1, 8),
    ("z5", 1, 3),
];

/// Local groups at the marked points, with their orders.
pub const LOCAL_GROUPS: [(&str, &str, u64); 5] = [
    ("z1", "G10", 288),
    ("z2", "G4", 24),
    ("z3", "Z/3 x Z/4", 12),
    ("z4", "Z/4 x Z/2", 8),
    ("z5", "Z/3", 3),
];

pub fn frozen_stratification() -> Stratification {
    Stratification { strata: FROZEN_STRATA.iter().map(|(l, c, w)| Stratum::new(l, qi(*c), *w)).collect() }
}

fn c(n: i64) -> CycloElem {
    CycloElem::rational(qi(n))
}

fn dot(a: &Vec3, b: &Vec3) -> CycloElem {
    &(&(&a[0] * &b[0]) + &(&a[1] * &b[1])) + &(&a[2] * &b[2])
}

fn cross(a: &Vec3, b: &Vec3) -> Vec3 {
    [
        &(&a[1] * &b[2]) - &(&a[2] * &b[1]),
        &(&a[2] * &b[0]) - &(&a[0] * &b[2]),
        &(&a[0] * &b[1]) - &(&a[1] * &b[0]),
    ]
}

fn is_null(v: &Vec3) -> bool {
    v.iter().all(|x| x.is_zero())
}

/// Projective equality.
pub fn same_point(a: &Vec3, b: &Vec3) -> bool {
    is_null(&cross(a, b))
}

/// Null space of a 3×3 matrix over Q(ζ₁₂).
fn kernel(m: &[Vec3; 3]) -> Vec<Vec3> {
    let mut rows: Vec<Vec3> = m.to_vec();
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..3 {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][col].is_zero()) else { continue };
        rows.swap(r, p);
        let inv = rows[r][col].inverse().expect("nonzero");
        rows[r] = rows[r].clone().map(|x| &x * &inv);
        for i in 0..rows.len() {
            if i != r && !rows[i][col].is_zero() {
                let f = rows[i][col].clone();
                let pr = rows[r].clone();
                for k in 0..3 {
                    rows[i][k] = &rows[i][k] - &(&f * &pr[k]);
                }
            }
        }
        pivots.push(col);
        r += 1;
    }
    let free: Vec<usize> = (0..3).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v: Vec3 = [c(0), c(0), c(0)];
            v[f] = c(1);
            for (i, &pc) in pivots.iter().enumerate() {
                v[pc] = -&rows[i][f];
            }
            v
        })
        .collect()
}

/// A permutation σ of the coordinates, acting by (x₁, x₂, x₃) ↦ (x_{σ⁻¹(1)}, …).
pub fn s3() -> Vec<[usize; 3]> {
    vec![[0, 1, 2], [1, 0, 2], [0, 2, 1], [2, 1, 0], [1, 2, 0], [2, 0, 1]]
}

fn perm_matrix(p: &[usize; 3]) -> [Vec3; 3] {
    let mut m: [Vec3; 3] = std::array::from_fn(|_| [c(0), c(0), c(0)]);
    for (i, &j) in p.iter().enumerate() {
        m[j][i] = c(1);
    }
    m
}

/// A projective linear subspace fixed pointwise: a point or a line (given by its normal).
#[derive(Debug, Clone)]
enum FixedPiece {
    Point(Vec3),
    Line(Vec3),
    Plane,
}

fn fixed_pieces(p: &[usize; 3]) -> Vec<FixedPiece> {
    let m = perm_matrix(p);
    let w = CycloElem::omega();
    let eigen = [c(1), c(-1), w.clone(), &w * &w];
    let mut out = Vec::new();
    for lam in eigen {
        let mut a = m.clone();
        for (i, row) in a.iter_mut().enumerate() {
            row[i] = &row[i] - &lam;
        }
        let k = kernel(&a);
        match k.len() {
            1 => out.push(FixedPiece::Point(k[0].clone())),
            2 => out.push(FixedPiece::Line(cross(&k[0], &k[1]))),
            3 => out.push(FixedPiece::Plane),
            _ => {}
        }
    }
    out
}

#[derive(Debug, Clone)]
pub struct Line {
    /// 1-based labels {i, j} with μᵢ + μⱼ ≤ 1
    pub pair: (usize, usize),
    pub normal: Vec3,
    pub equation: &'static str,
}

#[derive(Debug, Clone)]
pub struct MarkedPoint {
    pub label: &'static str,
    pub coords: Vec3,
}

#[derive(Debug, Clone)]
pub struct SixLines {
    pub lines: Vec<Line>,
    pub points: Vec<MarkedPoint>,
    /// incidence[p][l]: point p lies on line l
    pub incidence: Vec<Vec<bool>>,
    /// each triple {i,j,k} with μ-sum ≤ 1 and the marked point where its three pair-lines meet
    pub triples: Vec<((usize, usize, usize), &'static str)>,
}

impl SixLines {
    pub fn lines_through(&self, label: &str) -> Vec<usize> {
        let mut v: Vec<usize> = self
            .points
            .iter()
            .enumerate()
            .filter(|(_, p)| p.label == label)
            .map(|(i, _)| self.incidence[i].iter().filter(|&&b| b).count())
            .collect();
        v.dedup();
        v
    }

    pub fn orbit_size(&self, label: &str) -> usize {
        self.points.iter().filter(|p| p.label == label).count()
    }
}

/// The arrangement x = 0, y = 0, z = 0, x = y, y = z, x = z with the marked
/// points z₁, …, z₅ (all lifts), for the tuple (2,2,2,7,11)/12.
///
/// The line attached to a pair is fixed by concurrency: the lines of the three
/// sub-pairs of an admissible triple pass through one marked point.
pub fn six_lines_data() -> Result<SixLines, DmError> {
    let w = CycloElem::omega();
    let w2 = &w * &w;
    let lines = vec![
        Line { pair: (1, 4), normal: [c(1), c(0), c(0)], equation: "x1 = 0" },
        Line { pair: (2, 4), normal: [c(0), c(1), c(0)], equation: "x2 = 0" },
        Line { pair: (3, 4), normal: [c(0), c(0), c(1)], equation: "x3 = 0" },
        Line { pair: (2, 3), normal: [c(0), c(1), c(-1)], equation: "x2 = x3" },
        Line { pair: (1, 3), normal: [c(1), c(0), c(-1)], equation: "x1 = x3" },
        Line { pair: (1, 2), normal: [c(1), c(-1), c(0)], equation: "x1 = x2" },
    ];
    let pt = |label, v: [i64; 3]| MarkedPoint { label, coords: [c(v[0]), c(v[1]), c(v[2])] };
    let points = vec![
        pt("z1", [1, 0, 0]),
        pt("z1", [0, 1, 0]),
        pt("z1", [0, 0, 1]),
        pt("z2", [1, 1, 1]),
        pt("z3", [1, 1, 0]),
        pt("z3", [1, 0, 1]),
        pt("z3", [0, 1, 1]),
        pt("z4", [0, 1, -1]),
        pt("z4", [1, 0, -1]),
        pt("z4", [1, -1, 0]),
        MarkedPoint { label: "z5", coords: [c(1), w.clone(), w2.clone()] },
        MarkedPoint { label: "z5", coords: [c(1), w2, w] },
    ];
    let incidence: Vec<Vec<bool>> =
        points.iter().map(|p| lines.iter().map(|l| dot(&l.normal, &p.coords).is_zero()).collect()).collect();

    let t = BallTuple::hurwitz();
    let mu = t.mu();
    // pair ↔ line: pairs with μ-sum ≤ 1 are exactly the six listed
    let mut admissible = Vec::new();
    for i in 0..5 {
        for j in i + 1..5 {
            if &mu[i] + &mu[j] <= Q::one() {
                admissible.push((i + 1, j + 1));
            }
        }
    }
    let mut have: Vec<_> = lines.iter().map(|l| l.pair).collect();
    have.sort();
    if have != admissible {
        return Err(DmError::Invalid("line labels do not match the admissible pairs".into()));
    }
    let mut triples = Vec::new();
    for i in 0..5 {
        for j in i + 1..5 {
            for k in j + 1..5 {
                if &mu[i] + &mu[j] + &mu[k] > Q::one() {
                    continue;
                }
                let subs = [(i + 1, j + 1), (i + 1, k + 1), (j + 1, k + 1)];
                let idx: Vec<usize> =
                    subs.iter().map(|s| lines.iter().position(|l| l.pair == *s).expect("admissible")).collect();
                let meet = cross(&lines[idx[0]].normal, &lines[idx[1]].normal);
                if !dot(&lines[idx[2]].normal, &meet).is_zero() {
                    return Err(DmError::Invalid(format!("lines of triple {:?} are not concurrent", (i + 1, j + 1, k + 1))));
                }
                let p = points
                    .iter()
                    .find(|p| same_point(&p.coords, &meet))
                    .ok_or_else(|| DmError::Invalid("concurrency point is not marked".into()))?;
                triples.push(((i + 1, j + 1, k + 1), p.label));
            }
        }
    }
    Ok(SixLines { lines, points, incidence, triples })
}

#[derive(Debug, Clone)]
enum UpStratum {
    Point(usize),
    Line(usize),
    Open,
}

struct Upstairs<'a> {
    six: &'a SixLines,
}

impl Upstairs<'_> {
    fn on_line(&self, p: &Vec3, l: usize) -> bool {
        dot(&self.six.lines[l].normal, p).is_zero()
    }

    fn is_marked(&self, p: &Vec3) -> bool {
        self.six.points.iter().any(|m| same_point(&m.coords, p))
    }

    fn marked_on_line(&self, l: usize) -> usize {
        (0..self.six.points.len()).filter(|&i| self.six.incidence[i][l]).count()
    }

    /// χ of the stratum itself.
    fn chi(&self, s: &UpStratum) -> i64 {
        match s {
            UpStratum::Point(_) => 1,
            UpStratum::Line(l) => 2 - self.marked_on_line(*l) as i64,
            UpStratum::Open => {
                let lines: i64 = (0..self.six.lines.len()).map(|l| self.chi(&UpStratum::Line(l))).sum();
                3 - lines - self.six.points.len() as i64
            }
        }
    }

    /// χ of the part of the stratum fixed by the permutation.
    fn chi_fixed(&self, s: &UpStratum, pieces: &[FixedPiece]) -> i64 {
        let mut total = 0;
        for piece in pieces {
            total += match (piece, s) {
                (FixedPiece::Plane, _) => self.chi(s),
                (FixedPiece::Point(p), UpStratum::Point(i)) => same_point(p, &self.six.points[*i].coords) as i64,
                (FixedPiece::Line(n), UpStratum::Point(i)) => dot(n, &self.six.points[*i].coords).is_zero() as i64,
                (FixedPiece::Point(p), UpStratum::Line(l)) => (self.on_line(p, *l) && !self.is_marked(p)) as i64,
                (FixedPiece::Line(n), UpStratum::Line(l)) => {
                    let meet = cross(n, &self.six.lines[*l].normal);
                    if is_null(&meet) {
                        self.chi(s)
                    } else {
                        (!self.is_marked(&meet)) as i64
                    }
                }
                (FixedPiece::Point(p), UpStratum::Open) => {
                    let on_any = (0..self.six.lines.len()).any(|l| self.on_line(p, l));
                    (!on_any && !self.is_marked(p)) as i64
                }
                (FixedPiece::Line(n), UpStratum::Open) => {
                    if self.six.lines.iter().any(|l| is_null(&cross(n, &l.normal))) {
                        0
                    } else {
                        let mut removed: Vec<Vec3> = Vec::new();
                        for l in &self.six.lines {
                            let m = cross(n, &l.normal);
                            if !removed.iter().any(|r| same_point(r, &m)) {
                                removed.push(m);
                            }
                        }
                        for m in &self.six.points {
                            if dot(n, &m.coords).is_zero() && !removed.iter().any(|r| same_point(r, &m.coords)) {
                                removed.push(m.coords.clone());
                            }
                        }
                        2 - removed.len() as i64
                    }
                }
            };
        }
        total
    }
}

/// χ of each Σ₃-orbit of strata in P², computed as (1/6) Σ_g χ(S^g), and the
/// orbifold weights from the tuple (curves) and the local groups (points).
pub fn derive_stratification() -> Result<Stratification, DmError> {
    let six = six_lines_data()?;
    let up = Upstairs { six: &six };
    let group = s3();
    let pieces: Vec<Vec<FixedPiece>> = group.iter().map(fixed_pieces).collect();

    // every intersection of two lines must be a marked point
    for a in 0..six.lines.len() {
        for b in a + 1..six.lines.len() {
            if !up.is_marked(&cross(&six.lines[a].normal, &six.lines[b].normal)) {
                return Err(DmError::Invalid("unmarked double point in the arrangement".into()));
            }
        }
    }

    let quotient_chi = |members: &[UpStratum]| -> Q {
        let sum: i64 = pieces.iter().map(|pc| members.iter().map(|s| up.chi_fixed(s, pc)).sum::<i64>()).sum();
        q(sum, group.len() as i64)
    };

    let weights = curve_weights(&BallTuple::hurwitz())?;
    let mut strata = vec![Stratum::new("open", quotient_chi(&[UpStratum::Open]), 1)];
    let coord_lines: Vec<UpStratum> = (0..6).filter(|&l| six.lines[l].pair.1 == 4).map(UpStratum::Line).collect();
    let diag_lines: Vec<UpStratum> = (0..6).filter(|&l| six.lines[l].pair.1 != 4).map(UpStratum::Line).collect();
    strata.push(Stratum::new("C1", quotient_chi(&coord_lines), weights.c1));
    strata.push(Stratum::new("C2", quotient_chi(&diag_lines), weights.c2));
    for (label, _, w) in LOCAL_GROUPS {
        let members: Vec<UpStratum> =
            (0..six.points.len()).filter(|&i| six.points[i].label == label).map(UpStratum::Point).collect();
        strata.push(Stratum::new(label, quotient_chi(&members), w));
    }
    Ok(Stratification { strata })
}

/// The stratification used by default; equal to the derived one.
pub fn builtin_stratification() -> Stratification {
    frozen_stratification()
}

/// Euler characteristic of the underlying space P²/Σ₃.
pub fn underlying_chi(s: &Stratification) -> Q {
    s.strata.iter().map(|x| x.chi.clone()).sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn incidence_counts() {
        let six = six_lines_data().unwrap();
        assert_eq!(six.lines_through("z1"), vec![3]);
        assert_eq!(six.lines_through("z2"), vec![3]);
        assert_eq!(six.lines_through("z3"), vec![2]);
        assert_eq!(six.lines_through("z4"), vec![1]);
        assert_eq!(six.lines_through("z5"), vec![0]);
        assert_eq!(six.orbit_size("z1"), 3);
        assert_eq!(six.orbit_size("z5"), 2);
        let labels: Vec<_> = six.triples.iter().map(|t| t.1).collect();
        assert_eq!(labels, vec!["z2", "z1", "z1", "z1"]);
    }

    #[test]
    fn derivation_matches_frozen() {
        let d = derive_stratification().unwrap();
        assert_eq!(d, frozen_stratification());
        assert_eq!(orbifold_euler(&d).unwrap(), q(1, 288));
        assert_eq!(underlying_chi(&d), qi(3));
    }

    #[test]
    fn triangle_and_manifold() {
        assert_eq!(orbifold_euler(&triangle_stratification(&[2, 3, 7])).unwrap(), q(-1, 42));
        let m = Stratification { strata: vec![Stratum::new("S2", qi(2), 1)] };
        assert_eq!(orbifold_euler(&m).unwrap(), qi(2));
    }
}
