use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::sync::OnceLock;

use num_integer::Integer;
use rand::Rng;

use super::GroupError;

/// A permutation of {0, …, n−1}, stored as its image list. Products compose
/// left to right: x^(gh) = (x^g)^h.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm(Vec<u32>);

impl Perm {
    pub fn identity(n: usize) -> Self {
        Perm((0..n as u32).collect())
    }

    pub fn from_images(images: Vec<u32>) -> Result<Self, GroupError> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            if x as usize >= n || seen[x as usize] {
                return Err(GroupError::Invalid(format!("not a permutation: {images:?}")));
            }
            seen[x as usize] = true;
        }
        Ok(Perm(images))
    }

    /// 0-based cycles.
    pub fn from_cycles(n: usize, cycles: &[&[u32]]) -> Result<Self, GroupError> {
        let mut img: Vec<u32> = (0..n as u32).collect();
        let mut used = vec![false; n];
        for cyc in cycles {
            for (k, &x) in cyc.iter().enumerate() {
                if x as usize >= n || used[x as usize] {
                    return Err(GroupError::Invalid(format!("bad cycle {cyc:?}")));
                }
                used[x as usize] = true;
                img[x as usize] = cyc[(k + 1) % cyc.len()];
            }
        }
        Ok(Perm(img))
    }

    /// Cycle notation with 1-based points, e.g. "(1,2,3)(4,5)".
    pub fn parse(n: usize, s: &str) -> Result<Self, GroupError> {
        let s = s.trim();
        if s == "()" || s.is_empty() {
            return Ok(Self::identity(n));
        }
        let mut cycles: Vec<Vec<u32>> = Vec::new();
        for part in s.split(')') {
            let part = part.trim();
            if part.is_empty() {
                continue;
            }
            let body = part
                .strip_prefix('(')
                .ok_or_else(|| GroupError::Invalid(format!("bad cycle notation {s:?}")))?;
            let pts: Result<Vec<u32>, _> = body.split(',').map(|t| t.trim().parse::<u32>()).collect();
            let pts = pts.map_err(|_| GroupError::Invalid(format!("bad cycle notation {s:?}")))?;
            if pts.contains(&0) {
                return Err(GroupError::Invalid("points are 1-based".into()));
            }
            cycles.push(pts.into_iter().map(|p| p - 1).collect());
        }
        let refs: Vec<&[u32]> = cycles.iter().map(|c| c.as_slice()).collect();
        Self::from_cycles(n, &refs)
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn images(&self) -> &[u32] {
        &self.0
    }

    #[inline]
    pub fn apply(&self, x: u32) -> u32 {
        self.0[x as usize]
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &x)| i as u32 == x)
    }

    pub fn mul(&self, other: &Perm) -> Perm {
        Perm(self.0.iter().map(|&x| other.0[x as usize]).collect())
    }

    pub fn inv(&self) -> Perm {
        let mut v = vec![0u32; self.0.len()];
        for (i, &x) in self.0.iter().enumerate() {
            v[x as usize] = i as u32;
        }
        Perm(v)
    }

    pub fn pow(&self, e: i64) -> Perm {
        let base = if e < 0 { self.inv() } else { self.clone() };
        let mut e = e.unsigned_abs();
        let mut acc = Perm::identity(self.degree());
        let mut b = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&b);
            }
            b = b.mul(&b);
            e >>= 1;
        }
        acc
    }

    /// g⁻¹ x g
    pub fn conj(&self, g: &Perm) -> Perm {
        let mut v = vec![0u32; self.0.len()];
        for (i, &x) in self.0.iter().enumerate() {
            v[g.0[i] as usize] = g.0[x as usize];
        }
        Perm(v)
    }

    pub fn commutes(&self, other: &Perm) -> bool {
        self.0.iter().enumerate().all(|(i, &x)| other.0[x as usize] == self.0[other.0[i] as usize])
    }

    pub fn cycles(&self) -> Vec<Vec<u32>> {
        let n = self.0.len();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for i in 0..n {
            if seen[i] || self.0[i] as usize == i {
                continue;
            }
            let mut c = vec![i as u32];
            seen[i] = true;
            let mut j = self.0[i] as usize;
            while j != i {
                seen[j] = true;
                c.push(j as u32);
                j = self.0[j] as usize;
            }
            out.push(c);
        }
        out
    }

    /// lcm of the cycle lengths
    pub fn order(&self) -> u64 {
        self.cycles().iter().fold(1u64, |a, c| a.lcm(&(c.len() as u64)))
    }

    pub fn first_moved(&self) -> Option<u32> {
        self.0.iter().enumerate().find(|(i, &x)| *i as u32 != x).map(|(i, _)| i as u32)
    }

    /// Acts on the points `offset..offset+self.degree()` of a larger set.
    pub fn shifted(&self, offset: usize, total: usize) -> Perm {
        let mut v: Vec<u32> = (0..total as u32).collect();
        for (i, &x) in self.0.iter().enumerate() {
            v[offset + i] = offset as u32 + x;
        }
        Perm(v)
    }

    /// Restriction to `offset..offset+len`, which must be invariant.
    pub fn restrict(&self, offset: usize, len: usize) -> Result<Perm, GroupError> {
        let v: Vec<u32> = (offset..offset + len).map(|i| self.0[i].wrapping_sub(offset as u32)).collect();
        Perm::from_images(v)
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cs = self.cycles();
        if cs.is_empty() {
            return write!(f, "()");
        }
        for c in cs {
            let s: Vec<String> = c.iter().map(|x| (x + 1).to_string()).collect();
            write!(f, "({})", s.join(","))?;
        }
        Ok(())
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[derive(Debug, Clone)]
struct Level {
    point: u32,
    gens: Vec<Perm>,
    /// transversal[β] maps the level point to β
    transversal: Vec<Option<Perm>>,
    orbit: Vec<u32>,
}

/// Base and strong generating set.
#[derive(Debug, Clone)]
pub struct Bsgs {
    degree: usize,
    levels: Vec<Level>,
    strong: Vec<Perm>,
}

impl Bsgs {
    fn level_for(degree: usize, point: u32, strong: &[Perm], base: &[u32]) -> Level {
        let gens: Vec<Perm> =
            strong.iter().filter(|s| base.iter().all(|&b| s.apply(b) == b)).cloned().collect();
        let mut transversal: Vec<Option<Perm>> = vec![None; degree];
        transversal[point as usize] = Some(Perm::identity(degree));
        let mut orbit = vec![point];
        let mut k = 0;
        while k < orbit.len() {
            let b = orbit[k];
            let ub = transversal[b as usize].clone().expect("in orbit");
            for s in &gens {
                let c = s.apply(b);
                if transversal[c as usize].is_none() {
                    transversal[c as usize] = Some(ub.mul(s));
                    orbit.push(c);
                }
            }
            k += 1;
        }
        Level { point, gens, transversal, orbit }
    }

    fn rebuild(&mut self, from: usize) {
        let base: Vec<u32> = self.levels.iter().map(|l| l.point).collect();
        for i in from..self.levels.len() {
            self.levels[i] = Self::level_for(self.degree, base[i], &self.strong, &base[..i]);
        }
    }

    /// Strips g through the levels starting at `from`; returns the residue and
    /// the level where it stopped (levels.len() if it passed every level).
    fn sift_from(&self, g: &Perm, from: usize) -> (Perm, usize) {
        let mut y = g.clone();
        for (l, lev) in self.levels.iter().enumerate().skip(from) {
            let b = y.apply(lev.point);
            match &lev.transversal[b as usize] {
                None => return (y, l),
                Some(u) => y = y.mul(&u.inv()),
            }
        }
        (y, self.levels.len())
    }

    /// Deterministic Schreier–Sims.
    pub fn new(degree: usize, gens: &[Perm]) -> Self {
        let strong: Vec<Perm> = gens.iter().filter(|g| !g.is_identity()).cloned().collect();
        let mut base: Vec<u32> = Vec::new();
        for g in &strong {
            if base.iter().all(|&b| g.apply(b) == b) {
                base.push(g.first_moved().expect("non-identity"));
            }
        }
        let mut bs = Bsgs { degree, levels: Vec::new(), strong };
        for (i, &p) in base.iter().enumerate() {
            bs.levels.push(Self::level_for(degree, p, &bs.strong, &base[..i]));
        }
        let mut i = bs.levels.len() as isize - 1;
        while i >= 0 {
            let iu = i as usize;
            bs.rebuild(iu);
            let mut jump = None;
            'scan: for &beta in &bs.levels[iu].orbit.clone() {
                let ub = bs.levels[iu].transversal[beta as usize].clone().expect("orbit");
                for s in bs.levels[iu].gens.clone() {
                    let img = s.apply(beta);
                    let ubs = bs.levels[iu].transversal[img as usize].clone().expect("orbit closed");
                    let h = ub.mul(&s).mul(&ubs.inv());
                    if h.is_identity() {
                        continue;
                    }
                    let (y, j) = bs.sift_from(&h, iu + 1);
                    if !y.is_identity() {
                        bs.strong.push(y.clone());
                        if j == bs.levels.len() {
                            let p = y.first_moved().expect("non-identity");
                            let base: Vec<u32> = bs.levels.iter().map(|l| l.point).collect();
                            bs.levels.push(Self::level_for(degree, p, &bs.strong, &base));
                        }
                        bs.rebuild(iu + 1);
                        jump = Some(j);
                        break 'scan;
                    }
                }
            }
            match jump {
                Some(j) => i = j as isize,
                None => i -= 1,
            }
        }
        bs
    }

    pub fn order(&self) -> u128 {
        self.levels.iter().map(|l| l.orbit.len() as u128).product()
    }

    pub fn base(&self) -> Vec<u32> {
        self.levels.iter().map(|l| l.point).collect()
    }

    pub fn strong_generators(&self) -> &[Perm] {
        &self.strong
    }

    pub fn contains(&self, g: &Perm) -> bool {
        g.degree() == self.degree && {
            let (y, _) = self.sift_from(g, 0);
            y.is_identity()
        }
    }

    pub fn random<R: Rng>(&self, rng: &mut R) -> Perm {
        let mut g = Perm::identity(self.degree);
        for lev in self.levels.iter().rev() {
            let b = lev.orbit[rng.gen_range(0..lev.orbit.len())];
            g = g.mul(lev.transversal[b as usize].as_ref().expect("orbit"));
        }
        g
    }

    /// Every element, as u_{k−1} ⋯ u₁ u₀ over the transversals.
    pub fn elements(&self) -> Vec<Perm> {
        let mut out = vec![Perm::identity(self.degree)];
        for lev in self.levels.iter().rev() {
            let mut next = Vec::with_capacity(out.len() * lev.orbit.len());
            for g in &out {
                for &b in &lev.orbit {
                    next.push(g.mul(lev.transversal[b as usize].as_ref().expect("orbit")));
                }
            }
            out = next;
        }
        out
    }
}

/// A permutation group given by generators; the BSGS is built on first use.
#[derive(Debug, Clone)]
pub struct PermGroup {
    degree: usize,
    gens: Vec<Perm>,
    bsgs: OnceLock<Bsgs>,
}

/// Element lists are only produced for groups up to this order.
pub const MAX_ENUMERATE: u128 = 5_000_000;

impl PermGroup {
    pub fn new(degree: usize, gens: Vec<Perm>) -> Result<Self, GroupError> {
        if let Some(g) = gens.iter().find(|g| g.degree() != degree) {
            return Err(GroupError::Invalid(format!("generator of degree {} in a group of degree {degree}", g.degree())));
        }
        Ok(PermGroup { degree, gens, bsgs: OnceLock::new() })
    }

    pub fn trivial(degree: usize) -> Self {
        PermGroup { degree, gens: Vec::new(), bsgs: OnceLock::new() }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Perm] {
        &self.gens
    }

    pub fn bsgs(&self) -> &Bsgs {
        self.bsgs.get_or_init(|| Bsgs::new(self.degree, &self.gens))
    }

    pub fn order(&self) -> u128 {
        self.bsgs().order()
    }

    pub fn contains(&self, g: &Perm) -> bool {
        self.bsgs().contains(g)
    }

    pub fn random<R: Rng>(&self, rng: &mut R) -> Perm {
        self.bsgs().random(rng)
    }

    pub fn elements(&self) -> Result<Vec<Perm>, GroupError> {
        if self.order() > MAX_ENUMERATE {
            return Err(GroupError::TooLarge(self.order()));
        }
        Ok(self.bsgs().elements())
    }

    pub fn subgroup(&self, gens: Vec<Perm>) -> Result<PermGroup, GroupError> {
        PermGroup::new(self.degree, gens)
    }

    pub fn orbit(&self, point: u32) -> Vec<u32> {
        let mut seen = vec![false; self.degree];
        seen[point as usize] = true;
        let mut orbit = vec![point];
        let mut k = 0;
        while k < orbit.len() {
            for g in &self.gens {
                let c = g.apply(orbit[k]);
                if !seen[c as usize] {
                    seen[c as usize] = true;
                    orbit.push(c);
                }
            }
            k += 1;
        }
        orbit
    }

    pub fn is_transitive(&self) -> bool {
        self.degree == 0 || self.orbit(0).len() == self.degree
    }

    /// Order by breadth-first closure, without the BSGS; for cross-checks.
    pub fn closure_order(&self, limit: usize) -> Option<usize> {
        let id = Perm::identity(self.degree);
        let mut seen: HashMap<Perm, ()> = HashMap::new();
        seen.insert(id.clone(), ());
        let mut queue = VecDeque::from([id]);
        while let Some(g) = queue.pop_front() {
            for s in &self.gens {
                let h = g.mul(s);
                if !seen.contains_key(&h) {
                    if seen.len() >= limit {
                        return None;
                    }
                    seen.insert(h.clone(), ());
                    queue.push_back(h);
                }
            }
        }
        Some(seen.len())
    }

    pub fn is_abelian(&self) -> bool {
        self.gens.iter().all(|a| self.gens.iter().all(|b| a.commutes(b)))
    }

    /// Whether ⟨gens⟩ is normalized by every generator of `by`.
    pub fn is_normalized_by(&self, by: &[Perm]) -> bool {
        by.iter().all(|g| self.gens.iter().all(|s| self.contains(&s.conj(g))))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;

    #[test]
    fn perm_basics() {
        let p = Perm::parse(5, "(1,2,3)(4,5)").unwrap();
        assert_eq!(p.order(), 6);
        assert_eq!(p.to_string(), "(1,2,3)(4,5)");
        assert!(p.mul(&p.inv()).is_identity());
        assert_eq!(p.pow(6), Perm::identity(5));
        assert_eq!(p.pow(-1), p.inv());
        let q = Perm::parse(5, "(1,4)").unwrap();
        assert_eq!(p.conj(&q), q.inv().mul(&p).mul(&q));
    }

    #[test]
    fn schreier_sims_matches_closure() {
        let s5 = PermGroup::new(5, vec![Perm::parse(5, "(1,2)").unwrap(), Perm::parse(5, "(1,2,3,4,5)").unwrap()]).unwrap();
        assert_eq!(s5.order(), 120);
        assert_eq!(s5.closure_order(1000), Some(120));
        let mut rng = rand::rngs::StdRng::seed_from_u64(7);
        for _ in 0..20 {
            let g = s5.random(&mut rng);
            assert!(s5.contains(&g));
            assert_eq!(120 % g.order(), 0);
        }
        let a = PermGroup::new(5, vec![Perm::parse(5, "(1,2,3)").unwrap(), Perm::parse(5, "(3,4,5)").unwrap()]).unwrap();
        assert_eq!(a.order(), 60);
        assert!(!a.contains(&Perm::parse(5, "(1,2)").unwrap()));
        assert_eq!(a.elements().unwrap().len(), 60);
    }
}
