use super::{FpError, Presentation, Word};

const UNDEF: u32 = u32::MAX;

/// A complete coset table: `table[c][2g]` is c·g and `table[c][2g+1]` is
/// c·g⁻¹. Coset 0 is the subgroup itself; cosets are numbered in order of
/// first appearance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CosetTable {
    pub ngens: usize,
    pub table: Vec<Vec<u32>>,
}

impl CosetTable {
    pub fn index(&self) -> usize {
        self.table.len()
    }

    pub fn act(&self, c: usize, col: usize) -> usize {
        self.table[c][col] as usize
    }

    /// Coset reached from `c` by reading `w`.
    pub fn trace(&self, c: usize, w: &Word) -> usize {
        w.columns().into_iter().fold(c, |x, col| self.act(x, col))
    }

    /// Permutation action of generator g on cosets.
    pub fn generator_perm(&self, g: usize) -> crate::finitegrp::Perm {
        crate::finitegrp::Perm::from_images(self.table.iter().map(|r| r[2 * g]).collect()).expect("complete table")
    }

    /// Builds the table of the action of generator permutations on the orbit
    /// of `base`, numbering points by first appearance.
    pub fn from_action(images: &[crate::finitegrp::Perm], base: u32) -> Self {
        let ngens = images.len();
        let inv: Vec<_> = images.iter().map(|p| p.inv()).collect();
        let deg = images.first().map_or(1, |p| p.degree());
        let mut num = vec![UNDEF; deg];
        let mut pts = vec![base];
        num[base as usize] = 0;
        let mut table = Vec::new();
        let mut i = 0;
        while i < pts.len() {
            let x = pts[i];
            let mut row = vec![0u32; 2 * ngens];
            for g in 0..ngens {
                for (k, p) in [&images[g], &inv[g]].into_iter().enumerate() {
                    let y = p.apply(x);
                    if num[y as usize] == UNDEF {
                        num[y as usize] = pts.len() as u32;
                        pts.push(y);
                    }
                    row[2 * g + k] = num[y as usize];
                }
            }
            table.push(row);
            i += 1;
        }
        CosetTable { ngens, table }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Enumeration {
    Complete(CosetTable),
    /// The live-coset limit was reached; says nothing about finiteness.
    Overflow { max_cosets: usize, defined: usize },
}

impl Enumeration {
    pub fn index(&self) -> Option<usize> {
        match self {
            Enumeration::Complete(t) => Some(t.index()),
            Enumeration::Overflow { .. } => None,
        }
    }
}

struct Tc {
    cols: usize,
    table: Vec<u32>,
    fwd: Vec<u32>,
    live: usize,
    defined: usize,
    max: usize,
    queue: Vec<u32>,
}

#[inline]
fn inv_col(x: usize) -> usize {
    x ^ 1
}

impl Tc {
    fn get(&self, c: u32, x: usize) -> u32 {
        self.table[c as usize * self.cols + x]
    }

    fn set(&mut self, c: u32, x: usize, d: u32) {
        self.table[c as usize * self.cols + x] = d;
    }

    fn alive(&self, c: u32) -> bool {
        self.fwd[c as usize] == c
    }

    fn slots(&self) -> usize {
        self.fwd.len()
    }

    fn new_coset(&mut self) -> u32 {
        let d = self.fwd.len() as u32;
        self.fwd.push(d);
        self.table.extend(std::iter::repeat_n(UNDEF, self.cols));
        self.live += 1;
        self.defined += 1;
        d
    }

    fn define(&mut self, c: u32, x: usize) -> u32 {
        let d = self.new_coset();
        self.set(c, x, d);
        self.set(d, inv_col(x), c);
        d
    }

    fn rep(&mut self, c: u32) -> u32 {
        let mut r = c;
        while self.fwd[r as usize] != r {
            r = self.fwd[r as usize];
        }
        let mut x = c;
        while self.fwd[x as usize] != r {
            let n = self.fwd[x as usize];
            self.fwd[x as usize] = r;
            x = n;
        }
        r
    }

    fn merge(&mut self, a: u32, b: u32) {
        let (a, b) = (self.rep(a), self.rep(b));
        if a == b {
            return;
        }
        let (lo, hi) = if a < b { (a, b) } else { (b, a) };
        self.fwd[hi as usize] = lo;
        self.live -= 1;
        self.queue.push(hi);
    }

    fn coincidence(&mut self, a: u32, b: u32) {
        self.queue.clear();
        self.merge(a, b);
        let mut i = 0;
        while i < self.queue.len() {
            let e = self.queue[i];
            i += 1;
            for x in 0..self.cols {
                let f = self.get(e, x);
                if f == UNDEF {
                    continue;
                }
                if self.get(f, inv_col(x)) == e {
                    self.set(f, inv_col(x), UNDEF);
                }
                let e1 = self.rep(e);
                let f1 = self.rep(f);
                let ex = self.get(e1, x);
                if ex != UNDEF {
                    self.merge(f1, ex);
                } else {
                    let fx = self.get(f1, inv_col(x));
                    if fx != UNDEF {
                        self.merge(e1, fx);
                    } else {
                        self.set(e1, x, f1);
                        self.set(f1, inv_col(x), e1);
                    }
                }
            }
        }
    }

    /// Scans `w` at `c`, defining new cosets when `fill`; records deductions
    /// and coincidences either way.
    fn scan(&mut self, c: u32, w: &[usize], fill: bool) {
        if w.is_empty() {
            return;
        }
        let mut f = c;
        let mut b = c;
        let mut i = 0usize;
        let mut j = w.len() as isize - 1;
        loop {
            while (i as isize) <= j && self.get(f, w[i]) != UNDEF {
                f = self.get(f, w[i]);
                i += 1;
            }
            if (i as isize) > j {
                if f != c {
                    self.coincidence(f, c);
                }
                return;
            }
            while j >= i as isize && self.get(b, inv_col(w[j as usize])) != UNDEF {
                b = self.get(b, inv_col(w[j as usize]));
                j -= 1;
            }
            if j < i as isize {
                self.coincidence(f, b);
                return;
            }
            if j == i as isize {
                self.set(f, w[i], b);
                self.set(b, inv_col(w[i]), f);
                return;
            }
            if !fill {
                return;
            }
            self.define(f, w[i]);
        }
    }

    /// Drops dead cosets and renumbers the rest in order; returns the new
    /// number of the first live coset at or after `cursor`.
    fn compact(&mut self, cursor: usize) -> usize {
        let n = self.slots();
        let mut new = vec![UNDEF; n];
        let mut k = 0u32;
        for c in 0..n {
            if self.fwd[c] == c as u32 {
                new[c] = k;
                k += 1;
            }
        }
        let mut table = Vec::with_capacity(k as usize * self.cols);
        for c in 0..n {
            if new[c] == UNDEF {
                continue;
            }
            for x in 0..self.cols {
                let d = self.table[c * self.cols + x];
                table.push(if d == UNDEF { UNDEF } else { new[d as usize] });
            }
        }
        self.table = table;
        self.fwd = (0..k).collect();
        (cursor..n).find(|&c| new[c] != UNDEF).map_or(k as usize, |c| new[c] as usize)
    }

    fn lookahead(&mut self, rels: &[Vec<usize>]) {
        let mut c = 0;
        while c < self.slots() {
            for r in rels {
                if !self.alive(c as u32) {
                    break;
                }
                self.scan(c as u32, r, false);
            }
            c += 1;
        }
    }
}

/// HLT coset enumeration with lookahead. `max_cosets` bounds the number of
/// table rows held at any time.
pub fn todd_coxeter(p: &Presentation, subgroup: &[Word], max_cosets: usize) -> Result<Enumeration, FpError> {
    if max_cosets == 0 {
        return Err(FpError::Invalid("max_cosets must be positive".into()));
    }
    let cols = 2 * p.ngens();
    let rels: Vec<Vec<usize>> = p.relators().iter().map(|r| r.columns()).collect();
    let subs: Vec<Vec<usize>> = subgroup.iter().map(|w| w.columns()).collect();
    // room needed to process one coset without running out mid-scan
    let need = rels.iter().map(|r| r.len()).sum::<usize>() + cols + 1;
    let mut tc = Tc { cols, table: Vec::new(), fwd: Vec::new(), live: 0, defined: 0, max: max_cosets, queue: Vec::new() };
    tc.new_coset();
    let sub_need = subs.iter().map(|w| w.len()).sum::<usize>() + 1;
    if sub_need > tc.max {
        return Ok(Enumeration::Overflow { max_cosets, defined: tc.defined });
    }
    for w in &subs {
        tc.scan(0, w, true);
    }
    let mut c = 0usize;
    while c < tc.slots() {
        if tc.slots() + need > tc.max {
            c = tc.compact(c);
            if tc.slots() + need > tc.max {
                tc.lookahead(&rels);
                c = tc.compact(c);
                if tc.slots() + need > tc.max {
                    return Ok(Enumeration::Overflow { max_cosets, defined: tc.defined });
                }
            }
            if c >= tc.slots() {
                break;
            }
        }
        if tc.alive(c as u32) {
            for r in &rels {
                if !tc.alive(c as u32) {
                    break;
                }
                tc.scan(c as u32, r, true);
            }
            if tc.alive(c as u32) {
                for x in 0..cols {
                    if tc.get(c as u32, x) == UNDEF {
                        tc.define(c as u32, x);
                    }
                }
            }
        }
        c += 1;
    }
    tc.compact(0);
    debug_assert_eq!(tc.slots(), tc.live);
    Ok(Enumeration::Complete(standardize(&tc)))
}

/// Renumbers cosets by a breadth-first walk from coset 0 over the columns.
fn standardize(tc: &Tc) -> CosetTable {
    let n = tc.slots();
    let cols = tc.cols;
    let mut new = vec![UNDEF; n];
    let mut order = vec![0u32];
    new[0] = 0;
    let mut i = 0;
    while i < order.len() {
        let c = order[i];
        for x in 0..cols {
            let d = tc.get(c, x);
            if new[d as usize] == UNDEF {
                new[d as usize] = order.len() as u32;
                order.push(d);
            }
        }
        i += 1;
    }
    let table = order.iter().map(|&c| (0..cols).map(|x| new[tc.get(c, x) as usize]).collect()).collect();
    CosetTable { ngens: cols / 2, table }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_enumerations() {
        let p = Presentation::parse(&["x"], &["x^5"]).unwrap();
        assert_eq!(todd_coxeter(&p, &[], 100).unwrap().index(), Some(5));
        let s3 = Presentation::parse(&["a", "b"], &["a^2", "b^3", "(a b)^2"]).unwrap();
        assert_eq!(todd_coxeter(&s3, &[], 100).unwrap().index(), Some(6));
        let sub = [s3.word("a").unwrap()];
        assert_eq!(todd_coxeter(&s3, &sub, 100).unwrap().index(), Some(3));
        let z = Presentation::parse(&["x"], &[]).unwrap();
        assert!(matches!(todd_coxeter(&z, &[], 50).unwrap(), Enumeration::Overflow { .. }));
    }

    #[test]
    fn coincidences_collapse() {
        // ⟨a, b | a b a⁻¹ b⁻², b a b⁻¹ a⁻²⟩ is trivial
        let p = Presentation::parse(&["a", "b"], &["a b a^-1 b^-2", "b a b^-1 a^-2"]).unwrap();
        assert_eq!(todd_coxeter(&p, &[], 1000).unwrap().index(), Some(1));
    }
}
