use std::cmp::Reverse;
use std::collections::{BTreeMap, BinaryHeap};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::Presentation;

/// Invariant factors d₁ | d₂ | … of Zⁿ / rowspace(rows), listing only the
/// nontrivial ones, with 0 standing for a free Z summand.
pub fn smith_invariants(rows: &[Vec<BigInt>], ncols: usize) -> Vec<BigInt> {
    let mut a: Vec<Vec<BigInt>> = rows.iter().filter(|r| r.iter().any(|x| !x.is_zero())).cloned().collect();
    let nrows = a.len();
    let mut diag = Vec::new();
    let mut t = 0;
    while t < nrows.min(ncols) {
        // smallest nonzero entry in the remaining block
        let mut piv: Option<(usize, usize)> = None;
        for i in t..nrows {
            for j in t..ncols {
                if !a[i][j].is_zero() && piv.is_none_or(|(pi, pj)| a[i][j].abs() < a[pi][pj].abs()) {
                    piv = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = piv else { break };
        a.swap(t, pi);
        for row in a.iter_mut() {
            row.swap(t, pj);
        }
        loop {
            let p = a[t][t].clone();
            let mut done = true;
            for i in t + 1..nrows {
                if a[i][t].is_zero() {
                    continue;
                }
                let q = a[i][t].div_floor(&p);
                for j in t..ncols {
                    let v = &a[t][j] * &q;
                    a[i][j] -= v;
                }
                if !a[i][t].is_zero() {
                    done = false;
                }
            }
            for j in t + 1..ncols {
                if a[t][j].is_zero() {
                    continue;
                }
                let q = a[t][j].div_floor(&p);
                for row in a.iter_mut().skip(t) {
                    let v = &row[t] * &q;
                    row[j] -= v;
                }
                if !a[t][j].is_zero() {
                    done = false;
                }
            }
            if done {
                // divisibility of the rest of the block
                let bad = (t + 1..nrows).find(|&i| (t + 1..ncols).any(|j| !a[i][j].is_multiple_of(&p)));
                match bad {
                    None => break,
                    Some(i) => {
                        for j in t..ncols {
                            let v = a[i][j].clone();
                            a[t][j] += v;
                        }
                        continue;
                    }
                }
            }
            // move the smallest entry of row/column t back to the pivot
            let mut best = (t, t);
            for i in t..nrows {
                if !a[i][t].is_zero() && a[i][t].abs() < a[best.0][best.1].abs() {
                    best = (i, t);
                }
            }
            for j in t..ncols {
                if !a[t][j].is_zero() && a[t][j].abs() < a[best.0][best.1].abs() {
                    best = (t, j);
                }
            }
            a.swap(t, best.0);
            for row in a.iter_mut() {
                row.swap(t, best.1);
            }
        }
        diag.push(a[t][t].abs());
        t += 1;
    }
    let mut out: Vec<BigInt> = diag.into_iter().filter(|d| !d.is_one()).collect();
    out.sort();
    out.extend(std::iter::repeat_n(BigInt::zero(), ncols - t));
    out
}

/// Abelian invariants of the presented group.
pub fn abelianization(p: &Presentation) -> Vec<BigInt> {
    let n = p.ngens();
    let rows: Vec<Vec<BigInt>> =
        p.relators().iter().map(|r| r.exponent_sums(n).into_iter().map(BigInt::from).collect()).collect();
    smith_invariants(&rows, n)
}

pub fn free_rank(inv: &[BigInt]) -> usize {
    inv.iter().filter(|d| d.is_zero()).count()
}

/// Surjections onto Z/p up to automorphisms of Z/p: (p^r − 1)/(p − 1), r
/// the number of invariant factors divisible by p.
pub fn surjections_to_cyclic(inv: &[BigInt], p: u32) -> BigInt {
    let bp = BigInt::from(p);
    let r = inv.iter().filter(|d| d.is_multiple_of(&bp)).count() as u32;
    (bp.pow(r) - 1u32) / (p - 1)
}

pub fn format_invariants(inv: &[BigInt]) -> String {
    if inv.is_empty() {
        return "0".into();
    }
    let mut parts = Vec::new();
    let f = free_rank(inv);
    for d in inv.iter().filter(|d| !d.is_zero()) {
        parts.push(format!("Z/{d}"));
    }
    match f {
        0 => {}
        1 => parts.push("Z".into()),
        _ => parts.push(format!("Z^{f}")),
    }
    parts.join(" x ")
}

/// A sparse integer relation matrix over `ncols` unknowns, reduced by
/// eliminating unknowns that occur with coefficient ±1; the remaining
/// block is handed to `smith_invariants`.
#[derive(Clone, Debug)]
pub struct SparseRelations {
    pub ncols: usize,
    pub rows: Vec<BTreeMap<usize, i64>>,
}

impl SparseRelations {
    pub fn new(ncols: usize) -> Self {
        SparseRelations { ncols, rows: Vec::new() }
    }

    pub fn push(&mut self, row: BTreeMap<usize, i64>) {
        let row: BTreeMap<usize, i64> = row.into_iter().filter(|&(_, v)| v != 0).collect();
        if !row.is_empty() {
            self.rows.push(row);
        }
    }

    pub fn invariants(mut self) -> Vec<BigInt> {
        let mut eliminated = 0usize;
        // column → rows containing it
        let mut occ: Vec<Vec<usize>> = vec![Vec::new(); self.ncols];
        for (i, r) in self.rows.iter().enumerate() {
            for &c in r.keys() {
                occ[c].push(i);
            }
        }
        let mut alive = vec![true; self.rows.len()];
        let mut heap: BinaryHeap<Reverse<(usize, usize)>> =
            self.rows.iter().enumerate().map(|(i, r)| Reverse((r.len(), i))).collect();
        while let Some(Reverse((len, pi))) = heap.pop() {
            if !alive[pi] || self.rows[pi].len() != len || len == 0 {
                continue;
            }
            // unit entry whose column is the least used
            let Some(pc) = self.rows[pi]
                .iter()
                .filter(|(_, v)| v.abs() == 1)
                .map(|(&c, _)| c)
                .min_by_key(|&c| occ[c].len())
            else {
                continue;
            };
            alive[pi] = false;
            eliminated += 1;
            let prow = std::mem::take(&mut self.rows[pi]);
            let pv = prow[&pc];
            let users: Vec<usize> = occ[pc].iter().copied().filter(|&i| alive[i]).collect();
            for i in users {
                let Some(&f) = self.rows[i].get(&pc) else { continue };
                // row_i -= (f / pv) · prow, exact since pv = ±1
                let m = f * pv;
                for (&c, &v) in &prow {
                    let e = self.rows[i].entry(c).or_insert(0);
                    let before = *e;
                    *e = e.checked_sub(m.checked_mul(v).expect("overflow")).expect("overflow");
                    if *e == 0 {
                        self.rows[i].remove(&c);
                    } else if before == 0 {
                        occ[c].push(i);
                    }
                }
                heap.push(Reverse((self.rows[i].len(), i)));
            }
            occ[pc].clear();
            for &c in prow.keys() {
                // stale entries are skipped on use; prune when they pile up
                if occ[c].len() > 64 {
                    let rows = &self.rows;
                    occ[c].retain(|&i| alive[i] && rows[i].contains_key(&c));
                    occ[c].dedup();
                }
            }
        }
        let rest: Vec<&BTreeMap<usize, i64>> =
            self.rows.iter().enumerate().filter(|&(i, r)| alive[i] && !r.is_empty()).map(|(_, r)| r).collect();
        let mut cols: Vec<usize> = rest.iter().flat_map(|r| r.keys().copied()).collect();
        cols.sort_unstable();
        cols.dedup();
        let free_untouched = self.ncols - eliminated - cols.len();
        let index: BTreeMap<usize, usize> = cols.iter().enumerate().map(|(i, &c)| (c, i)).collect();
        let dense: Vec<Vec<BigInt>> = rest
            .iter()
            .map(|r| {
                let mut v = vec![BigInt::zero(); cols.len()];
                for (&c, &x) in r.iter() {
                    v[index[&c]] = BigInt::from(x);
                }
                v
            })
            .collect();
        let mut inv = smith_invariants(&dense, cols.len());
        inv.extend(std::iter::repeat_n(BigInt::zero(), free_untouched));
        inv
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn small_snf() {
        assert_eq!(smith_invariants(&[], 2), b(&[0, 0]));
        assert_eq!(smith_invariants(&[b(&[3])], 1), b(&[3]));
        assert_eq!(smith_invariants(&[b(&[2, 0]), b(&[0, 3])], 2), b(&[6]));
        assert_eq!(smith_invariants(&[b(&[2, 4]), b(&[6, 8])], 2), b(&[2, 4]));
        assert_eq!(smith_invariants(&[b(&[4, 6])], 2), b(&[2, 0]));
    }

    #[test]
    fn sparse_matches_dense() {
        let rows = [vec![(0, 1), (1, 2)], vec![(1, 4), (2, 6)], vec![(2, 1), (3, -1)], vec![(3, 3)]];
        let mut s = SparseRelations::new(5);
        let mut dense = Vec::new();
        for r in rows {
            let mut d = vec![BigInt::zero(); 5];
            for &(c, v) in &r {
                d[c] = BigInt::from(v);
            }
            dense.push(d);
            s.push(r.into_iter().collect());
        }
        assert_eq!(s.invariants(), smith_invariants(&dense, 5));
    }
}
