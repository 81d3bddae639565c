use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet};
use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};
use std::sync::Mutex;

use rayon::prelude::*;

use super::{FpError, Presentation, Word};
use crate::finitegrp::{Perm, PermGroup, Target};

/// Generator images in a finite group, one per generator of the presentation.
#[derive(Clone, Debug)]
pub struct FiniteQuotientMap {
    pub target_name: String,
    pub target: PermGroup,
    pub images: Vec<Perm>,
}

impl FiniteQuotientMap {
    pub fn new(target_name: &str, target: PermGroup, images: Vec<Perm>) -> Self {
        FiniteQuotientMap { target_name: target_name.into(), target, images }
    }

    pub fn image_of(&self, w: &Word) -> Perm {
        w.evaluate(&self.images)
    }

    /// Every relator maps to the identity.
    pub fn respects(&self, p: &Presentation) -> bool {
        self.images.len() == p.ngens() && p.relators().iter().all(|r| self.image_of(r).is_identity())
    }

    pub fn image(&self) -> PermGroup {
        PermGroup::new(self.target.degree(), self.images.clone()).expect("same degree")
    }

    pub fn image_order(&self) -> u128 {
        self.image().order()
    }

    pub fn is_surjective(&self) -> bool {
        self.image_order() == self.target.order()
    }
}

#[derive(Clone, Debug)]
pub struct EpiOptions {
    /// generator index → required order of its image
    pub orders: BTreeMap<usize, u64>,
    pub budget: u64,
    /// generator indices in the order they are assigned; chosen greedily if empty
    pub search_order: Vec<usize>,
}

impl Default for EpiOptions {
    fn default() -> Self {
        EpiOptions { orders: BTreeMap::new(), budget: 200_000_000, search_order: Vec::new() }
    }
}

impl EpiOptions {
    /// Orders by generator name.
    pub fn with_orders(p: &Presentation, orders: &[(&str, u64)]) -> Result<Self, FpError> {
        let mut o = EpiOptions::default();
        for &(name, n) in orders {
            let g = p.generator_index(name).ok_or_else(|| FpError::Invalid(format!("no generator {name:?}")))?;
            o.orders.insert(g, n);
        }
        Ok(o)
    }
}

#[derive(Clone, Debug)]
pub struct EpiSearch {
    /// one representative per class, canonically sorted
    pub maps: Vec<FiniteQuotientMap>,
    pub nodes: u64,
    /// homomorphisms found whose image is a proper subgroup
    pub non_surjective: u64,
    /// surjections found before deduplication
    pub raw_surjections: u64,
    pub first_generator_classes: usize,
    pub search_order: Vec<String>,
    /// whether the deduplicating group realizes all automorphisms
    pub full_aut: bool,
}

impl EpiSearch {
    pub fn count(&self) -> usize {
        self.maps.len()
    }
}

fn greedy_order(p: &Presentation, counts: &[usize]) -> Vec<usize> {
    let n = p.ngens();
    let supports: Vec<Vec<usize>> = p.relators().iter().map(|r| r.support()).collect();
    let mut chosen: Vec<usize> = Vec::new();
    while chosen.len() < n {
        let best = (0..n)
            .filter(|g| !chosen.contains(g))
            .max_by_key(|&g| {
                let completes = supports.iter().filter(|s| s.contains(&g) && s.iter().all(|h| *h == g || chosen.contains(h))).count();
                (completes, std::cmp::Reverse(counts[g]), std::cmp::Reverse(g))
            })
            .expect("unassigned generator");
        chosen.push(best);
    }
    chosen
}

/// Point-by-point test that a word of column images is the identity.
fn trivial_on(cols: &[usize], imgs: &[&[u32]], degree: usize) -> bool {
    (0..degree as u32).all(|x| cols.iter().fold(x, |y, &c| imgs[c][y as usize]) == x)
}

struct Search<'a> {
    order: Vec<usize>,
    cands: Vec<Vec<Perm>>,
    cand_inv: Vec<Vec<Perm>>,
    /// relators (as columns) completed at each depth
    checks: Vec<Vec<Vec<usize>>>,
    degree: usize,
    ngens: usize,
    target_order: u128,
    nodes: &'a AtomicU64,
    budget: u64,
    stop: &'a AtomicBool,
}

impl Search<'_> {
    fn dfs(&self, depth: usize, chosen: &mut Vec<(usize, usize)>, out: &mut Vec<Vec<Perm>>, non_surj: &mut u64) {
        if self.stop.load(Ordering::Relaxed) {
            return;
        }
        if depth == self.order.len() {
            let mut images = vec![Perm::identity(self.degree); self.ngens];
            for (d, &(g, i)) in chosen.iter().enumerate() {
                debug_assert_eq!(self.order[d], g);
                images[g] = self.cands[d][i].clone();
            }
            let gens = PermGroup::new(self.degree, images.clone()).expect("degree");
            if gens.order() == self.target_order {
                out.push(images);
            } else {
                *non_surj += 1;
            }
            return;
        }
        let g = self.order[depth];
        for i in 0..self.cands[depth].len() {
            if self.nodes.fetch_add(1, Ordering::Relaxed) >= self.budget {
                self.stop.store(true, Ordering::Relaxed);
                return;
            }
            chosen.push((g, i));
            if self.consistent(depth, chosen) {
                self.dfs(depth + 1, chosen, out, non_surj);
            }
            chosen.pop();
        }
    }

    fn consistent(&self, depth: usize, chosen: &[(usize, usize)]) -> bool {
        if self.checks[depth].is_empty() {
            return true;
        }
        let mut imgs: Vec<&[u32]> = vec![&[]; 2 * self.ngens];
        for (d, &(g, i)) in chosen.iter().enumerate() {
            imgs[2 * g] = self.cands[d][i].images();
            imgs[2 * g + 1] = self.cand_inv[d][i].images();
        }
        self.checks[depth].iter().all(|r| trivial_on(r, &imgs, self.degree))
    }
}

/// Orbits of `by` acting by conjugation on `set`, as sorted lists.
fn conjugation_orbits(set: &[Perm], by: &[Perm]) -> Vec<Vec<Perm>> {
    let mut seen: HashSet<Perm> = HashSet::new();
    let mut orbits = Vec::new();
    for x in set {
        if seen.contains(x) {
            continue;
        }
        seen.insert(x.clone());
        let mut orb = vec![x.clone()];
        let mut i = 0;
        while i < orb.len() {
            for g in by {
                let y = orb[i].conj(g);
                if seen.insert(y.clone()) {
                    orb.push(y);
                }
            }
            i += 1;
        }
        orb.sort();
        orbits.push(orb);
    }
    orbits
}

/// Surjections from the presented group onto `target.group`, one per orbit
/// of `target.automorphisms` acting by simultaneous conjugation on image
/// tuples. The search assigns images generator by generator, restricting
/// the first to orbit representatives and testing each relator as soon as
/// its generators are assigned.
pub fn find_epimorphisms(p: &Presentation, target: &Target, opts: &EpiOptions) -> Result<EpiSearch, FpError> {
    let g = &target.group;
    let n_aut = &target.automorphisms;
    if g.degree() != n_aut.degree() || !g.generators().iter().all(|x| n_aut.contains(x)) {
        return Err(FpError::Invalid("automorphism group must contain the target".into()));
    }
    let ngens = p.ngens();
    if ngens == 0 {
        return Err(FpError::Invalid("presentation has no generators".into()));
    }
    let elems = g.elements()?;
    let by_order = |o: Option<u64>| -> Vec<Perm> {
        let mut v: Vec<Perm> = elems.iter().filter(|x| o.is_none_or(|o| x.order() == o)).cloned().collect();
        v.sort();
        v
    };
    let all_cands: Vec<Vec<Perm>> = (0..ngens).map(|i| by_order(opts.orders.get(&i).copied())).collect();
    let order = if opts.search_order.is_empty() {
        greedy_order(p, &all_cands.iter().map(|c| c.len()).collect::<Vec<_>>())
    } else {
        let mut s = opts.search_order.clone();
        s.sort_unstable();
        s.dedup();
        if s != (0..ngens).collect::<Vec<_>>() || opts.search_order.len() != ngens {
            return Err(FpError::Invalid("search order must list every generator once".into()));
        }
        opts.search_order.clone()
    };
    let pos: HashMap<usize, usize> = order.iter().enumerate().map(|(d, &g)| (g, d)).collect();
    let mut checks: Vec<Vec<Vec<usize>>> = vec![Vec::new(); ngens];
    for r in p.relators() {
        let d = r.support().iter().map(|g| pos[g]).max().expect("nonempty relator");
        checks[d].push(r.columns());
    }
    let first = order[0];
    let orbits = conjugation_orbits(&all_cands[first], n_aut.generators());
    let reps: Vec<Perm> = orbits.iter().map(|o| o[0].clone()).collect();
    let n_elems = n_aut.elements()?;

    let nodes = AtomicU64::new(0);
    let stop = AtomicBool::new(false);
    let non_surjective = AtomicU64::new(0);
    let found: Mutex<Vec<(usize, Vec<Perm>)>> = Mutex::new(Vec::new());

    for (ri, rep) in reps.iter().enumerate() {
        let mut cands = vec![vec![rep.clone()]];
        for &gi in &order[1..] {
            cands.push(all_cands[gi].clone());
        }
        let cand_inv: Vec<Vec<Perm>> = cands.iter().map(|c| c.iter().map(|x| x.inv()).collect()).collect();
        let search = Search {
            order: order.clone(),
            cands,
            cand_inv,
            checks: checks.clone(),
            degree: g.degree(),
            ngens,
            target_order: g.order(),
            nodes: &nodes,
            budget: opts.budget,
            stop: &stop,
        };
        if !search.consistent(0, &[(first, 0)]) {
            continue;
        }
        let second: Vec<usize> = if ngens > 1 { (0..search.cands[1].len()).collect() } else { vec![usize::MAX] };
        second.par_iter().for_each(|&i| {
            let mut out = Vec::new();
            let mut ns = 0u64;
            let mut chosen = vec![(first, 0usize)];
            if i == usize::MAX {
                search.dfs(1, &mut chosen, &mut out, &mut ns);
            } else {
                if nodes.fetch_add(1, Ordering::Relaxed) >= opts.budget {
                    stop.store(true, Ordering::Relaxed);
                    return;
                }
                chosen.push((order[1], i));
                if search.consistent(1, &chosen) {
                    search.dfs(2, &mut chosen, &mut out, &mut ns);
                }
            }
            non_surjective.fetch_add(ns, Ordering::Relaxed);
            if !out.is_empty() {
                found.lock().expect("lock").extend(out.into_iter().map(|x| (ri, x)));
            }
        });
        if stop.load(Ordering::Relaxed) {
            return Err(FpError::Budget { nodes: nodes.load(Ordering::Relaxed) });
        }
    }

    let found = found.into_inner().expect("lock");
    let raw = found.len() as u64;
    // canonical form under the centralizer of the first image
    let mut classes: BTreeSet<Vec<Perm>> = BTreeSet::new();
    let mut by_rep: BTreeMap<usize, Vec<Vec<Perm>>> = BTreeMap::new();
    for (ri, imgs) in found {
        by_rep.entry(ri).or_default().push(imgs);
    }
    for (ri, sols) in by_rep {
        let cent: Vec<&Perm> = n_elems.iter().filter(|c| c.commutes(&reps[ri])).collect();
        let canon: Vec<Vec<Perm>> = sols
            .par_iter()
            .map(|imgs| {
                cent.iter()
                    .map(|c| order.iter().map(|&gi| imgs[gi].conj(c)).collect::<Vec<Perm>>())
                    .min()
                    .expect("identity centralizes")
            })
            .collect();
        classes.extend(canon);
    }
    let maps = classes
        .into_iter()
        .map(|in_order| {
            let mut images = vec![Perm::identity(g.degree()); ngens];
            for (d, &gi) in order.iter().enumerate() {
                images[gi] = in_order[d].clone();
            }
            FiniteQuotientMap::new(&target.name, g.clone(), images)
        })
        .collect::<Vec<_>>();
    for m in &maps {
        if !m.respects(p) || !m.is_surjective() {
            return Err(FpError::Invalid("search produced an invalid map".into()));
        }
    }
    Ok(EpiSearch {
        maps,
        nodes: nodes.load(Ordering::Relaxed),
        non_surjective: non_surjective.load(Ordering::Relaxed),
        raw_surjections: raw,
        first_generator_classes: reps.len(),
        search_order: order.iter().map(|&i| p.generators()[i].clone()).collect(),
        full_aut: target.full_aut,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::finitegrp::target;

    #[test]
    fn cyclic_targets() {
        let p = Presentation::parse(&["x"], &["x^3"]).unwrap();
        let z3 = target("z3").unwrap();
        let r = find_epimorphisms(&p, &z3, &EpiOptions::default()).unwrap();
        assert_eq!(r.count(), 1);
        let free2 = Presentation::parse(&["x", "y"], &[]).unwrap();
        // surjections F₂ → Z/3 up to sign: (9 − 1)/2
        assert_eq!(find_epimorphisms(&free2, &z3, &EpiOptions::default()).unwrap().count(), 4);
        let a4 = target("a4").unwrap();
        let p = Presentation::parse(&["x", "y"], &["x^2", "y^3", "(x y)^3"]).unwrap();
        let r = find_epimorphisms(&p, &a4, &EpiOptions::default()).unwrap();
        assert_eq!(r.count(), 1);
    }

    #[test]
    fn budget_is_reported() {
        let free2 = Presentation::parse(&["x", "y"], &[]).unwrap();
        let a4 = target("a4").unwrap();
        let opts = EpiOptions { budget: 5, ..Default::default() };
        assert!(matches!(find_epimorphisms(&free2, &a4, &opts), Err(FpError::Budget { .. })));
    }
}
