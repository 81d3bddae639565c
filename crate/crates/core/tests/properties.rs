use num_bigint::BigInt;
use proptest::prelude::*;
use rand::SeedableRng;

use ballquot::dmorbifold::invariant_conversions;
use ballquot::exactmath::{dec, qi, CycloElem};
use ballquot::finitegrp::unitary::reduce_elem;
use ballquot::finitegrp::{psu33_cached, symmetric, Perm, PermGroup};
use ballquot::fpgroup::{abelianization, todd_coxeter, Enumeration, Presentation, Word};

fn names(n: usize) -> Vec<String> {
    ["a", "b", "c", "d"][..n].iter().map(|s| s.to_string()).collect()
}

fn letters(ngens: usize, max_len: usize) -> impl Strategy<Value = Vec<(usize, i32)>> {
    prop::collection::vec((0..ngens, prop_oneof![-3i32..=-1, 1i32..=3]), 0..max_len)
}

fn word(ngens: usize, max_len: usize) -> impl Strategy<Value = Word> {
    letters(ngens, max_len).prop_map(Word::from_letters)
}

fn s5_perm() -> impl Strategy<Value = Perm> {
    Just((0u32..5).collect::<Vec<_>>()).prop_shuffle().prop_map(|v| Perm::from_images(v).unwrap())
}

/// von Dyck groups (2,3,n): orders 6, 12, 24, 60 for n = 2..5.
fn von_dyck(n: i32) -> Vec<Word> {
    let a = Word::gen(0);
    let b = Word::gen(1);
    vec![a.pow(2), b.pow(3), a.mul(&b).pow(n)]
}

proptest! {
    #[test]
    fn format_parse_round_trip(w in word(3, 12)) {
        let n = names(3);
        let back = Word::parse(&w.format(&n), &n).unwrap();
        prop_assert_eq!(back, w);
    }

    #[test]
    fn inverse_and_evaluation(w in word(2, 10), v in word(2, 10), x in s5_perm(), y in s5_perm()) {
        prop_assert!(w.mul(&w.inverse()).is_identity());
        let imgs = [x, y];
        prop_assert_eq!(w.mul(&v).evaluate(&imgs), w.evaluate(&imgs).mul(&v.evaluate(&imgs)));
        prop_assert!(w.inverse().evaluate(&imgs).mul(&w.evaluate(&imgs)).is_identity());
        let c = w.cyclically_reduced();
        // cyclic reduction conjugates, so the order is unchanged
        prop_assert_eq!(c.evaluate(&imgs).order(), w.evaluate(&imgs).order());
    }

    #[test]
    fn coset_count_ignores_relator_order(n in 2i32..=5, perm in Just(vec![0usize, 1, 2]).prop_shuffle(),
                                         rot in prop::collection::vec(0usize..8, 3), flip in prop::collection::vec(any::<bool>(), 3)) {
        let base = von_dyck(n);
        let rels: Vec<Word> = perm.iter().zip(rot.iter().zip(&flip)).map(|(&i, (&r, &f))| {
            let w = &base[i];
            let l = w.letters().to_vec();
            let k = r % l.len().max(1);
            let rotated = Word::from_letters(l[k..].iter().chain(&l[..k]).copied());
            if f { rotated.inverse() } else { rotated }
        }).collect();
        let p = Presentation::new(names(2), rels).unwrap();
        let order = [6usize, 12, 24, 60][(n - 2) as usize];
        match todd_coxeter(&p, &[], 10_000).unwrap() {
            Enumeration::Complete(t) => prop_assert_eq!(t.index(), order),
            Enumeration::Overflow { .. } => prop_assert!(false, "overflow"),
        }
        let sub = todd_coxeter(&p, &[Word::gen(0)], 10_000).unwrap();
        prop_assert_eq!(sub.index(), Some(order / 2));
    }

    #[test]
    fn abelianization_survives_tietze_moves(rels in prop::collection::vec(word(3, 8), 1..4), conj in word(3, 5),
                                            pick in 0usize..4, extra in word(3, 6)) {
        let rels: Vec<Word> = rels.into_iter().filter(|w| !w.cyclically_reduced().is_identity()).collect();
        prop_assume!(!rels.is_empty());
        let p = Presentation::new(names(3), rels.clone()).unwrap();
        let before = abelianization(&p);
        // add a consequence
        let r = &rels[pick % rels.len()];
        let consequence = conj.inverse().mul(r).mul(&conj).mul(&rels[0]);
        let added = p.with_relator(consequence).unwrap();
        prop_assert_eq!(abelianization(&added), before.clone());
        // add a generator d with d = extra
        let mut with_gen = rels.clone();
        with_gen.push(Word::gen(3).inverse().mul(&extra));
        let p4 = Presentation::new(names(4), with_gen).unwrap();
        prop_assert_eq!(abelianization(&p4), before);
    }

    #[test]
    fn element_orders_divide_group_order(seed in any::<u64>(), k in 1usize..4) {
        let mut rng = rand::rngs::StdRng::seed_from_u64(seed);
        let psu = psu33_cached().unwrap();
        let g = psu.group.random(&mut rng);
        prop_assert_eq!(6048 % g.order() as u128, 0);
        prop_assert!(psu.group.contains(&g));
        let s6 = symmetric(6);
        let gens: Vec<Perm> = (0..k).map(|_| s6.random(&mut rng)).collect();
        let h = PermGroup::new(6, gens.clone()).unwrap();
        prop_assert_eq!(720 % h.order(), 0);
        for x in &gens {
            prop_assert_eq!(h.order() % x.order() as u128, 0);
        }
        prop_assert_eq!(h.closure_order(1000), Some(h.order() as usize));
    }

    #[test]
    fn reduction_is_a_ring_map(a in prop::array::uniform4(-20i64..20), b in prop::array::uniform4(-20i64..20)) {
        let (x, y) = (CycloElem::from_ints(a), CycloElem::from_ints(b));
        let (rx, ry) = (reduce_elem(&x).unwrap(), reduce_elem(&y).unwrap());
        prop_assert_eq!(reduce_elem(&(&x + &y)).unwrap(), rx + ry);
        prop_assert_eq!(reduce_elem(&(&x * &y)).unwrap(), rx * ry);
        prop_assert_eq!(reduce_elem(&x.tau()).unwrap(), rx.frob());
    }

    #[test]
    fn conversions_scale_along_covers(e in 1i64..50_000, d in 1i64..50) {
        let eps = dec("1e-8");
        let base = invariant_conversions(&qi(e), &eps).unwrap();
        let cover = invariant_conversions(&qi(d * e), &eps).unwrap();
        prop_assert_eq!(&cover.k2, &(base.k2.clone() * qi(d)));
        prop_assert_eq!(&cover.chi_o, &(base.chi_o.clone() * qi(d)));
        prop_assert_eq!(&cover.k2, &(cover.chi_o.clone() * qi(9)));
        prop_assert!(cover.volume.overlaps(&base.volume.scale(&qi(d))));
        prop_assert_eq!(base.chi_o * qi(3), qi(e));
    }
}

#[test]
fn gamma_abelianization_is_z3() {
    assert_eq!(abelianization(&Presentation::gamma()), vec![BigInt::from(3)]);
}
