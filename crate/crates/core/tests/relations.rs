//! Relation checks against word-level computations, plus structural invariants.

use std::collections::{BTreeSet, HashMap, HashSet};

use bkposet::linext::{bk_move, lift_convex_extension};
use bkposet::poset::{chain, ferrers, is_isomorphic, partitions_of};
use bkposet::relations::{
    braid_holds, cactus_failures, check_numeric_laws, is_le_cactus, is_le_primitive, is_le_symmetric, MoveTables,
};
use bkposet::scan::all_posets;
use bkposet::tableau::{all_csts, all_syt, cst_bk_move, linext_to_syt, syt_to_linext};
use bkposet::{bk_group, ElementSet, LinExtSpace, LinearExtension, Partition, Poset};
use num_bigint::BigUint;

/// Move words acting on arbitrary states; `t(i, x)` for `1 <= i < n`.
struct Words<'a, S> {
    n: usize,
    t: &'a dyn Fn(usize, &S) -> S,
}

impl<S: Clone> Words<'_, S> {
    fn promote(&self, i: usize, x: &S) -> S {
        (1..=i).fold(x.clone(), |y, k| (self.t)(k, &y))
    }

    fn evacuate(&self, i: usize, x: &S) -> S {
        (0..=i).rev().fold(x.clone(), |y, k| self.promote(k, &y))
    }

    fn q(&self, j: usize, k: usize, x: &S) -> S {
        self.evacuate(k - 1, &self.evacuate(k - j, &self.evacuate(k - 1, x)))
    }

    fn cactus_fixes(&self, i: usize, j: usize, k: usize, x: &S) -> S {
        let once = (self.t)(i, &self.q(j, k, x));
        (self.t)(i, &self.q(j, k, &once))
    }

    fn eligible(&self) -> Vec<(usize, usize, usize)> {
        let n = self.n;
        (1..n).flat_map(|i| (i + 2..n).flat_map(move |j| (j + 1..=n).map(move |k| (i, j, k)))).collect()
    }
}

fn ext_words(p: &Poset) -> Vec<LinearExtension> {
    LinExtSpace::enumerate(p).unwrap().extensions().to_vec()
}

#[test]
fn cactus_failures_match_word_computation() {
    for n in 0..=5 {
        for p in all_posets(n).unwrap() {
            let exts = ext_words(&p);
            let t = |i: usize, e: &LinearExtension| bk_move(&p, e, i).unwrap();
            let words = Words { n, t: &t };
            let expected: BTreeSet<(usize, usize, usize)> = words
                .eligible()
                .into_iter()
                .filter(|&(i, j, k)| exts.iter().any(|e| &words.cactus_fixes(i, j, k, e) != e))
                .collect();
            let got: BTreeSet<_> = cactus_failures(&p).unwrap().iter().map(|f| (f.i, f.j, f.k)).collect();
            assert_eq!(got, expected, "{p:?}");
            for f in cactus_failures(&p).unwrap() {
                let first = exts.iter().position(|e| &words.cactus_fixes(f.i, f.j, f.k, e) != e);
                assert_eq!(Some(f.witness), first);
            }
        }
    }
}

#[test]
fn braid_matches_word_computation() {
    for n in 0..=5 {
        for p in all_posets(n).unwrap() {
            let exts = ext_words(&p);
            let braid = (1..n.saturating_sub(1)).all(|i| {
                exts.iter().all(|e| {
                    let mut x = e.clone();
                    for _ in 0..3 {
                        x = bk_move(&p, &bk_move(&p, &x, i).unwrap(), i + 1).unwrap();
                    }
                    &x == e
                })
            });
            assert_eq!(braid_holds(&p).unwrap(), braid, "{p:?}");
        }
    }
}

fn cst_relations(shape: &Partition, max_entry: usize) {
    let all = all_csts(shape, max_entry);
    let t = |i: usize, x: &bkposet::ColumnStrictTableau| cst_bk_move(x, i).unwrap();
    let words = Words { n: max_entry, t: &t };
    for x in &all {
        for i in 1..max_entry {
            assert_eq!(&t(i, &t(i, x)), x);
            for j in i + 2..max_entry {
                assert_eq!(t(i, &t(j, x)), t(j, &t(i, x)), "{shape:?} t{i} t{j}");
            }
        }
        for k in 2..=max_entry {
            for j in 1..k {
                assert_eq!(&words.q(j, k, &words.q(j, k, x)), x);
            }
        }
        for (i, j, k) in words.eligible() {
            assert_eq!(&words.cactus_fixes(i, j, k, x), x, "{shape:?} ({i},{j},{k})");
        }
    }
}

#[test]
fn tableau_moves_satisfy_the_cactus_relations() {
    for size in 1..=4 {
        for shape in partitions_of(size) {
            cst_relations(&shape, size + 2);
        }
    }
    cst_relations(&Partition::new(vec![3, 2]).unwrap(), 5);
}

#[test]
fn standard_tableau_moves_agree_with_extension_moves() {
    for size in 1..=6 {
        for shape in partitions_of(size) {
            let p = ferrers(&shape).unwrap();
            for syt in all_syt(&shape) {
                let e = syt_to_linext(&syt).unwrap();
                assert!(e.is_extension_of(&p));
                assert_eq!(linext_to_syt(&e, &shape).unwrap(), syt);
                for i in 1..size {
                    let moved = linext_to_syt(&bk_move(&p, &e, i).unwrap(), &shape).unwrap();
                    assert_eq!(moved, cst_bk_move(&syt, i).unwrap());
                }
            }
            assert!(is_le_cactus(&p).unwrap(), "{shape:?}");
        }
    }
}

#[test]
fn ferrers_of_the_conjugate_is_isomorphic() {
    for size in 1..=7 {
        for shape in partitions_of(size) {
            let a = ferrers(&shape).unwrap();
            let b = ferrers(&shape.conjugate()).unwrap();
            assert!(is_isomorphic(&a, &b).unwrap(), "{shape:?}");
        }
    }
}

fn convex_subsets(p: &Poset) -> Vec<ElementSet> {
    (1u64..1 << p.len()).map(ElementSet).filter(|&s| p.is_convex(s).unwrap()).collect()
}

#[test]
fn convex_lifts_carry_moves() {
    for n in 1..=5 {
        for p in all_posets(n).unwrap() {
            for s in convex_subsets(&p) {
                let sub = p.induced_subposet(s).unwrap();
                let ids = s.to_vec();
                for v in ext_words(&sub) {
                    let (lift, offset) = lift_convex_extension(&p, s, &v).unwrap();
                    assert!(lift.is_extension_of(&p));
                    let labels = lift.labels();
                    let sub_labels = v.labels();
                    for (k, &x) in ids.iter().enumerate() {
                        assert_eq!(labels[x], sub_labels[k] + offset);
                    }
                    for i in 1..sub.len() {
                        let (moved, off2) = lift_convex_extension(&p, s, &bk_move(&sub, &v, i).unwrap()).unwrap();
                        assert_eq!(off2, offset);
                        assert_eq!(bk_move(&p, &lift, i + offset).unwrap(), moved);
                    }
                }
            }
        }
    }
}

#[test]
fn braid_failures_pass_to_convex_supersets() {
    for n in 3..=5 {
        for p in all_posets(n).unwrap() {
            if braid_holds(&p).unwrap() {
                for s in convex_subsets(&p) {
                    assert!(braid_holds(&p.induced_subposet(s).unwrap()).unwrap(), "{p:?} {:?}", s.to_vec());
                }
            }
        }
    }
}

#[test]
fn dual_posets_share_group_properties() {
    for n in 0..=6 {
        for p in all_posets(n).unwrap() {
            let d = p.dual();
            assert_eq!(bk_group(&p).unwrap().order(), bk_group(&d).unwrap().order(), "{p:?}");
            assert_eq!(is_le_symmetric(&p).unwrap(), is_le_symmetric(&d).unwrap());
            assert_eq!(is_le_primitive(&p).unwrap(), is_le_primitive(&d).unwrap());
            assert_eq!(braid_holds(&p).unwrap(), braid_holds(&d).unwrap());
        }
    }
}

#[test]
fn chains_at_the_ends_do_not_change_the_group() {
    for n in 1..=4 {
        for p in all_posets(n).unwrap() {
            let base = bk_group(&p).unwrap();
            for (a, b) in [(1, 0), (0, 1), (2, 1)] {
                let q = chain(a).ordinal_sum(&p).ordinal_sum(&chain(b));
                let g = bk_group(&q).unwrap();
                assert_eq!(g.degree(), base.degree());
                assert_eq!(g.order(), base.order(), "{p:?} with C_{a} and C_{b}");
                let trivial = MoveTables::new(&q).unwrap().trivial_moves();
                assert!((1..=a).all(|i| trivial.contains(&i)));
                assert!((q.len() - b..q.len()).all(|i| trivial.contains(&i)));
            }
        }
    }
}

/// Order of the group generated by `gens` acting on `0..degree`, or `None` past `budget`.
fn closure_size(degree: usize, gens: &[Vec<usize>], budget: usize) -> Option<usize> {
    let id: Vec<usize> = (0..degree).collect();
    let mut seen = HashSet::from([id.clone()]);
    let mut stack = vec![id];
    while let Some(g) = stack.pop() {
        for s in gens {
            let h: Vec<usize> = g.iter().map(|&x| s[x]).collect();
            if seen.insert(h.clone()) {
                if seen.len() > budget {
                    return None;
                }
                stack.push(h);
            }
        }
    }
    Some(seen.len())
}

#[test]
fn group_orders_match_closure_over_the_census() {
    let mut compared = 0;
    for n in 0..=6 {
        for p in all_posets(n).unwrap() {
            let exts = ext_words(&p);
            let index: HashMap<&[usize], usize> = exts.iter().enumerate().map(|(k, e)| (e.word(), k)).collect();
            let gens: Vec<Vec<usize>> =
                (1..n).map(|i| exts.iter().map(|e| index[bk_move(&p, e, i).unwrap().word()]).collect()).collect();
            if let Some(order) = closure_size(exts.len(), &gens, 20_000) {
                assert_eq!(bk_group(&p).unwrap().order(), BigUint::from(order), "{p:?}");
                compared += 1;
            }
        }
    }
    assert!(compared >= 150, "{compared}");
}

#[test]
fn numeric_laws_hold_on_examples() {
    let specs = ["ferrers:3,2", "chain:4", "antichain:3", "zigzag:5", "N:1,1,1", "jdt9"];
    for spec in specs {
        let p = bkposet::poset::parse_family_spec(spec).unwrap();
        let laws = check_numeric_laws(&p, None).unwrap();
        assert!(laws.all_hold(), "{spec}: {:?}", laws.checks);
    }
    let p = bkposet::poset::parse_family_spec("antichain:2").unwrap();
    let q = bkposet::poset::parse_family_spec("zigzag:4").unwrap();
    let laws = check_numeric_laws(&p, Some(&q)).unwrap();
    assert!(laws.all_hold(), "{:?}", laws.checks);
    assert!(laws.get("dsum_bound").is_some());
}
