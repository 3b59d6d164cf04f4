//! The acceptance battery: the library's verification suite, with independent word-level
//! recomputations layered on the items where they are cheap.

use std::collections::{HashMap, HashSet, VecDeque};
use std::process::ExitCode;
use std::time::Instant;

use bkposet::linext::degree_cap_from_env;
use bkposet::poset::{jdt9, twin_fail5};
use bkposet::relations::{braid_holds, trivial_moves};
use bkposet::scan::{all_posets, fixed_base_order, verify_suite, ItemStatus};
use bkposet::{bk_group, LinExtSpace, Permutation, Poset};
use num_bigint::BigUint;

type Word = Vec<usize>;

/// Extensions as words, by brute-force recursion on minimal elements.
fn words(p: &Poset) -> Vec<Word> {
    fn go(p: &Poset, used: &mut Vec<bool>, w: &mut Word, out: &mut Vec<Word>) {
        if w.len() == p.len() {
            out.push(w.clone());
            return;
        }
        for x in 0..p.len() {
            if !used[x] && (0..p.len()).all(|y| used[y] || !p.lt(y, x)) {
                used[x] = true;
                w.push(x);
                go(p, used, w, out);
                w.pop();
                used[x] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(p, &mut vec![false; p.len()], &mut Vec::new(), &mut out);
    out
}

/// Swaps the elements in positions `i` and `i + 1` (1-based) when incomparable.
fn t(p: &Poset, i: usize, w: &Word) -> Word {
    let mut v = w.clone();
    if !p.comparable(v[i - 1], v[i]) {
        v.swap(i - 1, i);
    }
    v
}

fn promote(p: &Poset, i: usize, w: &Word) -> Word {
    (1..=i).fold(w.clone(), |v, k| t(p, k, &v))
}

fn evacuate(p: &Poset, i: usize, w: &Word) -> Word {
    (0..=i).rev().fold(w.clone(), |v, k| promote(p, k, &v))
}

fn q(p: &Poset, j: usize, k: usize, w: &Word) -> Word {
    evacuate(p, k - 1, &evacuate(p, k - j, &evacuate(p, k - 1, w)))
}

fn cactus_holds_at(p: &Poset, (i, j, k): (usize, usize, usize), w: &Word) -> bool {
    let once = t(p, i, &q(p, j, k, w));
    &t(p, i, &q(p, j, k, &once)) == w
}

fn eligible(n: usize) -> Vec<(usize, usize, usize)> {
    (1..n).flat_map(|i| (i + 2..n).flat_map(move |j| (j + 1..=n).map(move |k| (i, j, k)))).collect()
}

fn moves_as_images(p: &Poset, ws: &[Word]) -> Vec<Vec<usize>> {
    let index: HashMap<&Word, usize> = ws.iter().enumerate().map(|(k, w)| (w, k)).collect();
    (1..p.len()).map(|i| ws.iter().map(|w| index[&t(p, i, w)]).collect()).collect()
}

const CLOSURE_BUDGET: usize = 200_000;

/// Group order by closure, or `None` past [`CLOSURE_BUDGET`] elements.
fn closure(degree: usize, gens: &[Vec<usize>]) -> Option<usize> {
    let id: Vec<usize> = (0..degree).collect();
    let mut seen = HashSet::from([id.clone()]);
    let mut stack = vec![id];
    while let Some(g) = stack.pop() {
        for s in gens {
            let h: Vec<usize> = g.iter().map(|&x| s[x]).collect();
            if seen.insert(h.clone()) {
                if seen.len() > CLOSURE_BUDGET {
                    return None;
                }
                stack.push(h);
            }
        }
    }
    Some(seen.len())
}

fn census(max: usize) -> Vec<Poset> {
    (0..=max).flat_map(|n| all_posets(n).unwrap()).collect()
}

#[derive(Default)]
struct Oracle {
    checked: usize,
    failures: Vec<String>,
}

impl Oracle {
    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failures.push(what());
        }
    }
}

fn bowtie(o: &mut Oracle) {
    let p = Poset::from_covers(4, &[(0, 2), (0, 3), (1, 2), (1, 3)]).unwrap();
    let ws = words(&p);
    o.check(ws.len() == 4, || format!("{} extensions", ws.len()));
    let mut labels = Vec::new();
    for (a, w) in ws.iter().enumerate() {
        for i in 1..4 {
            let b = ws.iter().position(|v| v == &t(&p, i, w)).unwrap();
            if a < b {
                labels.push(i);
            }
        }
    }
    labels.sort_unstable();
    o.check(labels == [1, 1, 3, 3], || format!("edge labels {labels:?}"));
}

fn universal_relations(o: &mut Oracle) {
    for p in census(5) {
        let n = p.len();
        for w in words(&p) {
            for i in 1..n {
                o.check(t(&p, i, &t(&p, i, &w)) == w, || format!("t_{i}^2 on {w:?}"));
                for j in i + 2..n {
                    let x = t(&p, i, &t(&p, j, &t(&p, i, &t(&p, j, &w))));
                    o.check(x == w, || format!("(t_{i} t_{j})^2 on {w:?}"));
                }
                if i + 1 < n {
                    let x = (0..6).fold(w.clone(), |v, _| t(&p, i, &t(&p, i + 1, &v)));
                    o.check(x == w, || format!("(t_{i} t_{})^6 on {w:?}", i + 1));
                }
            }
        }
    }
}

fn transitivity(o: &mut Oracle) {
    for p in census(6) {
        let ws = words(&p);
        let mut seen = HashSet::from([ws[0].clone()]);
        let mut queue = VecDeque::from([ws[0].clone()]);
        while let Some(w) = queue.pop_front() {
            for i in 1..p.len() {
                let v = t(&p, i, &w);
                if seen.insert(v.clone()) {
                    queue.push_back(v);
                }
            }
        }
        o.check(seen.len() == ws.len(), || format!("{p:?} has {} of {} reachable", seen.len(), ws.len()));
    }
}

fn trivialization(o: &mut Oracle) {
    for p in census(6) {
        let n = p.len();
        let ws = words(&p);
        let fixed: Vec<usize> = (1..n).filter(|&i| ws.iter().all(|w| &t(&p, i, w) == w)).collect();
        let splits: Vec<usize> =
            (1..n).filter(|&i| ws[0][..i].iter().all(|&a| ws[0][i..].iter().all(|&b| p.lt(a, b)))).collect();
        o.check(fixed == splits, || format!("{p:?}: fixed {fixed:?}, splits {splits:?}"));
        o.check(trivial_moves(&p).unwrap() == fixed, || format!("{p:?}: library trivial moves"));
    }
}

fn braid(o: &mut Oracle) {
    for p in census(6) {
        let n = p.len();
        let ws = words(&p);
        let holds = (1..n.saturating_sub(1))
            .all(|i| ws.iter().all(|w| &(0..3).fold(w.clone(), |v, _| t(&p, i, &t(&p, i + 1, &v))) == w));
        let chains = (0..n).all(|x| p.upper_covers(x).count() <= 1 && p.lower_covers(x).count() <= 1);
        o.check(holds == chains, || format!("{p:?}: braid {holds}, chains {chains}"));
        o.check(braid_holds(&p).unwrap() == holds, || format!("{p:?}: library braid"));
    }
}

fn small_counterexamples(o: &mut Oracle) {
    let failing = all_posets(4)
        .unwrap()
        .into_iter()
        .filter(|p| p.is_connected())
        .filter(|p| words(p).iter().any(|w| !cactus_holds_at(p, (1, 3, 4), w)))
        .count();
    o.check(failing == 3, || format!("{failing} connected 4-element failures"));
    let p = twin_fail5();
    let ws = words(&p);
    for triple in eligible(5) {
        o.check(ws.iter().any(|w| !cactus_holds_at(&p, triple, w)), || format!("twin5 holds {triple:?}"));
    }
}

fn jdt9_failure(o: &mut Oracle) {
    let p = jdt9();
    let ws = words(&p);
    o.check(ws.iter().any(|w| !cactus_holds_at(&p, (3, 5, 9), w)), || "the 9-element poset satisfies (3,5,9)".into());
}

fn engine_consistency(o: &mut Oracle) {
    for p in census(6) {
        let ws = words(&p);
        if ws.len() > 24 {
            continue;
        }
        let gens = moves_as_images(&p, &ws);
        let got = bk_group(&p).unwrap().order();
        let order = match closure(ws.len(), &gens) {
            Some(order) => BigUint::from(order),
            None => {
                let perms: Vec<Permutation> = gens.into_iter().map(|g| Permutation::from_images(g).unwrap()).collect();
                fixed_base_order(ws.len(), &perms)
            }
        };
        o.check(got == order, || format!("{p:?}: {got} vs {order}"));
        let space = LinExtSpace::enumerate(&p).unwrap();
        let lib: Vec<&[usize]> = space.extensions().iter().map(|e| e.word()).collect();
        o.check(lib.iter().zip(&ws).all(|(a, b)| *a == b.as_slice()) && lib.len() == ws.len(), || {
            format!("{p:?}: extension lists")
        });
    }
    let counts: Vec<usize> = (0..=6).map(|n| all_posets(n).unwrap().len()).collect();
    o.check(counts == [1, 1, 2, 5, 16, 63, 318], || format!("census {counts:?}"));
}

fn main() -> ExitCode {
    let budget = degree_cap_from_env();
    let start = Instant::now();
    let report = match verify_suite(6, budget) {
        Ok(r) => r,
        Err(e) => {
            println!("FAIL suite could not run: {e}");
            return ExitCode::FAILURE;
        }
    };
    let oracles: HashMap<usize, fn(&mut Oracle)> = HashMap::from([
        (1, bowtie as fn(&mut Oracle)),
        (3, universal_relations),
        (4, transitivity),
        (5, trivialization),
        (6, braid),
        (8, small_counterexamples),
        (13, jdt9_failure),
        (18, engine_consistency),
    ]);
    let mut all_pass = true;
    for item in &report.items {
        let mut oracle = Oracle::default();
        if let Some(f) = oracles.get(&item.id) {
            f(&mut oracle);
        }
        let pass = item.status == ItemStatus::Pass && oracle.failures.is_empty();
        all_pass &= pass;
        let mut detail = item.detail.clone();
        if item.status == ItemStatus::Incomplete && detail.is_empty() {
            detail = "incomplete".into();
        }
        if let Some(first) = oracle.failures.first() {
            detail = format!("{detail} oracle: {first} ({} failures)", oracle.failures.len());
        }
        println!(
            "{} {:>2} {} (suite {} checked, oracle {} checked, {:.2}s) {}",
            if pass { "PASS" } else { "FAIL" },
            item.id,
            item.name,
            item.checked,
            oracle.checked,
            item.seconds,
            detail.trim()
        );
    }
    let passed = report.items.iter().filter(|it| it.status == ItemStatus::Pass).count();
    println!("{passed}/{} suite items passed in {:.1}s", report.items.len(), start.elapsed().as_secs_f64());
    if all_pass && report.items.len() == 18 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
