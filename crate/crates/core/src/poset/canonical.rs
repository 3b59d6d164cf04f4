//! Canonical forms by invariant-refined permutation search.
//!
//! Elements are colored by an isomorphism-invariant refinement (down-set and
//! up-set sizes, depth, then the colors of their covers). Only orderings that
//! list color classes in a fixed order are searched, and the code of an
//! ordering is laid out so that a placed prefix fixes a prefix of the code,
//! which lets the search prune early.

use std::cmp::Ordering;

use super::Poset;
use crate::error::{Error, Result};

/// Largest poset accepted by [`canonical_form`].
pub const CANONICAL_CAP: usize = 8;

fn refined_colors(p: &Poset) -> Vec<usize> {
    let n = p.len();
    let mut depth = vec![0usize; n];
    for &x in &p.topological_order() {
        depth[x] = p.lower_covers(x).map(|y| depth[y] + 1).max().unwrap_or(0);
    }
    let mut colors = rank(&(0..n).map(|x| vec![p.down_set(x).len(), p.up_set(x).len(), depth[x]]).collect::<Vec<_>>());
    loop {
        let sigs: Vec<Vec<usize>> = (0..n)
            .map(|x| {
                let mut ups: Vec<usize> = p.upper_covers(x).map(|y| colors[y]).collect();
                let mut downs: Vec<usize> = p.lower_covers(x).map(|y| colors[y]).collect();
                ups.sort_unstable();
                downs.sort_unstable();
                let mut sig = vec![colors[x], ups.len()];
                sig.extend(ups);
                sig.push(usize::MAX);
                sig.extend(downs);
                sig
            })
            .collect();
        let next = rank(&sigs);
        let before = colors.iter().max().map_or(0, |m| m + 1);
        let after = next.iter().max().map_or(0, |m| m + 1);
        colors = next;
        if after == before {
            return colors;
        }
    }
}

fn rank(sigs: &[Vec<usize>]) -> Vec<usize> {
    let mut distinct: Vec<&Vec<usize>> = sigs.iter().collect();
    distinct.sort();
    distinct.dedup();
    sigs.iter().map(|s| distinct.binary_search(&s).expect("present")).collect()
}

struct Search<'a> {
    poset: &'a Poset,
    slots: Vec<usize>,
    colors: Vec<usize>,
    seq: Vec<usize>,
    used: Vec<bool>,
    code: Vec<bool>,
    best: Option<(Vec<bool>, Vec<usize>)>,
}

impl Search<'_> {
    fn place(&mut self, pos: usize) {
        let n = self.poset.len();
        if pos == n {
            let better = match &self.best {
                None => true,
                Some((best, _)) => self.code < *best,
            };
            if better {
                self.best = Some((self.code.clone(), self.seq.clone()));
            }
            return;
        }
        for x in 0..n {
            if self.used[x] || self.colors[x] != self.slots[pos] {
                continue;
            }
            let mark = self.code.len();
            for a in 0..pos {
                let y = self.seq[a];
                self.code.push(self.poset.leq(y, x));
                self.code.push(self.poset.leq(x, y));
            }
            let prune = match &self.best {
                Some((best, _)) => self.code[..].cmp(&best[..self.code.len()]) == Ordering::Greater,
                None => false,
            };
            if !prune {
                self.used[x] = true;
                self.seq.push(x);
                self.place(pos + 1);
                self.seq.pop();
                self.used[x] = false;
            }
            self.code.truncate(mark);
        }
    }
}

fn search(p: &Poset) -> Result<(Vec<bool>, Vec<usize>)> {
    let n = p.len();
    if n > CANONICAL_CAP {
        return Err(Error::Cap { what: "canonical form size", cap: CANONICAL_CAP, got: n });
    }
    let colors = refined_colors(p);
    let mut slots = colors.clone();
    slots.sort_unstable();
    let mut s = Search {
        poset: p,
        slots,
        colors,
        seq: Vec::with_capacity(n),
        used: vec![false; n],
        code: Vec::new(),
        best: None,
    };
    s.place(0);
    Ok(s.best.unwrap_or_default())
}

/// `perm[old_id] = new_id` taking `p` to its canonical representative.
pub fn canonical_labeling(p: &Poset) -> Result<Vec<usize>> {
    let (_, seq) = search(p)?;
    let mut perm = vec![0; p.len()];
    for (new, &old) in seq.iter().enumerate() {
        perm[old] = new;
    }
    Ok(perm)
}

/// Byte string identifying the isomorphism class: the size followed by the packed relation code.
pub fn canonical_form(p: &Poset) -> Result<Vec<u8>> {
    let (code, _) = search(p)?;
    let mut bytes = vec![p.len() as u8];
    bytes.extend(code.chunks(8).map(|c| c.iter().enumerate().fold(0u8, |acc, (i, &b)| acc | u8::from(b) << i)));
    Ok(bytes)
}

pub fn canonical_poset(p: &Poset) -> Result<Poset> {
    Ok(p.relabel(&canonical_labeling(p)?))
}

pub fn is_isomorphic(p: &Poset, q: &Poset) -> Result<bool> {
    if p.len() != q.len() || p.covers().len() != q.covers().len() {
        return Ok(false);
    }
    Ok(canonical_form(p)? == canonical_form(q)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poset::{antichain, chain, n_poset};

    #[test]
    fn chain_is_self_dual() {
        assert!(is_isomorphic(&chain(3), &chain(3).dual()).unwrap());
    }

    #[test]
    fn fence_is_self_dual() {
        let n = n_poset(1, 1, 1).unwrap();
        assert!(is_isomorphic(&n, &n.dual()).unwrap());
    }

    #[test]
    fn v_and_wedge_differ() {
        let v = antichain(1).ordinal_sum(&antichain(2));
        assert!(!is_isomorphic(&v, &v.dual()).unwrap());
    }

    #[test]
    fn labeling_matches_form() {
        let p = Poset::from_covers(5, &[(3, 0), (3, 1), (4, 1), (2, 4)]).unwrap();
        let perm: Vec<usize> = vec![2, 4, 0, 1, 3];
        let q = p.relabel(&perm);
        assert_eq!(canonical_form(&p).unwrap(), canonical_form(&q).unwrap());
        assert_eq!(canonical_poset(&p).unwrap(), canonical_poset(&q).unwrap());
    }

    #[test]
    fn cap_is_enforced() {
        assert!(matches!(canonical_form(&antichain(9)), Err(Error::Cap { .. })));
    }
}
