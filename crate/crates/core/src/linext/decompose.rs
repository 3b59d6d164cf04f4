//! Splitting extensions of a disjoint union, and lifting extensions of convex subsets.

use serde::{Deserialize, Serialize};

use super::LinearExtension;
use crate::error::{Error, Result};
use crate::poset::{ElementSet, Poset};

/// `ℓ ↦ (ℓ_P, ℓ_Q, S(P), S(Q))` for `ℓ ∈ L(P + Q)`, where `Q`'s ids are shifted by `|P|`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TDecomposition {
    pub ell_p: LinearExtension,
    pub ell_q: LinearExtension,
    /// Labels (1-indexed, increasing) carried by elements of `P`.
    pub s_p: Vec<usize>,
    pub s_q: Vec<usize>,
}

pub fn t_decompose(p: &Poset, q: &Poset, ext: &LinearExtension) -> Result<TDecomposition> {
    let m = p.len();
    let union = p.disjoint_union(q);
    if !ext.is_extension_of(&union) {
        return Err(Error::Component(format!("{:?}", ext.word())));
    }
    let (mut wp, mut wq, mut s_p, mut s_q) = (Vec::new(), Vec::new(), Vec::new(), Vec::new());
    for (k, &x) in ext.word().iter().enumerate() {
        if x < m {
            wp.push(x);
            s_p.push(k + 1);
        } else {
            wq.push(x - m);
            s_q.push(k + 1);
        }
    }
    Ok(TDecomposition {
        ell_p: LinearExtension::from_word_unchecked(wp),
        ell_q: LinearExtension::from_word_unchecked(wq),
        s_p,
        s_q,
    })
}

pub fn t_recompose(p: &Poset, q: &Poset, d: &TDecomposition) -> Result<LinearExtension> {
    let (m, n) = (p.len(), q.len());
    let bad = |why: &str| Err(Error::Component(why.to_string()));
    if !d.ell_p.is_extension_of(p) || !d.ell_q.is_extension_of(q) {
        return bad("component words are not extensions");
    }
    if d.s_p.len() != m || d.s_q.len() != n {
        return bad("label set sizes do not match the components");
    }
    let mut owner = vec![None; m + n];
    for (set, side) in [(&d.s_p, false), (&d.s_q, true)] {
        for &l in set.iter() {
            if l == 0 || l > m + n || owner[l - 1].replace(side).is_some() {
                return bad("label sets do not partition 1..=m+n");
            }
        }
    }
    let (mut ip, mut iq) = (d.ell_p.word().iter(), d.ell_q.word().iter());
    let word = owner
        .into_iter()
        .map(|side| match side {
            Some(false) => *ip.next().expect("sizes checked"),
            _ => m + *iq.next().expect("sizes checked"),
        })
        .collect();
    Ok(LinearExtension::from_word_unchecked(word))
}

/// For convex `subset` and `ext` an extension of the induced subposet (ids renumbered in
/// increasing order), an extension of `p` labeling the subset consecutively in the same
/// relative order, together with the label offset.
pub fn lift_convex_extension(p: &Poset, subset: ElementSet, ext: &LinearExtension) -> Result<(LinearExtension, usize)> {
    if !p.is_convex(subset)? {
        return Err(Error::Param(format!("{:?} is not convex", subset.to_vec())));
    }
    let ids = subset.to_vec();
    let sub = p.induced_subposet(subset)?;
    if !ext.is_extension_of(&sub) {
        return Err(Error::NotExtension(format!("{:?}", ext.word())));
    }
    let below = subset.iter().fold(ElementSet::EMPTY, |acc, s| acc.union(p.down_set(s))).difference(subset);
    let rest = p.elements().difference(subset).difference(below);
    let order = p.topological_order();
    let mut word: Vec<usize> = order.iter().copied().filter(|&x| below.contains(x)).collect();
    let offset = word.len();
    word.extend(ext.word().iter().map(|&a| ids[a]));
    word.extend(order.iter().copied().filter(|&x| rest.contains(x)));
    let lifted = LinearExtension::from_word_unchecked(word);
    debug_assert!(lifted.is_extension_of(p));
    Ok((lifted, offset))
}

#[cfg(test)]
mod tests {
    use super::*;

    /// The 10-element example: P is the left 6-element component, Q the right 4-element one.
    fn example() -> (Poset, Poset, LinearExtension) {
        // Left: r < u, r < v (via the diagonals), u < m, v < m, with tops w1 (over u) and w2 (over v).
        // Drawn labels: r=1, u=2, v=4, w1=6, m=5, w2=9.
        let p = Poset::from_covers(6, &[(0, 1), (0, 2), (1, 3), (1, 4), (2, 4), (2, 5)]).unwrap();
        // Right: two bottoms 3 and 7, two tops 8 and 10, complete bipartite.
        let q = Poset::from_covers(4, &[(0, 2), (0, 3), (1, 2), (1, 3)]).unwrap();
        // ids: P 0=r 1=u 2=v 3=w1 4=m 5=w2; Q (shifted) 6=b3 7=b7 8=t8 9=t10.
        let labels = [1, 2, 4, 6, 5, 9, 3, 7, 8, 10];
        (p, q, LinearExtension::from_labels(&labels))
    }

    #[test]
    fn worked_label_sets() {
        let (p, q, ext) = example();
        assert!(ext.is_extension_of(&p.disjoint_union(&q)));
        let d = t_decompose(&p, &q, &ext).unwrap();
        assert_eq!(d.s_p, vec![1, 2, 4, 5, 6, 9]);
        assert_eq!(d.s_q, vec![3, 7, 8, 10]);
        assert_eq!(d.ell_p.labels(), vec![1, 2, 3, 5, 4, 6]);
        assert_eq!(d.ell_q.labels(), vec![1, 2, 3, 4]);
        assert_eq!(t_recompose(&p, &q, &d).unwrap(), ext);
    }

    #[test]
    fn empty_component() {
        let p = Poset::from_covers(2, &[(0, 1)]).unwrap();
        let e = Poset::empty();
        let ext = LinearExtension::new(&p, vec![0, 1]).unwrap();
        let d = t_decompose(&p, &e, &ext).unwrap();
        assert_eq!(d.s_p, vec![1, 2]);
        assert!(d.s_q.is_empty());
        assert_eq!(t_recompose(&p, &e, &d).unwrap(), ext);
    }

    #[test]
    fn rejects_foreign_words() {
        let p = Poset::from_covers(2, &[(0, 1)]).unwrap();
        let bad = LinearExtension::from_word_unchecked(vec![1, 0, 2]);
        assert!(matches!(t_decompose(&p, &Poset::from_covers(1, &[]).unwrap(), &bad), Err(Error::Component(_))));
    }

    #[test]
    fn lift_into_chain_middle() {
        let p = Poset::from_covers(4, &[(0, 1), (0, 2), (1, 3), (2, 3)]).unwrap();
        let s = ElementSet::from_elements([1, 2]);
        let sub_ext = LinearExtension::from_word_unchecked(vec![1, 0]);
        let (lifted, offset) = lift_convex_extension(&p, s, &sub_ext).unwrap();
        assert_eq!((lifted.word(), offset), (&[0, 2, 1, 3][..], 1));
        assert!(lift_convex_extension(&p, ElementSet::from_elements([0, 3]), &sub_ext).is_err());
    }
}
