//! Operators on single extensions, and their permutation tables on `L(P)`.
//!
//! A product `a b` acts as `ℓ ↦ a(b(ℓ))`, so `∂_i = t_i ⋯ t_1` applies `t_1`
//! first and `q_i = ∂_0 ∂_1 ⋯ ∂_i` applies `∂_i` first.

use super::{check_move_index, check_promotion_index, LinExtSpace, LinearExtension};
use crate::error::{Error, Result};
use crate::permgroup::Permutation;
use crate::poset::Poset;

pub(crate) fn bk_move_unchecked(p: &Poset, ext: &LinearExtension, i: usize) -> LinearExtension {
    let w = ext.word();
    if p.comparable(w[i - 1], w[i]) {
        return ext.clone();
    }
    let mut word = w.to_vec();
    word.swap(i - 1, i);
    LinearExtension::from_word_unchecked(word)
}

/// `t_i` for `1 <= i <= n - 1`.
pub fn bk_move(p: &Poset, ext: &LinearExtension, i: usize) -> Result<LinearExtension> {
    check_move_index(p, i)?;
    Ok(bk_move_unchecked(p, ext, i))
}

/// Slide procedure on the elements labeled `1..=i+1`.
pub(crate) fn promotion_unchecked(p: &Poset, ext: &LinearExtension, i: usize) -> LinearExtension {
    let w = ext.word();
    if i == 0 {
        return ext.clone();
    }
    // Positions of the promotion chain; each step takes the upper cover with the least label.
    let mut chain = vec![0];
    loop {
        let cur = w[*chain.last().expect("non-empty")];
        let start = *chain.last().expect("non-empty") + 1;
        match (start..=i).find(|&q| p.upper_covers(cur).any(|y| y == w[q])) {
            Some(q) => chain.push(q),
            None => break,
        }
    }
    let mut word = w.to_vec();
    let mut on_chain = vec![false; i + 1];
    for &c in &chain {
        on_chain[c] = true;
    }
    for q in 1..=i {
        if !on_chain[q] {
            word[q - 1] = w[q];
        }
    }
    for pair in chain.windows(2) {
        word[pair[1] - 1] = w[pair[0]];
    }
    word[i] = w[*chain.last().expect("non-empty")];
    LinearExtension::from_word_unchecked(word)
}

/// `∂_i` for `0 <= i <= n - 1`, with `∂_0` the identity.
pub fn promotion(p: &Poset, ext: &LinearExtension, i: usize) -> Result<LinearExtension> {
    check_promotion_index(p, i)?;
    Ok(promotion_unchecked(p, ext, i))
}

/// `q_i = ∂_0 ∂_1 ⋯ ∂_i`.
pub fn evacuation(p: &Poset, ext: &LinearExtension, i: usize) -> Result<LinearExtension> {
    check_promotion_index(p, i)?;
    Ok((0..=i).rev().fold(ext.clone(), |acc, k| promotion_unchecked(p, &acc, k)))
}

fn check_jk(n: usize, j: usize, k: usize) -> Result<()> {
    if k > n {
        return Err(Error::Index { index: k, max: n });
    }
    if j == 0 || j >= k {
        return Err(Error::Index { index: j, max: k.saturating_sub(1) });
    }
    Ok(())
}

/// `q_{jk} = q_{k-1} q_{k-j} q_{k-1}` for `1 <= j < k <= n`.
pub fn q_jk(p: &Poset, ext: &LinearExtension, j: usize, k: usize) -> Result<LinearExtension> {
    check_jk(p.len(), j, k)?;
    let a = evacuation(p, ext, k - 1)?;
    let b = evacuation(p, &a, k - j)?;
    evacuation(p, &b, k - 1)
}

/// Index permutations of `t_i`, `∂_i` and `q_i` on a fixed `L(P)`.
#[derive(Clone, Debug)]
pub struct OperatorTable {
    n: usize,
    moves: Vec<Permutation>,
    promotions: Vec<Permutation>,
    evacuations: Vec<Permutation>,
}

impl OperatorTable {
    /// `∂_i` and `q_i` are composed from the `t_i` tables, never re-simulated.
    pub fn new(space: &LinExtSpace) -> Self {
        let n = space.poset().len();
        let moves: Vec<Permutation> = (1..n).map(|i| space.move_permutation(i).expect("in range")).collect();
        let id = Permutation::identity(space.len());
        let mut promotions = vec![id.clone()];
        for t in &moves {
            let next = t.compose(promotions.last().expect("non-empty"));
            promotions.push(next);
        }
        let mut evacuations = vec![id];
        for d in &promotions[1..] {
            let next = evacuations.last().expect("non-empty").compose(d);
            evacuations.push(next);
        }
        OperatorTable { n, moves, promotions, evacuations }
    }

    pub fn poset_size(&self) -> usize {
        self.n
    }

    pub fn degree(&self) -> usize {
        self.promotions[0].degree()
    }

    pub fn moves(&self) -> &[Permutation] {
        &self.moves
    }

    pub fn t(&self, i: usize) -> Result<&Permutation> {
        if i == 0 || i >= self.n {
            return Err(Error::Index { index: i, max: self.n.saturating_sub(1) });
        }
        Ok(&self.moves[i - 1])
    }

    pub fn promotion(&self, i: usize) -> Result<&Permutation> {
        self.promotions.get(i).ok_or(Error::Index { index: i, max: self.n.saturating_sub(1) })
    }

    pub fn evacuation(&self, i: usize) -> Result<&Permutation> {
        self.evacuations.get(i).ok_or(Error::Index { index: i, max: self.n.saturating_sub(1) })
    }

    pub fn q_jk(&self, j: usize, k: usize) -> Result<Permutation> {
        check_jk(self.n, j, k)?;
        let outer = &self.evacuations[k - 1];
        Ok(outer.compose(&self.evacuations[k - j]).compose(outer))
    }
}
