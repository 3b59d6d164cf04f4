//! Linear extensions as words, their canonical enumeration, and the
//! Bender–Knuth moves with the operators built from them.

mod decompose;
mod graph;
mod ops;

pub use decompose::{lift_convex_extension, t_decompose, t_recompose, TDecomposition};
pub use graph::{export_dot, linext_graph, LinExtGraph};
pub use ops::{bk_move, evacuation, promotion, q_jk, OperatorTable};

use std::collections::HashMap;

use num_bigint::BigUint;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::permgroup::Permutation;
use crate::poset::{ElementSet, Poset};

/// Default bound on `|L(P)|` for enumeration and group construction.
pub const DEFAULT_DEGREE_CAP: usize = 5000;

/// Environment variable overriding [`DEFAULT_DEGREE_CAP`].
pub const DEGREE_CAP_ENV: &str = "BK_MAX_DEGREE";

/// The cap from `BK_MAX_DEGREE`, or the default when unset or not a positive integer.
pub fn degree_cap_from_env() -> usize {
    std::env::var(DEGREE_CAP_ENV)
        .ok()
        .and_then(|v| v.trim().parse::<usize>().ok())
        .filter(|&c| c >= 1)
        .unwrap_or(DEFAULT_DEGREE_CAP)
}

/// A word `(p_1, ..., p_n)`: element `p_k` carries label `k`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct LinearExtension {
    word: Vec<usize>,
}

impl LinearExtension {
    pub fn new(p: &Poset, word: Vec<usize>) -> Result<Self> {
        let ext = LinearExtension { word };
        ext.check(p)?;
        Ok(ext)
    }

    pub(crate) fn from_word_unchecked(word: Vec<usize>) -> Self {
        LinearExtension { word }
    }

    fn check(&self, p: &Poset) -> Result<()> {
        if self.word.len() != p.len() {
            return Err(Error::NotExtension(format!(
                "word {:?} has length {}, poset has {}",
                self.word,
                self.word.len(),
                p.len()
            )));
        }
        let mut placed = ElementSet::EMPTY;
        for &x in &self.word {
            if x >= p.len() || placed.contains(x) {
                return Err(Error::NotExtension(format!("word {:?} is not a permutation", self.word)));
            }
            if !p.down_set(x).difference(ElementSet::singleton(x)).is_subset(placed) {
                return Err(Error::NotExtension(format!(
                    "element {x} appears before something below it in {:?}",
                    self.word
                )));
            }
            placed.insert(x);
        }
        Ok(())
    }

    pub fn is_extension_of(&self, p: &Poset) -> bool {
        self.check(p).is_ok()
    }

    pub fn word(&self) -> &[usize] {
        &self.word
    }

    pub fn into_word(self) -> Vec<usize> {
        self.word
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    /// `ℓ(x)` for every element, 1-indexed.
    pub fn labels(&self) -> Vec<usize> {
        let mut labels = vec![0; self.word.len()];
        for (k, &x) in self.word.iter().enumerate() {
            labels[x] = k + 1;
        }
        labels
    }

    pub fn from_labels(labels: &[usize]) -> Self {
        let mut word = vec![0; labels.len()];
        for (x, &l) in labels.iter().enumerate() {
            word[l - 1] = x;
        }
        LinearExtension { word }
    }
}

/// `L(P)` sorted lexicographically by word, with reverse lookup.
#[derive(Clone, Debug)]
pub struct LinExtSpace {
    poset: Poset,
    extensions: Vec<LinearExtension>,
    index: HashMap<Vec<usize>, usize>,
}

/// Number of linear extensions, by dynamic programming over order ideals.
pub fn count_linear_extensions(p: &Poset) -> BigUint {
    let mut memo: HashMap<u64, BigUint> = HashMap::new();
    count_from(p, ElementSet::EMPTY, &mut memo)
}

fn count_from(p: &Poset, ideal: ElementSet, memo: &mut HashMap<u64, BigUint>) -> BigUint {
    if ideal.len() == p.len() {
        return BigUint::one();
    }
    if let Some(v) = memo.get(&ideal.0) {
        return v.clone();
    }
    let mut total = BigUint::default();
    for x in p.elements().difference(ideal).iter() {
        if p.down_set(x).difference(ElementSet::singleton(x)).is_subset(ideal) {
            let mut next = ideal;
            next.insert(x);
            total += count_from(p, next, memo);
        }
    }
    memo.insert(ideal.0, total.clone());
    total
}

impl LinExtSpace {
    /// Enumerates with the cap from [`degree_cap_from_env`].
    pub fn enumerate(p: &Poset) -> Result<Self> {
        Self::enumerate_with_cap(p, degree_cap_from_env())
    }

    pub fn enumerate_with_cap(p: &Poset, cap: usize) -> Result<Self> {
        let mut extensions = Vec::new();
        let mut word = Vec::with_capacity(p.len());
        if !backtrack(p, ElementSet::EMPTY, &mut word, &mut extensions, cap) {
            return Err(Error::DegreeCap { count: count_linear_extensions(p).to_string(), cap });
        }
        let index = extensions.iter().enumerate().map(|(i, e)| (e.word.clone(), i)).collect();
        Ok(LinExtSpace { poset: p.clone(), extensions, index })
    }

    pub fn poset(&self) -> &Poset {
        &self.poset
    }

    pub fn len(&self) -> usize {
        self.extensions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.extensions.is_empty()
    }

    pub fn extensions(&self) -> &[LinearExtension] {
        &self.extensions
    }

    pub fn get(&self, i: usize) -> &LinearExtension {
        &self.extensions[i]
    }

    pub fn index_of(&self, ext: &LinearExtension) -> Option<usize> {
        self.index_of_word(&ext.word)
    }

    pub fn index_of_word(&self, word: &[usize]) -> Option<usize> {
        self.index.get(word).copied()
    }

    fn permutation_of(&self, f: impl Fn(&LinearExtension) -> LinearExtension) -> Permutation {
        let images = self.extensions.iter().map(|e| self.index_of(&f(e)).expect("operator preserves L(P)")).collect();
        Permutation::from_images_unchecked(images)
    }

    /// `t_i` as a permutation of extension indices.
    pub fn move_permutation(&self, i: usize) -> Result<Permutation> {
        check_move_index(&self.poset, i)?;
        Ok(self.permutation_of(|e| ops::bk_move_unchecked(&self.poset, e, i)))
    }

    /// `∂_i` computed by the slide procedure.
    pub fn promotion_permutation(&self, i: usize) -> Result<Permutation> {
        check_promotion_index(&self.poset, i)?;
        Ok(self.permutation_of(|e| ops::promotion_unchecked(&self.poset, e, i)))
    }

    /// Words as a JSON array of arrays.
    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.extensions).expect("words serialize")
    }
}

fn backtrack(p: &Poset, placed: ElementSet, word: &mut Vec<usize>, out: &mut Vec<LinearExtension>, cap: usize) -> bool {
    if word.len() == p.len() {
        if out.len() == cap {
            return false;
        }
        out.push(LinearExtension { word: word.clone() });
        return true;
    }
    for x in p.elements().difference(placed).iter() {
        if p.down_set(x).difference(ElementSet::singleton(x)).is_subset(placed) {
            word.push(x);
            let mut next = placed;
            next.insert(x);
            let ok = backtrack(p, next, word, out, cap);
            word.pop();
            if !ok {
                return false;
            }
        }
    }
    true
}

pub(crate) fn check_move_index(p: &Poset, i: usize) -> Result<()> {
    if i == 0 || i >= p.len() {
        return Err(Error::Index { index: i, max: p.len().saturating_sub(1) });
    }
    Ok(())
}

pub(crate) fn check_promotion_index(p: &Poset, i: usize) -> Result<()> {
    if i >= p.len().max(1) {
        return Err(Error::Index { index: i, max: p.len().saturating_sub(1) });
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poset::{antichain, chain, ferrers, Partition};

    fn bowtie() -> Poset {
        Poset::from_covers(4, &[(0, 2), (0, 3), (1, 2), (1, 3)]).unwrap()
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(LinExtSpace::enumerate(&bowtie()).unwrap().len(), 4);
        assert_eq!(LinExtSpace::enumerate(&chain(5)).unwrap().len(), 1);
        let f = ferrers(&Partition::new(vec![3, 2]).unwrap()).unwrap();
        assert_eq!(LinExtSpace::enumerate(&f).unwrap().len(), 5);
        let empty = LinExtSpace::enumerate(&Poset::empty()).unwrap();
        assert_eq!(empty.len(), 1);
        assert!(empty.get(0).is_empty());
    }

    #[test]
    fn words_are_sorted_and_indexed() {
        let s = LinExtSpace::enumerate(&antichain(3)).unwrap();
        let words: Vec<_> = s.extensions().iter().map(|e| e.word().to_vec()).collect();
        let mut sorted = words.clone();
        sorted.sort();
        assert_eq!(words, sorted);
        for (i, e) in s.extensions().iter().enumerate() {
            assert_eq!(s.index_of(e), Some(i));
        }
    }

    #[test]
    fn cap_reports_exact_count() {
        let err = LinExtSpace::enumerate_with_cap(&antichain(5), 100).unwrap_err();
        assert_eq!(err, Error::DegreeCap { count: "120".into(), cap: 100 });
        assert!(LinExtSpace::enumerate_with_cap(&antichain(5), 120).is_ok());
    }

    #[test]
    fn dp_count() {
        assert_eq!(count_linear_extensions(&antichain(6)), BigUint::from(720u32));
        assert_eq!(count_linear_extensions(&bowtie()), BigUint::from(4u32));
    }

    #[test]
    fn extension_validation() {
        let p = bowtie();
        assert!(LinearExtension::new(&p, vec![1, 0, 3, 2]).is_ok());
        assert!(LinearExtension::new(&p, vec![2, 0, 1, 3]).is_err());
        assert!(LinearExtension::new(&p, vec![0, 0, 1, 3]).is_err());
        let e = LinearExtension::new(&p, vec![1, 0, 3, 2]).unwrap();
        assert_eq!(e.labels(), vec![2, 1, 4, 3]);
        assert_eq!(LinearExtension::from_labels(&e.labels()), e);
    }
}
