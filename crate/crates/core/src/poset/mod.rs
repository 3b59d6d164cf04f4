//! Finite posets on `0..n`, stored as an irredundant cover set together with
//! the reflexive-transitive closure as a pair of bitset tables.

mod canonical;
mod families;
mod partition;
mod spec;
mod structure;

pub use canonical::{canonical_form, canonical_labeling, canonical_poset, is_isomorphic, CANONICAL_CAP};
pub use families::{
    antichain, chain, ferrers, ferrers_cells, jdt9, m_poset, minuscule_ordinal, n_poset, shifted_ferrers,
    shifted_ferrers_cells, twin_fail5, zigzag,
};
pub use partition::{partitions_of, strict_partitions_of, Partition};
pub use spec::parse_family_spec;
pub use structure::{OrderIdeals, PosetDecomposition, Structure};

use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Hard upper bound on the number of elements; relations are stored in `u64` rows.
pub const MAX_ELEMENTS: usize = 64;

/// A set of poset elements, one bit per element id.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct ElementSet(pub u64);

impl ElementSet {
    pub const EMPTY: ElementSet = ElementSet(0);

    pub fn full(n: usize) -> Self {
        if n >= 64 {
            ElementSet(u64::MAX)
        } else {
            ElementSet((1u64 << n) - 1)
        }
    }

    pub fn singleton(x: usize) -> Self {
        ElementSet(1u64 << x)
    }

    pub fn from_elements<I: IntoIterator<Item = usize>>(it: I) -> Self {
        ElementSet(it.into_iter().fold(0u64, |acc, x| acc | (1u64 << x)))
    }

    pub fn contains(self, x: usize) -> bool {
        x < 64 && self.0 >> x & 1 == 1
    }

    pub fn insert(&mut self, x: usize) {
        self.0 |= 1u64 << x;
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_subset(self, other: ElementSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn union(self, other: ElementSet) -> Self {
        ElementSet(self.0 | other.0)
    }

    pub fn intersection(self, other: ElementSet) -> Self {
        ElementSet(self.0 & other.0)
    }

    pub fn difference(self, other: ElementSet) -> Self {
        ElementSet(self.0 & !other.0)
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let x = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(x)
            }
        })
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

/// A finite poset on the element ids `0..n`.
///
/// Invariants: `covers` is the (sorted) transitive reduction of the order and
/// `up`/`down` hold its reflexive-transitive closure. Values are immutable
/// once built.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poset {
    n: usize,
    covers: Vec<(usize, usize)>,
    up: Vec<u64>,
    down: Vec<u64>,
}

impl fmt::Debug for Poset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poset(n={}, covers={:?})", self.n, self.covers)
    }
}

impl Poset {
    /// Builds a poset from (possibly redundant) relations `a < b`.
    pub fn from_covers(n: usize, relations: &[(usize, usize)]) -> Result<Self> {
        if n > MAX_ELEMENTS {
            return Err(Error::Cap { what: "poset size", cap: MAX_ELEMENTS, got: n });
        }
        let mut succ = vec![0u64; n];
        for &(a, b) in relations {
            for id in [a, b] {
                if id >= n {
                    return Err(Error::Range { id, n });
                }
            }
            if a == b {
                return Err(Error::Cycle(a));
            }
            succ[a] |= 1u64 << b;
        }

        // Kahn's algorithm; leftover elements sit on a cycle.
        let mut indegree = vec![0usize; n];
        for s in &succ {
            for b in ElementSet(*s).iter() {
                indegree[b] += 1;
            }
        }
        let mut order = Vec::with_capacity(n);
        let mut ready: Vec<usize> = (0..n).filter(|&x| indegree[x] == 0).collect();
        while let Some(x) = ready.pop() {
            order.push(x);
            for b in ElementSet(succ[x]).iter() {
                indegree[b] -= 1;
                if indegree[b] == 0 {
                    ready.push(b);
                }
            }
        }
        if order.len() < n {
            let stuck = (0..n).find(|&x| indegree[x] > 0).unwrap_or(0);
            return Err(Error::Cycle(stuck));
        }

        let mut up = vec![0u64; n];
        for &x in order.iter().rev() {
            let mut row = 1u64 << x;
            for b in ElementSet(succ[x]).iter() {
                row |= up[b];
            }
            up[x] = row;
        }
        Ok(Self::from_closure(n, up))
    }

    /// Builds a poset from the closure rows; `up[x]` must be reflexive,
    /// transitive and antisymmetric.
    fn from_closure(n: usize, up: Vec<u64>) -> Self {
        let mut down = vec![0u64; n];
        for (x, row) in up.iter().enumerate() {
            for y in ElementSet(*row).iter() {
                down[y] |= 1u64 << x;
            }
        }
        let mut covers = Vec::new();
        for (x, &ux) in up.iter().enumerate() {
            for y in ElementSet(ux & !(1u64 << x)).iter() {
                let between = ux & down[y];
                if between.count_ones() == 2 {
                    covers.push((x, y));
                }
            }
        }
        covers.sort_unstable();
        Poset { n, covers, up, down }
    }

    pub fn empty() -> Self {
        Poset { n: 0, covers: Vec::new(), up: Vec::new(), down: Vec::new() }
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    /// Irredundant cover pairs `(a, b)` meaning `b` covers `a`, sorted.
    pub fn covers(&self) -> &[(usize, usize)] {
        &self.covers
    }

    pub fn elements(&self) -> ElementSet {
        ElementSet::full(self.n)
    }

    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.up[x] >> y & 1 == 1
    }

    pub fn lt(&self, x: usize, y: usize) -> bool {
        x != y && self.leq(x, y)
    }

    pub fn comparable(&self, x: usize, y: usize) -> bool {
        self.leq(x, y) || self.leq(y, x)
    }

    /// `{y : x <= y}`.
    pub fn up_set(&self, x: usize) -> ElementSet {
        ElementSet(self.up[x])
    }

    /// `{y : y <= x}`.
    pub fn down_set(&self, x: usize) -> ElementSet {
        ElementSet(self.down[x])
    }

    pub fn upper_covers(&self, x: usize) -> impl Iterator<Item = usize> + '_ {
        self.covers.iter().filter(move |c| c.0 == x).map(|c| c.1)
    }

    pub fn lower_covers(&self, x: usize) -> impl Iterator<Item = usize> + '_ {
        self.covers.iter().filter(move |c| c.1 == x).map(|c| c.0)
    }

    pub fn minimal_elements(&self) -> ElementSet {
        ElementSet::from_elements((0..self.n).filter(|&x| self.down[x].count_ones() == 1))
    }

    pub fn maximal_elements(&self) -> ElementSet {
        ElementSet::from_elements((0..self.n).filter(|&x| self.up[x].count_ones() == 1))
    }

    /// All strict relations `x < y`.
    pub fn strict_relations(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for x in 0..self.n {
            for y in ElementSet(self.up[x] & !(1u64 << x)).iter() {
                out.push((x, y));
            }
        }
        out
    }

    /// Reversed order on the same ids.
    pub fn dual(&self) -> Poset {
        Poset::from_closure(self.n, self.down.clone())
    }

    /// Every element of `self` below every element of `other`; `other`'s ids shift by `self.len()`.
    pub fn ordinal_sum(&self, other: &Poset) -> Poset {
        self.join(other, true)
    }

    /// Side-by-side union; `other`'s ids shift by `self.len()`.
    pub fn disjoint_union(&self, other: &Poset) -> Poset {
        self.join(other, false)
    }

    fn join(&self, other: &Poset, stacked: bool) -> Poset {
        let m = self.n;
        let n = m + other.n;
        assert!(n <= MAX_ELEMENTS, "poset size {n} exceeds {MAX_ELEMENTS}");
        let top = if stacked && m < 64 { (ElementSet::full(n).0 >> m) << m } else { 0 };
        let mut up: Vec<u64> = self.up.iter().map(|r| r | top).collect();
        up.extend(other.up.iter().map(|r| r << m));
        Poset::from_closure(n, up)
    }

    /// Relabels element `x` as `perm[x]`.
    pub fn relabel(&self, perm: &[usize]) -> Poset {
        assert_eq!(perm.len(), self.n);
        let mut up = vec![0u64; self.n];
        for x in 0..self.n {
            up[perm[x]] = ElementSet(self.up[x]).iter().fold(0, |acc, y| acc | 1u64 << perm[y]);
        }
        Poset::from_closure(self.n, up)
    }

    /// Checks the closure invariants against an independent recomputation.
    pub fn check_invariants(&self) -> bool {
        let rebuilt = match Poset::from_covers(self.n, &self.covers) {
            Ok(p) => p,
            Err(_) => return false,
        };
        let antisymmetric = (0..self.n).all(|x| (0..self.n).all(|y| x == y || !(self.leq(x, y) && self.leq(y, x))));
        rebuilt == *self && antisymmetric
    }
}

#[derive(Serialize, Deserialize)]
struct PosetJson {
    n: usize,
    covers: Vec<[usize; 2]>,
}

impl Serialize for Poset {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        PosetJson { n: self.n, covers: self.covers.iter().map(|&(a, b)| [a, b]).collect() }.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Poset {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let raw = PosetJson::deserialize(deserializer)?;
        let pairs: Vec<(usize, usize)> = raw.covers.iter().map(|c| (c[0], c[1])).collect();
        Poset::from_covers(raw.n, &pairs).map_err(serde::de::Error::custom)
    }
}

impl Poset {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("poset serialization is infallible")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }
}
