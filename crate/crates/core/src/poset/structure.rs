//! Structural analysis: components, ordinal decomposition, ideals, height and width.

use serde::Serialize;

use super::{ElementSet, Poset};
use crate::error::{Error, Result};

/// Summary of the shape of a poset.
#[derive(Clone, Debug, Serialize)]
pub struct Structure {
    pub n: usize,
    pub connected: bool,
    pub height: usize,
    pub width: usize,
    pub is_disjoint_union_of_chains: bool,
    pub is_series_parallel: bool,
    pub components: Vec<Poset>,
}

/// Maximal splitting of a poset into indecomposable ordinal summands.
#[derive(Clone, Debug)]
pub struct PosetDecomposition {
    /// Original element ids of each summand, bottom summand first; each list is sorted.
    pub elements: Vec<Vec<usize>>,
    /// Summands as induced subposets (ids renumbered in increasing order).
    pub summands: Vec<Poset>,
}

impl PosetDecomposition {
    /// Ordinal sum of the summands, relabeled back onto the original ids.
    pub fn reassemble(&self) -> Poset {
        let joined = self.summands.iter().fold(Poset::empty(), |acc, s| acc.ordinal_sum(s));
        let perm: Vec<usize> = self.elements.iter().flatten().copied().collect();
        joined.relabel(&perm)
    }
}

impl Poset {
    fn check_subset(&self, subset: ElementSet) -> Result<()> {
        if let Some(id) = subset.difference(self.elements()).iter().next() {
            return Err(Error::Range { id, n: self.len() });
        }
        Ok(())
    }

    /// Elements of `subset` renumbered `0..|subset|` in increasing id order.
    pub fn induced_subposet(&self, subset: ElementSet) -> Result<Poset> {
        self.check_subset(subset)?;
        let ids = subset.to_vec();
        let mut relations = Vec::new();
        for (a, &x) in ids.iter().enumerate() {
            for (b, &y) in ids.iter().enumerate() {
                if self.lt(x, y) {
                    relations.push((a, b));
                }
            }
        }
        Poset::from_covers(ids.len(), &relations)
    }

    /// `x, z ∈ S` and `x <= y <= z` force `y ∈ S`.
    pub fn is_convex(&self, subset: ElementSet) -> Result<bool> {
        self.check_subset(subset)?;
        let mut hull = ElementSet::EMPTY;
        for x in subset.iter() {
            for z in subset.iter() {
                hull = hull.union(self.up_set(x).intersection(self.down_set(z)));
            }
        }
        Ok(hull.is_subset(subset))
    }

    pub fn is_order_ideal(&self, subset: ElementSet) -> bool {
        subset.iter().all(|x| self.down_set(x).is_subset(subset))
    }

    /// Every down-closed subset exactly once.
    pub fn order_ideals(&self) -> OrderIdeals<'_> {
        OrderIdeals::new(self)
    }

    /// Connected components of the comparability graph, as element sets ordered by least element.
    pub fn component_sets(&self) -> Vec<ElementSet> {
        let mut seen = ElementSet::EMPTY;
        let mut out = Vec::new();
        for start in 0..self.len() {
            if seen.contains(start) {
                continue;
            }
            let mut comp = ElementSet::singleton(start);
            loop {
                let grown = comp.iter().fold(comp, |acc, x| acc.union(self.up_set(x)).union(self.down_set(x)));
                if grown == comp {
                    break;
                }
                comp = grown;
            }
            seen = seen.union(comp);
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.component_sets().len() <= 1
    }

    /// Cardinality of the longest chain.
    pub fn height(&self) -> usize {
        let order = self.topological_order();
        let mut depth = vec![0usize; self.len()];
        for &x in &order {
            depth[x] = 1 + self.lower_covers(x).map(|y| depth[y]).max().unwrap_or(0);
        }
        depth.into_iter().max().unwrap_or(0)
    }

    /// Cardinality of the largest antichain, by exhaustive branch and bound.
    pub fn width(&self) -> usize {
        fn grow(p: &Poset, candidates: ElementSet, size: usize, best: &mut usize) {
            if size + candidates.len() <= *best {
                return;
            }
            let Some(x) = candidates.iter().next() else {
                *best = (*best).max(size);
                return;
            };
            let rest = candidates.difference(ElementSet::singleton(x));
            let compatible = rest.difference(p.up_set(x)).difference(p.down_set(x));
            grow(p, compatible, size + 1, best);
            grow(p, rest, size, best);
        }
        let mut best = 0;
        grow(self, self.elements(), 0, &mut best);
        best
    }

    pub fn is_chain(&self) -> bool {
        (0..self.len()).all(|x| (0..self.len()).all(|y| self.comparable(x, y)))
    }

    pub fn is_disjoint_union_of_chains(&self) -> bool {
        self.component_sets().into_iter().all(|c| c.iter().all(|x| c.iter().all(|y| self.comparable(x, y))))
    }

    /// Built from singletons by ordinal sums and disjoint unions.
    pub fn is_series_parallel(&self) -> bool {
        if self.len() <= 1 {
            return true;
        }
        let comps = self.component_sets();
        if comps.len() > 1 {
            return comps
                .into_iter()
                .all(|c| self.induced_subposet(c).expect("subset of own elements").is_series_parallel());
        }
        let dec = self.ordinal_decomposition();
        if dec.summands.len() > 1 {
            return dec.summands.iter().all(Poset::is_series_parallel);
        }
        false
    }

    pub fn structure(&self) -> Structure {
        let components = self
            .component_sets()
            .into_iter()
            .map(|c| self.induced_subposet(c).expect("subset of own elements"))
            .collect::<Vec<_>>();
        Structure {
            n: self.len(),
            connected: components.len() <= 1,
            height: self.height(),
            width: self.width(),
            is_disjoint_union_of_chains: self.is_disjoint_union_of_chains(),
            is_series_parallel: self.is_series_parallel(),
            components,
        }
    }

    /// A linear extension: repeatedly take the least-id minimal element.
    pub fn topological_order(&self) -> Vec<usize> {
        let mut placed = ElementSet::EMPTY;
        let mut order = Vec::with_capacity(self.len());
        while order.len() < self.len() {
            let next = (0..self.len())
                .find(|&x| {
                    !placed.contains(x) && self.down_set(x).difference(ElementSet::singleton(x)).is_subset(placed)
                })
                .expect("acyclic order always has a minimal element");
            placed.insert(next);
            order.push(next);
        }
        order
    }

    /// Sizes `i ∈ [1, n-1]` of order ideals `I` with every element of `I` below every element outside it.
    pub fn split_points(&self) -> Vec<usize> {
        let order = self.topological_order();
        let mut points = Vec::new();
        let mut lower = ElementSet::EMPTY;
        for (i, &x) in order.iter().enumerate().take(self.len().saturating_sub(1)) {
            lower.insert(x);
            let upper = self.elements().difference(lower);
            // Any ideal of size i+1 splitting the poset must be exactly this prefix.
            if lower.iter().all(|a| upper.is_subset(self.up_set(a))) {
                points.push(i + 1);
            }
        }
        points
    }

    pub fn is_indecomposable(&self) -> bool {
        self.split_points().is_empty()
    }

    pub fn ordinal_decomposition(&self) -> PosetDecomposition {
        let order = self.topological_order();
        let mut cuts = vec![0];
        cuts.extend(self.split_points());
        cuts.push(self.len());
        let mut elements = Vec::new();
        let mut summands = Vec::new();
        for w in cuts.windows(2) {
            if w[0] == w[1] {
                continue;
            }
            let set = ElementSet::from_elements(order[w[0]..w[1]].iter().copied());
            elements.push(set.to_vec());
            summands.push(self.induced_subposet(set).expect("subset of own elements"));
        }
        PosetDecomposition { elements, summands }
    }
}

/// Depth-first enumeration of order ideals along a fixed linear extension:
/// an element may join once everything below it has.
pub struct OrderIdeals<'a> {
    poset: &'a Poset,
    order: Vec<usize>,
    stack: Vec<(usize, ElementSet)>,
}

impl<'a> OrderIdeals<'a> {
    fn new(poset: &'a Poset) -> Self {
        OrderIdeals { poset, order: poset.topological_order(), stack: vec![(0, ElementSet::EMPTY)] }
    }
}

impl Iterator for OrderIdeals<'_> {
    type Item = ElementSet;

    fn next(&mut self) -> Option<ElementSet> {
        while let Some((depth, chosen)) = self.stack.pop() {
            if depth == self.order.len() {
                return Some(chosen);
            }
            let x = self.order[depth];
            self.stack.push((depth + 1, chosen));
            let below = self.poset.down_set(x).difference(ElementSet::singleton(x));
            if below.is_subset(chosen) {
                let mut with = chosen;
                with.insert(x);
                self.stack.push((depth + 1, with));
            }
        }
        None
    }
}
