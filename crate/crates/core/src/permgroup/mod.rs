//! Permutations of `0..d` and exact permutation-group computations.

mod blocks;
mod group;
mod schreier;

pub use group::{
    bk_group, bk_group_of_space, GroupKind, GroupReport, NamedGenerator, PermutationGroup, FULL_CHAIN_DEGREE,
};
pub use schreier::StabChain;

use std::fmt;

use num_bigint::BigUint;
use num_integer::Integer;

use crate::error::{Error, Result};

/// A bijection of `0..degree`; `images[x]` is the image of `x`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation{:?}", self.images)
    }
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation { images: (0..degree).collect() }
    }

    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let mut seen = vec![false; images.len()];
        for &y in &images {
            if y >= images.len() || std::mem::replace(&mut seen[y], true) {
                return Err(Error::Param(format!("{images:?} is not a bijection")));
            }
        }
        Ok(Permutation { images })
    }

    /// Caller guarantees `images` is a bijection.
    pub(crate) fn from_images_unchecked(images: Vec<usize>) -> Self {
        debug_assert!(Permutation::from_images(images.clone()).is_ok());
        Permutation { images }
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn apply(&self, x: usize) -> usize {
        self.images[x]
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.degree(), other.degree(), "degree mismatch");
        Permutation { images: other.images.iter().map(|&y| self.images[y]).collect() }
    }

    /// `other ∘ self`: apply `self` first.
    pub fn then(&self, other: &Permutation) -> Permutation {
        other.compose(self)
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.degree()];
        for (x, &y) in self.images.iter().enumerate() {
            inv[y] = x;
        }
        Permutation { images: inv }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(x, &y)| x == y)
    }

    pub fn first_moved(&self) -> Option<usize> {
        self.images.iter().enumerate().position(|(x, &y)| x != y)
    }

    /// All cycle lengths, including fixed points as cycles of length 1, in order of least element.
    pub fn cycle_lengths(&self) -> Vec<usize> {
        let mut seen = vec![false; self.degree()];
        let mut out = Vec::new();
        for start in 0..self.degree() {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                x = self.images[x];
                len += 1;
            }
            out.push(len);
        }
        out
    }

    pub fn is_odd(&self) -> bool {
        self.cycle_lengths().iter().filter(|&&l| l % 2 == 0).count() % 2 == 1
    }

    pub fn order(&self) -> BigUint {
        self.cycle_lengths().into_iter().fold(BigUint::from(1u32), |acc, l| acc.lcm(&BigUint::from(l)))
    }

    pub fn pow(&self, mut e: u64) -> Permutation {
        let mut base = self.clone();
        let mut acc = Permutation::identity(self.degree());
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.compose(&base);
            }
            base = base.compose(&base);
            e >>= 1;
        }
        acc
    }
}

pub(crate) fn factorial(d: usize) -> BigUint {
    (2..=d).fold(BigUint::from(1u32), |acc, k| acc * BigUint::from(k))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perm(v: &[usize]) -> Permutation {
        Permutation::from_images(v.to_vec()).unwrap()
    }

    #[test]
    fn compose_applies_right_factor_first() {
        let a = perm(&[1, 0, 2]);
        let b = perm(&[0, 2, 1]);
        // b sends 1 to 2, a fixes 2.
        assert_eq!(a.compose(&b).apply(1), 2);
        assert_eq!(a.then(&b), b.compose(&a));
        assert!(a.compose(&a.inverse()).is_identity());
    }

    #[test]
    fn rejects_non_bijection() {
        assert!(Permutation::from_images(vec![0, 0]).is_err());
        assert!(Permutation::from_images(vec![2, 0]).is_err());
        assert!(Permutation::from_images(vec![]).unwrap().is_identity());
    }

    #[test]
    fn cycle_data() {
        let p = perm(&[1, 2, 0, 4, 3, 5]);
        assert_eq!(p.cycle_lengths(), vec![3, 2, 1]);
        assert!(p.is_odd());
        assert_eq!(p.order(), BigUint::from(6u32));
        assert!(p.pow(6).is_identity());
        assert_eq!(p.pow(2), p.compose(&p));
        assert_eq!(p.first_moved(), Some(0));
    }
}
