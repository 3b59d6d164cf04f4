use std::sync::OnceLock;

use num_bigint::BigUint;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::blocks::{minimal_block, orbit};
use super::{factorial, Permutation, StabChain};
use crate::error::{Error, Result};
use crate::linext::LinExtSpace;
use crate::poset::Poset;

/// Groups up to this degree always get an explicit stabilizer chain. Above it a
/// primitive group containing a suitable prime cycle is recognized as `A_d` or `S_d`
/// by Jordan's theorem instead.
pub const FULL_CHAIN_DEGREE: usize = 64;

const RANDOM_SAMPLES: usize = 400;
const RANDOM_SEED: u64 = 0x5eed_b0b5;

#[derive(Clone, Debug)]
pub struct NamedGenerator {
    pub name: String,
    pub perm: Permutation,
    pub trivial: bool,
}

#[derive(Clone, Debug)]
pub enum GroupKind {
    Chain(StabChain),
    /// The alternating or symmetric group on all points.
    Giant {
        alternating: bool,
    },
}

#[derive(Clone, Debug)]
pub struct PermutationGroup {
    degree: usize,
    generators: Vec<NamedGenerator>,
    kind: GroupKind,
    transitive: OnceLock<bool>,
    primitive: OnceLock<bool>,
}

/// The JSON group summary.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GroupReport {
    pub degree: usize,
    pub order: String,
    pub transitive: bool,
    pub primitive: bool,
    pub two_transitive: bool,
    pub symmetric: bool,
    pub stab_order: String,
}

impl PermutationGroup {
    pub fn new(degree: usize, generators: Vec<(String, Permutation)>) -> Result<Self> {
        for (name, g) in &generators {
            if g.degree() != degree {
                return Err(Error::Param(format!("generator {name} has degree {}, expected {degree}", g.degree())));
            }
        }
        let generators: Vec<NamedGenerator> = generators
            .into_iter()
            .map(|(name, perm)| NamedGenerator { trivial: perm.is_identity(), name, perm })
            .collect();
        let mut group = PermutationGroup {
            degree,
            generators,
            kind: GroupKind::Chain(StabChain::new(0, &[])),
            transitive: OnceLock::new(),
            primitive: OnceLock::new(),
        };
        group.kind = group.build_kind();
        Ok(group)
    }

    fn build_kind(&self) -> GroupKind {
        let gens = self.nontrivial_perms();
        if self.degree > FULL_CHAIN_DEGREE
            && self.is_transitive()
            && self.is_primitive()
            && has_jordan_element(self.degree, &gens)
        {
            return GroupKind::Giant { alternating: !gens.iter().any(Permutation::is_odd) };
        }
        GroupKind::Chain(StabChain::new(self.degree, &gens))
    }

    fn nontrivial_perms(&self) -> Vec<Permutation> {
        self.generators.iter().filter(|g| !g.trivial).map(|g| g.perm.clone()).collect()
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[NamedGenerator] {
        &self.generators
    }

    pub fn generator(&self, name: &str) -> Option<&NamedGenerator> {
        let key = normalize(name);
        self.generators.iter().find(|g| normalize(&g.name) == key)
    }

    pub fn kind(&self) -> &GroupKind {
        &self.kind
    }

    pub fn stab_chain(&self) -> Option<&StabChain> {
        match &self.kind {
            GroupKind::Chain(c) => Some(c),
            GroupKind::Giant { .. } => None,
        }
    }

    pub fn order(&self) -> BigUint {
        match &self.kind {
            GroupKind::Chain(c) => c.order(),
            GroupKind::Giant { alternating: false } => factorial(self.degree),
            GroupKind::Giant { alternating: true } => factorial(self.degree) / 2u32,
        }
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        if p.degree() != self.degree {
            return false;
        }
        match &self.kind {
            GroupKind::Chain(c) => c.contains(p),
            GroupKind::Giant { alternating } => !alternating || !p.is_odd(),
        }
    }

    /// The orbit of point 0 is everything.
    pub fn is_transitive(&self) -> bool {
        *self
            .transitive
            .get_or_init(|| self.degree == 0 || orbit(self.degree, &self.nontrivial_perms(), 0).len() == self.degree)
    }

    /// Transitive with no block system other than singletons and the whole set.
    pub fn is_primitive(&self) -> bool {
        *self.primitive.get_or_init(|| {
            if !self.is_transitive() {
                return false;
            }
            if self.degree <= 2 {
                return true;
            }
            let gens = self.nontrivial_perms();
            (1..self.degree).all(|beta| minimal_block(self.degree, &gens, 0, beta).len() == self.degree)
        })
    }

    /// Transitive, with a point stabilizer transitive on the remaining points.
    pub fn is_2_transitive(&self) -> bool {
        if !self.is_transitive() {
            return false;
        }
        if self.degree <= 2 {
            return true;
        }
        match &self.kind {
            GroupKind::Giant { .. } => true,
            GroupKind::Chain(c) => {
                let b0 = c.base().first().copied().unwrap_or(0);
                let other = if b0 == 0 { 1 } else { 0 };
                orbit(self.degree, c.level_generators(1), other).len() == self.degree - 1
            }
        }
    }

    pub fn is_symmetric(&self) -> bool {
        match &self.kind {
            GroupKind::Giant { alternating } => !alternating,
            GroupKind::Chain(c) => c.order() == factorial(self.degree),
        }
    }

    /// `|G| / d`, the order of a point stabilizer when `G` is transitive.
    pub fn stabilizer_order(&self) -> Result<BigUint> {
        let order = self.order();
        let d = BigUint::from(self.degree.max(1));
        if !(&order % &d).is_zero() {
            return Err(Error::Division { order: order.to_string(), degree: self.degree });
        }
        Ok(order / d)
    }

    /// The group generated by every generator except `name`.
    pub fn subgroup_without(&self, name: &str) -> Result<PermutationGroup> {
        let key = normalize(name);
        if !self.generators.iter().any(|g| normalize(&g.name) == key) {
            return Err(Error::UnknownGenerator(name.to_string()));
        }
        let rest = self
            .generators
            .iter()
            .filter(|g| normalize(&g.name) != key)
            .map(|g| (g.name.clone(), g.perm.clone()))
            .collect();
        PermutationGroup::new(self.degree, rest)
    }

    pub fn report(&self) -> Result<GroupReport> {
        Ok(GroupReport {
            degree: self.degree,
            order: self.order().to_string(),
            transitive: self.is_transitive(),
            primitive: self.is_primitive(),
            two_transitive: self.is_2_transitive(),
            symmetric: self.is_symmetric(),
            stab_order: self.stabilizer_order()?.to_string(),
        })
    }
}

fn normalize(name: &str) -> String {
    name.chars().filter(|&c| c != '_').collect()
}

fn is_prime(p: usize) -> bool {
    p >= 2 && (2..).take_while(|k| k * k <= p).all(|k| !p.is_multiple_of(k))
}

/// Some power of `g` is a `p`-cycle for a prime `p <= d - 3`: exactly one cycle length
/// is divisible by `p`, and that length is `p` itself.
fn powers_to_prime_cycle(g: &Permutation) -> bool {
    let d = g.degree();
    let lengths = g.cycle_lengths();
    lengths.iter().any(|&p| p + 3 <= d && is_prime(p) && lengths.iter().filter(|&&l| l % p == 0).count() == 1)
}

/// Deterministic search for an element certifying, together with primitivity, that the group is giant.
fn has_jordan_element(degree: usize, gens: &[Permutation]) -> bool {
    if gens.is_empty() {
        return false;
    }
    if gens.iter().any(powers_to_prime_cycle) {
        return true;
    }
    for (i, a) in gens.iter().enumerate() {
        for b in &gens[i + 1..] {
            if powers_to_prime_cycle(&a.compose(b)) {
                return true;
            }
        }
    }
    for start in 0..gens.len() {
        let mut acc = gens[start].clone();
        for g in &gens[start + 1..] {
            acc = acc.compose(g);
            if powers_to_prime_cycle(&acc) {
                return true;
            }
        }
    }
    // Product replacement with a fixed seed.
    let mut rng = ChaCha8Rng::seed_from_u64(RANDOM_SEED);
    let mut state: Vec<Permutation> = gens.iter().cycle().take(gens.len().max(10)).cloned().collect();
    let mut acc = Permutation::identity(degree);
    for step in 0..RANDOM_SAMPLES + 50 {
        let r = rng.gen_range(0..state.len());
        let mut s = rng.gen_range(0..state.len() - 1);
        if s >= r {
            s += 1;
        }
        let factor = if rng.gen_bool(0.5) { state[s].clone() } else { state[s].inverse() };
        state[r] = if rng.gen_bool(0.5) { state[r].compose(&factor) } else { factor.compose(&state[r]) };
        acc = acc.compose(&state[r]);
        if step >= 50 && powers_to_prime_cycle(&acc) {
            return true;
        }
    }
    false
}

/// The group generated by the moves `t_1, ..., t_{n-1}` acting on indices of `L(P)`.
pub fn bk_group(p: &Poset) -> Result<PermutationGroup> {
    bk_group_of_space(&LinExtSpace::enumerate(p)?)
}

pub fn bk_group_of_space(space: &LinExtSpace) -> Result<PermutationGroup> {
    let n = space.poset().len();
    let gens = (1..n).map(|i| (format!("t{i}"), space.move_permutation(i).expect("index in range"))).collect();
    PermutationGroup::new(space.len(), gens)
}
