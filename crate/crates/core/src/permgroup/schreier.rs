//! Deterministic Schreier–Sims.
//!
//! Level `i` holds the base point `b_i`, the strong generators fixing
//! `b_0..b_{i-1}`, the orbit of `b_i` in insertion order, and for each orbit
//! point `x` the inverse of a coset representative `u_x` with `u_x(b_i) = x`.
//! Orbits, generator lists and representatives only ever grow, so a Schreier
//! generator once sifted to the identity never needs to be revisited; each
//! orbit position records how many generators it has been checked against.

use num_bigint::BigUint;

use super::Permutation;

const ABSENT: u32 = u32::MAX;

fn to_u32(g: &Permutation) -> Vec<u32> {
    g.images().iter().map(|&y| y as u32).collect()
}

#[derive(Clone, Debug)]
struct Level {
    base: usize,
    gens: Vec<Permutation>,
    orbit: Vec<usize>,
    position: Vec<u32>,
    inv_reps: Vec<Vec<u32>>,
    /// `(orbit position, generator)` that first reached each orbit point.
    tree: Vec<(usize, usize)>,
    checked: Vec<usize>,
}

impl Level {
    fn new(base: usize, degree: usize) -> Self {
        let mut position = vec![ABSENT; degree];
        position[base] = 0;
        Level {
            base,
            gens: Vec::new(),
            orbit: vec![base],
            position,
            inv_reps: vec![(0..degree as u32).collect()],
            tree: vec![(usize::MAX, usize::MAX)],
            checked: vec![0],
        }
    }

    fn inv_rep_of(&self, x: usize) -> Option<&[u32]> {
        match self.position[x] {
            ABSENT => None,
            pos => Some(&self.inv_reps[pos as usize]),
        }
    }

    fn extend(&mut self, pos: usize, gen: usize) {
        let x = self.orbit[pos];
        let s = &self.gens[gen];
        let y = s.apply(x);
        if self.position[y] != ABSENT {
            return;
        }
        // u_y = s ∘ u_x, so u_y^{-1} = u_x^{-1} ∘ s^{-1}.
        let inv_x = &self.inv_reps[pos];
        let mut inv_y = vec![0u32; inv_x.len()];
        for (z, &sz) in s.images().iter().enumerate() {
            inv_y[sz] = inv_x[z];
        }
        self.position[y] = self.orbit.len() as u32;
        self.orbit.push(y);
        self.inv_reps.push(inv_y);
        self.tree.push((pos, gen));
        self.checked.push(0);
    }

    fn add_gen(&mut self, g: Permutation) {
        self.gens.push(g);
        let new = self.gens.len() - 1;
        let old_len = self.orbit.len();
        for pos in 0..old_len {
            self.extend(pos, new);
        }
        let mut pos = old_len;
        while pos < self.orbit.len() {
            for gen in 0..self.gens.len() {
                self.extend(pos, gen);
            }
            pos += 1;
        }
    }
}

/// A base and strong generating set.
#[derive(Clone, Debug)]
pub struct StabChain {
    degree: usize,
    levels: Vec<Level>,
}

impl StabChain {
    pub fn new(degree: usize, generators: &[Permutation]) -> Self {
        let mut chain = StabChain { degree, levels: Vec::new() };
        for g in generators.iter().filter(|g| !g.is_identity()) {
            assert_eq!(g.degree(), degree, "generator degree mismatch");
            let depth = chain.levels.iter().take_while(|l| g.apply(l.base) == l.base).count();
            if depth == chain.levels.len() {
                chain.levels.push(Level::new(g.first_moved().expect("non-identity"), degree));
            }
            for level in &mut chain.levels[..=depth] {
                level.add_gen(g.clone());
            }
        }
        chain.complete();
        chain
    }

    fn complete(&mut self) {
        let mut i = self.levels.len();
        'outer: while i > 0 {
            let lvl = i - 1;
            let mut pos = 0;
            while pos < self.levels[lvl].orbit.len() {
                while self.levels[lvl].checked[pos] < self.levels[lvl].gens.len() {
                    let gen = self.levels[lvl].checked[pos];
                    self.levels[lvl].checked[pos] += 1;
                    let level = &self.levels[lvl];
                    let target = level.position[level.gens[gen].apply(level.orbit[pos])] as usize;
                    if level.tree[target] == (pos, gen) {
                        // Tree edges give the identity.
                        continue;
                    }
                    let schreier = self.schreier_generator(lvl, pos, gen);
                    let (h, j) = self.strip_images(schreier, lvl + 1);
                    if h.iter().enumerate().all(|(x, &y)| x == y as usize) {
                        continue;
                    }
                    let h = Permutation::from_images_unchecked(h.into_iter().map(|y| y as usize).collect());
                    if j == self.levels.len() {
                        self.levels.push(Level::new(h.first_moved().expect("non-identity"), self.degree));
                    }
                    for level in &mut self.levels[lvl + 1..=j] {
                        level.add_gen(h.clone());
                    }
                    i = j + 1;
                    continue 'outer;
                }
                pos += 1;
            }
            i -= 1;
        }
    }

    /// `u_{s(x)}^{-1} ∘ s ∘ u_x` for `x = orbit[pos]`, `s = gens[gen]`.
    fn schreier_generator(&self, lvl: usize, pos: usize, gen: usize) -> Vec<u32> {
        let level = &self.levels[lvl];
        let s = &level.gens[gen];
        let inv_x = &level.inv_reps[pos];
        let inv = level.inv_rep_of(s.apply(level.orbit[pos])).expect("orbit is closed");
        let mut out = vec![0u32; self.degree];
        for (z, &ux) in inv_x.iter().enumerate() {
            // u_x(ux) = z
            out[ux as usize] = inv[s.apply(z)];
        }
        out
    }

    /// Sifts `g` through levels `start..`; returns the residue and the level where sifting stopped
    /// (`levels.len()` when every level was passed).
    fn strip_images(&self, mut g: Vec<u32>, start: usize) -> (Vec<u32>, usize) {
        let mut scratch = vec![0u32; g.len()];
        for (j, level) in self.levels.iter().enumerate().skip(start) {
            let x = g[level.base] as usize;
            let Some(inv) = level.inv_rep_of(x) else {
                return (g, j);
            };
            for (dst, &y) in scratch.iter_mut().zip(&g) {
                *dst = inv[y as usize];
            }
            std::mem::swap(&mut g, &mut scratch);
        }
        (g, self.levels.len())
    }

    fn strip_from(&self, g: Vec<u32>, start: usize) -> (Permutation, usize) {
        let (h, j) = self.strip_images(g, start);
        (Permutation::from_images_unchecked(h.into_iter().map(|y| y as usize).collect()), j)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn base(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.base).collect()
    }

    pub fn base_len(&self) -> usize {
        self.levels.len()
    }

    pub fn orbit(&self, level: usize) -> &[usize] {
        &self.levels[level].orbit
    }

    /// Strong generators of the `level`-th stabilizer (all generators for level 0).
    pub fn level_generators(&self, level: usize) -> &[Permutation] {
        self.levels.get(level).map_or(&[], |l| &l.gens)
    }

    pub fn strong_generators(&self) -> &[Permutation] {
        self.level_generators(0)
    }

    /// Product of the basic orbit lengths.
    pub fn order(&self) -> BigUint {
        self.levels.iter().fold(BigUint::from(1u32), |acc, l| acc * BigUint::from(l.orbit.len()))
    }

    pub fn strip(&self, g: &Permutation) -> (Permutation, usize) {
        self.strip_from(to_u32(g), 0)
    }

    pub fn contains(&self, g: &Permutation) -> bool {
        g.degree() == self.degree && {
            let (h, _) = self.strip_images(to_u32(g), 0);
            h.iter().enumerate().all(|(x, &y)| x == y as usize)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perm(v: &[usize]) -> Permutation {
        Permutation::from_images(v.to_vec()).unwrap()
    }

    fn cycle(d: usize) -> Permutation {
        perm(&(0..d).map(|x| (x + 1) % d).collect::<Vec<_>>())
    }

    fn swap01(d: usize) -> Permutation {
        let mut v: Vec<usize> = (0..d).collect();
        v.swap(0, 1);
        perm(&v)
    }

    #[test]
    fn symmetric_groups() {
        for d in 2..=9 {
            let chain = StabChain::new(d, &[cycle(d), swap01(d)]);
            assert_eq!(chain.order(), super::super::factorial(d), "S_{d}");
        }
    }

    #[test]
    fn cyclic_and_trivial() {
        assert_eq!(StabChain::new(7, &[cycle(7)]).order(), BigUint::from(7u32));
        assert_eq!(StabChain::new(4, &[]).order(), BigUint::from(1u32));
        assert_eq!(StabChain::new(4, &[Permutation::identity(4)]).base_len(), 0);
    }

    #[test]
    fn alternating_group() {
        // 3-cycles (0 1 2), (0 1 3), ..., generate A_6.
        let gens: Vec<_> = (2..6)
            .map(|k| {
                let mut v: Vec<usize> = (0..6).collect();
                v[0] = 1;
                v[1] = k;
                v[k] = 0;
                perm(&v)
            })
            .collect();
        let chain = StabChain::new(6, &gens);
        assert_eq!(chain.order(), BigUint::from(360u32));
        assert!(!chain.contains(&swap01(6)));
        assert!(chain.contains(&gens[0].compose(&gens[3])));
    }

    #[test]
    fn dihedral_membership() {
        let r = cycle(5);
        let s = perm(&[0, 4, 3, 2, 1]);
        let chain = StabChain::new(5, &[r.clone(), s.clone()]);
        assert_eq!(chain.order(), BigUint::from(10u32));
        assert!(chain.contains(&r.compose(&s).compose(&r)));
        assert!(!chain.contains(&swap01(5)));
    }
}
