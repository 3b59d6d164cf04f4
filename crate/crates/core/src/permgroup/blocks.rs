//! Orbits and minimal blocks of imprimitivity.

use super::Permutation;

struct UnionFind {
    parent: Vec<usize>,
    size: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect(), size: vec![1; n] }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Merges the classes of `a` and `b`; returns the surviving root if they were distinct.
    fn union(&mut self, a: usize, b: usize) -> Option<usize> {
        let (mut ra, mut rb) = (self.find(a), self.find(b));
        if ra == rb {
            return None;
        }
        if self.size[ra] < self.size[rb] {
            std::mem::swap(&mut ra, &mut rb);
        }
        self.parent[rb] = ra;
        self.size[ra] += self.size[rb];
        Some(ra)
    }
}

/// Orbit of `start` in breadth-first order.
pub(crate) fn orbit(degree: usize, gens: &[Permutation], start: usize) -> Vec<usize> {
    let mut seen = vec![false; degree];
    seen[start] = true;
    let mut out = vec![start];
    let mut i = 0;
    while i < out.len() {
        let x = out[i];
        for g in gens {
            let y = g.apply(x);
            if !seen[y] {
                seen[y] = true;
                out.push(y);
            }
        }
        i += 1;
    }
    out
}

/// The finest block system in which `a` and `b` share a block; returns the block containing `a`, sorted.
pub(crate) fn minimal_block(degree: usize, gens: &[Permutation], a: usize, b: usize) -> Vec<usize> {
    let mut uf = UnionFind::new(degree);
    // Each queued pair records one merge; pushing its images under every generator
    // closes the equivalence under the group.
    let mut queue = vec![(a, b)];
    uf.union(a, b);
    while let Some((x, y)) = queue.pop() {
        for g in gens {
            let (gx, gy) = (g.apply(x), g.apply(y));
            if uf.union(gx, gy).is_some() {
                queue.push((gx, gy));
            }
        }
    }
    let root = uf.find(a);
    (0..degree).filter(|&x| uf.find(x) == root).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclic_group_blocks() {
        let c6 = Permutation::from_images(vec![1, 2, 3, 4, 5, 0]).unwrap();
        assert_eq!(minimal_block(6, std::slice::from_ref(&c6), 0, 3), vec![0, 3]);
        assert_eq!(minimal_block(6, std::slice::from_ref(&c6), 0, 2), vec![0, 2, 4]);
        assert_eq!(minimal_block(6, std::slice::from_ref(&c6), 0, 1).len(), 6);
        assert_eq!(orbit(6, &[c6], 2).len(), 6);
    }
}
