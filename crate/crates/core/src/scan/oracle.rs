//! Slow, independent group-order computations used to cross-check the stabilizer chain.

use std::collections::HashSet;

use num_bigint::BigUint;

use crate::permgroup::Permutation;

type Images = Vec<u32>;

fn images(p: &Permutation) -> Images {
    p.images().iter().map(|&x| x as u32).collect()
}

fn compose(a: &[u32], b: &[u32]) -> Images {
    b.iter().map(|&x| a[x as usize]).collect()
}

fn inverse(a: &[u32]) -> Images {
    let mut out = vec![0; a.len()];
    for (x, &y) in a.iter().enumerate() {
        out[y as usize] = x as u32;
    }
    out
}

fn is_identity(a: &[u32]) -> bool {
    a.iter().enumerate().all(|(x, &y)| x == y as usize)
}

/// Size of the group generated by `gens`, found by closing under right multiplication,
/// or `None` once more than `budget` elements have been seen.
pub fn closure_order(degree: usize, gens: &[Permutation], budget: usize) -> Option<usize> {
    let gens: Vec<Images> = gens.iter().map(images).collect();
    let id: Images = (0..degree as u32).collect();
    let mut seen = HashSet::from([id.clone()]);
    let mut frontier = vec![id];
    while let Some(g) = frontier.pop() {
        for s in &gens {
            let h = compose(&g, s);
            if seen.insert(h.clone()) {
                if seen.len() > budget {
                    return None;
                }
                frontier.push(h);
            }
        }
    }
    Some(seen.len())
}

/// Order via Sims' method with the fixed base `0, 1, …, degree - 1`, rebuilding every
/// transversal from scratch after each new strong generator.
pub fn fixed_base_order(degree: usize, gens: &[Permutation]) -> BigUint {
    // strong[k] generates the stabilizer of 0..k (as far as known).
    let mut strong: Vec<Vec<Images>> = vec![Vec::new(); degree + 1];
    for g in gens.iter().map(images).filter(|g| !is_identity(g)) {
        strong[0].push(g);
    }
    loop {
        let transversals: Vec<Vec<Option<Images>>> = (0..degree).map(|k| transversal(degree, k, &strong[k])).collect();
        let mut added = false;
        'levels: for k in 0..degree {
            for x in 0..degree {
                let Some(u) = &transversals[k][x] else { continue };
                for s in &strong[k] {
                    let y = s[x] as usize;
                    let uy = transversals[k][y].as_ref().expect("orbit is closed");
                    let schreier = compose(&inverse(uy), &compose(s, u));
                    if let Some((level, residue)) = sift(&transversals, schreier, k + 1) {
                        for gens in &mut strong[k + 1..=level] {
                            gens.push(residue.clone());
                        }
                        added = true;
                        break 'levels;
                    }
                }
            }
        }
        if !added {
            return transversals
                .iter()
                .map(|t| t.iter().filter(|u| u.is_some()).count())
                .fold(BigUint::from(1u32), |acc, len| acc * BigUint::from(len));
        }
    }
}

/// `t[x] = Some(u)` with `u(k) = x`, for `x` in the orbit of `k`.
fn transversal(degree: usize, k: usize, gens: &[Images]) -> Vec<Option<Images>> {
    let mut t: Vec<Option<Images>> = vec![None; degree];
    t[k] = Some((0..degree as u32).collect());
    let mut queue = vec![k];
    while let Some(x) = queue.pop() {
        for s in gens {
            let y = s[x] as usize;
            if t[y].is_none() {
                t[y] = Some(compose(s, t[x].as_ref().expect("visited")));
                queue.push(y);
            }
        }
    }
    t
}

/// Sifts `g`, which fixes `0..start`; returns the first level whose transversal misses it
/// together with the residue, or `None` when `g` sifts to the identity.
fn sift(transversals: &[Vec<Option<Images>>], mut g: Images, start: usize) -> Option<(usize, Images)> {
    for (k, t) in transversals.iter().enumerate().skip(start) {
        match &t[g[k] as usize] {
            Some(u) => g = compose(&inverse(u), &g),
            None => return Some((k, g)),
        }
    }
    debug_assert!(is_identity(&g));
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perm(v: &[usize]) -> Permutation {
        Permutation::from_images(v.to_vec()).unwrap()
    }

    #[test]
    fn known_orders() {
        let s5 = [perm(&[1, 2, 3, 4, 0]), perm(&[1, 0, 2, 3, 4])];
        assert_eq!(closure_order(5, &s5, 1000), Some(120));
        assert_eq!(closure_order(5, &s5, 100), None);
        assert_eq!(fixed_base_order(5, &s5), BigUint::from(120u32));
        let d4 = [perm(&[1, 2, 3, 0]), perm(&[0, 3, 2, 1])];
        assert_eq!(fixed_base_order(4, &d4), BigUint::from(8u32));
        assert_eq!(fixed_base_order(3, &[]), BigUint::from(1u32));
    }
}
