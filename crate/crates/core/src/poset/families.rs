//! Constructors for the named poset families.

use super::{Partition, Poset, MAX_ELEMENTS};
use crate::error::{Error, Result};

fn build(n: usize, covers: &[(usize, usize)]) -> Poset {
    Poset::from_covers(n, covers).expect("family constructors produce acyclic covers")
}

fn check_size(n: usize) -> Result<()> {
    if n > MAX_ELEMENTS {
        return Err(Error::Cap { what: "poset size", cap: MAX_ELEMENTS, got: n });
    }
    Ok(())
}

/// `C_m`. Panics if `m` exceeds [`MAX_ELEMENTS`].
pub fn chain(m: usize) -> Poset {
    let covers: Vec<_> = (1..m).map(|i| (i - 1, i)).collect();
    build(m, &covers)
}

/// `A_m`. Panics if `m` exceeds [`MAX_ELEMENTS`].
pub fn antichain(m: usize) -> Poset {
    build(m, &[])
}

/// Cells `(row, col)`, 1-indexed, in row-major order; the position in this list is the element id.
pub fn ferrers_cells(shape: &Partition) -> Vec<(usize, usize)> {
    shape.parts().iter().enumerate().flat_map(|(i, &len)| (1..=len).map(move |j| (i + 1, j))).collect()
}

/// Shifted diagram: row `i` occupies columns `i ..= i + λ_i - 1`.
pub fn shifted_ferrers_cells(shape: &Partition) -> Vec<(usize, usize)> {
    shape.parts().iter().enumerate().flat_map(|(i, &len)| (i + 1..i + 1 + len).map(move |j| (i + 1, j))).collect()
}

fn grid_poset(cells: &[(usize, usize)]) -> Poset {
    let id = |cell: (usize, usize)| cells.iter().position(|&c| c == cell);
    let mut covers = Vec::new();
    for (x, &(i, j)) in cells.iter().enumerate() {
        for next in [(i, j + 1), (i + 1, j)] {
            if let Some(y) = id(next) {
                covers.push((x, y));
            }
        }
    }
    build(cells.len(), &covers)
}

pub fn ferrers(shape: &Partition) -> Result<Poset> {
    if shape.is_empty() {
        return Err(Error::Param("Ferrers shape must be non-empty".into()));
    }
    check_size(shape.size())?;
    Ok(grid_poset(&ferrers_cells(shape)))
}

pub fn shifted_ferrers(shape: &Partition) -> Result<Poset> {
    if !shape.is_strict() {
        return Err(Error::Strictness(shape.parts().to_vec()));
    }
    if shape.is_empty() {
        return Err(Error::Param("shifted shape must be non-empty".into()));
    }
    check_size(shape.size())?;
    Ok(grid_poset(&shifted_ferrers_cells(shape)))
}

/// `Z_m`: `v1 < v2 > v3 < v4 > ...`.
pub fn zigzag(m: usize) -> Result<Poset> {
    if m == 0 {
        return Err(Error::Param("zigzag needs m >= 1".into()));
    }
    check_size(m)?;
    let covers: Vec<_> = (0..m.saturating_sub(1)).map(|k| if k % 2 == 0 { (k, k + 1) } else { (k + 1, k) }).collect();
    Ok(build(m, &covers))
}

/// `N_{a,b,c}` on `a + b + c + 1` elements: an up-run of `a` covers, a down-run of `b`, an up-run of `c`.
pub fn n_poset(a: usize, b: usize, c: usize) -> Result<Poset> {
    if a == 0 || b == 0 || c == 0 {
        return Err(Error::Param(format!("N_{{a,b,c}} needs a,b,c >= 1, got ({a},{b},{c})")));
    }
    let n = a + b + c + 1;
    check_size(n)?;
    let covers: Vec<_> = (0..n - 1).map(|k| if k < a || k >= a + b { (k, k + 1) } else { (k + 1, k) }).collect();
    Ok(build(n, &covers))
}

/// `M_{a,b}`: chains `v1..va` and `v(a+1)..v(a+b)` joined by `v(a-1) < v(a+2)`.
pub fn m_poset(a: usize, b: usize) -> Result<Poset> {
    if a < 2 || b < 2 {
        return Err(Error::Param(format!("M_{{a,b}} needs a,b >= 2, got ({a},{b})")));
    }
    let n = a + b;
    check_size(n)?;
    let mut covers: Vec<_> = (1..a).map(|i| (i - 1, i)).collect();
    covers.extend((a + 1..n).map(|i| (i - 1, i)));
    covers.push((a - 2, a + 1));
    Ok(build(n, &covers))
}

/// `A_1^{⊕k} ⊕ A_2 ⊕ A_1^{⊕k}`.
pub fn minuscule_ordinal(k: usize) -> Result<Poset> {
    check_size(2 * k + 2)?;
    Ok(chain(k).ordinal_sum(&antichain(2)).ordinal_sum(&chain(k)))
}

/// The 9-element jeu-de-taquin poset whose natural labeling breaks
/// `(t_3 q_{5,9})^2 = 1`. Element `k - 1` carries label `k`.
pub fn jdt9() -> Poset {
    let labelled = [(1, 2), (2, 3), (2, 4), (3, 5), (4, 7), (5, 6), (5, 7), (5, 8), (6, 9), (7, 9), (8, 9)];
    let covers: Vec<_> = labelled.iter().map(|&(a, b)| (a - 1, b - 1)).collect();
    build(9, &covers)
}

/// `x1, x2 < y1, y2` and `x3 < y2` (ids `x1..x3 = 0..2`, `y1 = 3`, `y2 = 4`):
/// every eligible cactus relation fails on it.
pub fn twin_fail5() -> Poset {
    build(5, &[(0, 3), (0, 4), (1, 3), (1, 4), (2, 4)])
}
