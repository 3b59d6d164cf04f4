//! Column-strict tableaux, their Bender–Knuth moves, and the bridge to extensions of Ferrers posets.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linext::LinearExtension;
use crate::poset::{ferrers, Partition};

#[derive(Deserialize)]
struct RawTableau {
    shape: Vec<usize>,
    rows: Vec<Vec<usize>>,
}

/// Rows weakly increase, columns strictly increase, entries are at least 1.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawTableau")]
pub struct ColumnStrictTableau {
    shape: Partition,
    rows: Vec<Vec<usize>>,
}

impl TryFrom<RawTableau> for ColumnStrictTableau {
    type Error = Error;

    fn try_from(raw: RawTableau) -> Result<Self> {
        let t = Self::new(raw.rows)?;
        if t.shape.parts() != raw.shape.as_slice() {
            return Err(Error::Shape(format!("declared shape {:?} does not match rows", raw.shape)));
        }
        Ok(t)
    }
}

impl ColumnStrictTableau {
    /// The shape is read off the row lengths; empty trailing rows are dropped.
    pub fn new(mut rows: Vec<Vec<usize>>) -> Result<Self> {
        while rows.last().is_some_and(Vec::is_empty) {
            rows.pop();
        }
        let shape = Partition::new(rows.iter().map(Vec::len).collect()).map_err(|_| {
            Error::Shape(format!("row lengths {:?} are not a partition", rows.iter().map(Vec::len).collect::<Vec<_>>()))
        })?;
        for (r, row) in rows.iter().enumerate() {
            if row.contains(&0) {
                return Err(Error::Shape(format!("row {r} has a zero entry")));
            }
            if row.windows(2).any(|w| w[0] > w[1]) {
                return Err(Error::Shape(format!("row {r} is not weakly increasing")));
            }
            if r > 0 && row.iter().zip(&rows[r - 1]).any(|(below, above)| below <= above) {
                return Err(Error::Shape(format!("a column through row {r} is not strictly increasing")));
            }
        }
        Ok(ColumnStrictTableau { shape, rows })
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn size(&self) -> usize {
        self.shape.size()
    }

    pub fn max_entry(&self) -> usize {
        self.rows.iter().flatten().copied().max().unwrap_or(0)
    }

    /// `α_i` for `i = 1..=max_entry`.
    pub fn content(&self) -> Vec<usize> {
        let mut alpha = vec![0; self.max_entry()];
        for &x in self.rows.iter().flatten() {
            alpha[x - 1] += 1;
        }
        alpha
    }

    pub fn is_standard(&self) -> bool {
        self.content().iter().all(|&a| a == 1)
    }

    fn entry(&self, r: usize, c: usize) -> Option<usize> {
        self.rows.get(r).and_then(|row| row.get(c)).copied()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("tableau serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }
}

/// `t_i` on a column-strict tableau, `i >= 1`.
///
/// An `i` with an `i + 1` directly below it, and that `i + 1`, are fixed. In each row the
/// remaining (free) entries form one contiguous run of `b` copies of `i` then `c` copies of
/// `i + 1`, which is rewritten as `c` copies of `i` then `b` copies of `i + 1`.
pub fn cst_bk_move(t: &ColumnStrictTableau, i: usize) -> Result<ColumnStrictTableau> {
    if i == 0 {
        return Err(Error::Index { index: 0, max: usize::MAX });
    }
    let mut rows = t.rows.clone();
    for (r, row) in t.rows.iter().enumerate() {
        let free: Vec<usize> = (0..row.len())
            .filter(|&c| {
                (row[c] == i && t.entry(r + 1, c) != Some(i + 1))
                    || (row[c] == i + 1 && (r == 0 || t.entry(r - 1, c) != Some(i)))
            })
            .collect();
        let b = free.iter().filter(|&&c| row[c] == i).count();
        let swapped = free.len() - b;
        for (k, &c) in free.iter().enumerate() {
            rows[r][c] = if k < swapped { i } else { i + 1 };
        }
    }
    Ok(ColumnStrictTableau { shape: t.shape.clone(), rows })
}

/// The element of `ferrers(shape)` at cell `(r, c)` (0-indexed) carries the entry there.
pub fn syt_to_linext(t: &ColumnStrictTableau) -> Result<LinearExtension> {
    if !t.is_standard() {
        return Err(Error::NotStandard);
    }
    let mut word = vec![0; t.size()];
    for (id, &x) in t.rows.iter().flatten().enumerate() {
        word[x - 1] = id;
    }
    Ok(LinearExtension::from_word_unchecked(word))
}

pub fn linext_to_syt(ext: &LinearExtension, shape: &Partition) -> Result<ColumnStrictTableau> {
    let p = ferrers(shape)?;
    if !ext.is_extension_of(&p) {
        return Err(Error::NotExtension(format!("{:?}", ext.word())));
    }
    let labels = ext.labels();
    let mut rows = Vec::with_capacity(shape.len());
    let mut start = 0;
    for &len in shape.parts() {
        rows.push(labels[start..start + len].to_vec());
        start += len;
    }
    Ok(ColumnStrictTableau { shape: shape.clone(), rows })
}

/// Every column-strict tableau of `shape` with entries in `1..=max_entry`, in row-major lexicographic order.
pub fn all_csts(shape: &Partition, max_entry: usize) -> Vec<ColumnStrictTableau> {
    fn fill(shape: &[usize], rows: &mut Vec<Vec<usize>>, max_entry: usize, out: &mut Vec<Vec<Vec<usize>>>) {
        let r = rows.len() - 1;
        let c = rows[r].len();
        if c == shape[r] {
            if r + 1 == shape.len() {
                out.push(rows.clone());
                return;
            }
            rows.push(Vec::with_capacity(shape[r + 1]));
            fill(shape, rows, max_entry, out);
            rows.pop();
            return;
        }
        let left = if c > 0 { rows[r][c - 1] } else { 1 };
        let above = if r > 0 { rows[r - 1][c] + 1 } else { 1 };
        for x in left.max(above)..=max_entry {
            rows[r].push(x);
            fill(shape, rows, max_entry, out);
            rows[r].pop();
        }
    }
    if shape.is_empty() {
        return vec![ColumnStrictTableau { shape: shape.clone(), rows: Vec::new() }];
    }
    let mut out = Vec::new();
    fill(shape.parts(), &mut vec![Vec::new()], max_entry, &mut out);
    out.into_iter().map(|rows| ColumnStrictTableau { shape: shape.clone(), rows }).collect()
}

/// Standard Young tableaux of `shape`, built by placing `1, 2, …` at addable corners.
pub fn all_syt(shape: &Partition) -> Vec<ColumnStrictTableau> {
    fn place(shape: &[usize], rows: &mut Vec<Vec<usize>>, next: usize, total: usize, out: &mut Vec<Vec<Vec<usize>>>) {
        if next > total {
            out.push(rows.clone());
            return;
        }
        for r in 0..shape.len() {
            let len = rows[r].len();
            if len < shape[r] && (r == 0 || rows[r - 1].len() > len) {
                rows[r].push(next);
                place(shape, rows, next + 1, total, out);
                rows[r].pop();
            }
        }
    }
    let mut out = Vec::new();
    place(shape.parts(), &mut vec![Vec::new(); shape.len()], 1, shape.size(), &mut out);
    let mut out: Vec<_> = out.into_iter().map(|rows| ColumnStrictTableau { shape: shape.clone(), rows }).collect();
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linext::bk_move;

    fn shape(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn cst(rows: &[&[usize]]) -> ColumnStrictTableau {
        ColumnStrictTableau::new(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    #[test]
    fn worked_t2_example() {
        let t = cst(&[&[1, 1, 1, 1, 2, 2, 2, 2, 3], &[2, 2, 3, 3, 3, 4], &[3, 4, 4, 5]]);
        let expected = cst(&[&[1, 1, 1, 1, 2, 2, 3, 3, 3], &[2, 2, 2, 3, 3, 4], &[3, 4, 4, 5]]);
        assert_eq!(cst_bk_move(&t, 2).unwrap(), expected);
        assert_eq!(cst_bk_move(&expected, 2).unwrap(), t);
    }

    #[test]
    fn content_examples() {
        assert_eq!(cst(&[&[1, 2, 2], &[3, 4]]).content(), vec![1, 2, 1, 1]);
        assert!(ColumnStrictTableau::new(vec![]).unwrap().content().is_empty());
        assert!(all_syt(&shape(&[3, 2])).iter().all(ColumnStrictTableau::is_standard));
    }

    #[test]
    fn validation() {
        assert!(matches!(ColumnStrictTableau::new(vec![vec![1, 2], vec![1]]), Err(Error::Shape(_))));
        assert!(matches!(ColumnStrictTableau::new(vec![vec![2, 1]]), Err(Error::Shape(_))));
        assert!(matches!(ColumnStrictTableau::new(vec![vec![1], vec![2, 3]]), Err(Error::Shape(_))));
        assert!(matches!(ColumnStrictTableau::new(vec![vec![0]]), Err(Error::Shape(_))));
        assert!(matches!(cst_bk_move(&cst(&[&[1]]), 0), Err(Error::Index { .. })));
    }

    #[test]
    fn json_round_trip() {
        let t = cst(&[&[1, 2, 2], &[3, 4]]);
        let text = t.to_json();
        assert_eq!(text, r#"{"shape":[3,2],"rows":[[1,2,2],[3,4]]}"#);
        assert_eq!(ColumnStrictTableau::from_json(&text).unwrap(), t);
        assert!(ColumnStrictTableau::from_json(r#"{"shape":[2,2],"rows":[[1,2,2],[3,4]]}"#).is_err());
    }

    #[test]
    fn syt_of_shape_421() {
        let t = cst(&[&[1, 2, 4, 6], &[3, 5], &[7]]);
        let ext = syt_to_linext(&t).unwrap();
        assert_eq!(ext.labels(), vec![1, 2, 4, 6, 3, 5, 7]);
        assert!(ext.is_extension_of(&ferrers(&shape(&[4, 2, 1])).unwrap()));
        assert_eq!(linext_to_syt(&ext, &shape(&[4, 2, 1])).unwrap(), t);
        assert!(matches!(syt_to_linext(&cst(&[&[1, 1]])), Err(Error::NotStandard)));
    }

    #[test]
    fn syt_counts() {
        assert_eq!(all_syt(&shape(&[3, 2])).len(), 5);
        assert_eq!(all_syt(&shape(&[3, 2, 1])).len(), 16);
        assert_eq!(all_syt(&shape(&[])).len(), 1);
        for t in all_syt(&shape(&[3, 2])) {
            assert_eq!(linext_to_syt(&syt_to_linext(&t).unwrap(), &shape(&[3, 2])).unwrap(), t);
        }
    }

    #[test]
    fn cst_counts() {
        // s_{(2,1)}(1,1,1) = 8
        assert_eq!(all_csts(&shape(&[2, 1]), 3).len(), 8);
        assert_eq!(all_csts(&shape(&[2]), 2).len(), 3);
    }

    #[test]
    fn commuting_square_small() {
        let lambda = shape(&[3, 2, 1]);
        let p = ferrers(&lambda).unwrap();
        for t in all_syt(&lambda) {
            for i in 1..6 {
                let lhs = syt_to_linext(&cst_bk_move(&t, i).unwrap()).unwrap();
                let rhs = bk_move(&p, &syt_to_linext(&t).unwrap(), i).unwrap();
                assert_eq!(lhs, rhs);
            }
        }
    }
}
