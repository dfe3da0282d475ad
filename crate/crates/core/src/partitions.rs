//! Partitions as Young diagrams in English notation.
//!
//! Rows are numbered from 1 downwards and columns from 1 rightwards. A box in
//! row `i` and column `j` has content `j - i` and anticontent `i + j`.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A box (node) of a Young diagram, or a position in the plane where a box
/// could go. Coordinates are signed so that skew diagrams can be grown past
/// their canonical frame.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cell {
    pub row: i32,
    pub col: i32,
}

impl Cell {
    pub const fn new(row: i32, col: i32) -> Self {
        Cell { row, col }
    }

    pub const fn content(self) -> i32 {
        self.col - self.row
    }

    pub const fn anticontent(self) -> i32 {
        self.col + self.row
    }

    pub const fn shifted(self, drow: i32, dcol: i32) -> Self {
        Cell::new(self.row + drow, self.col + dcol)
    }

    /// True if the two cells share a side.
    pub fn is_adjacent(self, other: Cell) -> bool {
        (self.row - other.row).abs() + (self.col - other.col).abs() == 1
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.row, self.col)
    }
}

/// A partition, stored without trailing zeros. The empty partition has no
/// parts and size 0.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<u32>,
    size: u32,
}

impl Partition {
    /// Builds a partition from its parts. Trailing zeros are dropped; any
    /// other zero or an increase between consecutive parts is rejected.
    pub fn new(mut parts: Vec<u32>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.contains(&0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotAPartition(parts));
        }
        Ok(Self::from_parts_unchecked(parts))
    }

    pub(crate) fn from_parts_unchecked(parts: Vec<u32>) -> Self {
        let size = parts.iter().sum();
        Partition { parts, size }
    }

    pub fn empty() -> Self {
        Partition::default()
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Number of boxes.
    pub fn size(&self) -> u32 {
        self.size
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// The `row`-th part (1-based), zero past the end.
    pub fn part(&self, row: usize) -> u32 {
        if row == 0 {
            return 0;
        }
        self.parts.get(row - 1).copied().unwrap_or(0)
    }

    pub fn cells(&self) -> impl Iterator<Item = Cell> + '_ {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(i, &p)| (1..=p as i32).map(move |j| Cell::new(i as i32 + 1, j)))
    }

    pub fn contains_cell(&self, cell: Cell) -> bool {
        cell.row >= 1 && cell.col >= 1 && cell.col as u32 <= self.part(cell.row as usize)
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.parts.first().copied().unwrap_or(0);
        let parts =
            (0..width).map(|j| self.parts.iter().take_while(|&&p| p > j).count() as u32).collect();
        Partition::from_parts_unchecked(parts)
    }

    /// True if every row of `self` fits inside the same row of `outer`.
    pub fn is_contained_in(&self, outer: &Partition) -> bool {
        self.len() <= outer.len() && self.parts.iter().zip(&outer.parts).all(|(a, b)| a <= b)
    }

    /// Cells that can be added so that the result is again a partition.
    pub fn addable_cells(&self) -> Vec<Cell> {
        (1..=self.len() + 1)
            .filter(|&i| i == 1 || self.part(i - 1) > self.part(i))
            .map(|i| Cell::new(i as i32, self.part(i) as i32 + 1))
            .collect()
    }

    /// Cells that can be removed so that the result is again a partition.
    pub fn removable_cells(&self) -> Vec<Cell> {
        (1..=self.len())
            .filter(|&i| self.part(i) > self.part(i + 1))
            .map(|i| Cell::new(i as i32, self.part(i) as i32))
            .collect()
    }

    /// The partition obtained by adding the addable box of content `content`,
    /// if there is one. There is at most one.
    pub fn add_box(&self, content: i32) -> Option<Partition> {
        let cell = self.addable_cells().into_iter().find(|c| c.content() == content)?;
        let mut parts = self.parts.clone();
        let row = cell.row as usize;
        if row > parts.len() {
            parts.push(1);
        } else {
            parts[row - 1] += 1;
        }
        Some(Partition::from_parts_unchecked(parts))
    }

    /// The partition obtained by removing the removable box of content
    /// `content`, if there is one.
    pub fn remove_box(&self, content: i32) -> Option<Partition> {
        let cell = self.removable_cells().into_iter().find(|c| c.content() == content)?;
        let mut parts = self.parts.clone();
        parts[cell.row as usize - 1] -= 1;
        if parts.last() == Some(&0) {
            parts.pop();
        }
        Some(Partition::from_parts_unchecked(parts))
    }

    /// The element of 𝒜(λ)_q: add the box of content `q - 1`.
    ///
    /// With this shift, `mu == lam.add_q(q)` exactly when
    /// `lam == mu.remove_q(q - 1)`.
    pub fn add_q(&self, q: i32) -> Option<Partition> {
        self.add_box(q - 1)
    }

    /// The element of ℛ(λ)_q: remove the box of content `q`.
    pub fn remove_q(&self, q: i32) -> Option<Partition> {
        self.remove_box(q)
    }

    /// All partitions of `n`, largest first in lexicographic order.
    pub fn all_of_size(n: u32) -> Vec<Partition> {
        fn go(rest: u32, max: u32, current: &mut Vec<u32>, out: &mut Vec<Partition>) {
            if rest == 0 {
                out.push(Partition::from_parts_unchecked(current.clone()));
                return;
            }
            for k in (1..=rest.min(max)).rev() {
                current.push(k);
                go(rest - k, k, current, out);
                current.pop();
            }
        }
        let mut out = Vec::new();
        go(n, n, &mut Vec::new(), &mut out);
        out
    }

    /// All partitions with at most `n` boxes, in [`label_order`].
    pub fn all_up_to(n: u32) -> Vec<Partition> {
        (0..=n).rev().flat_map(Partition::all_of_size).collect()
    }
}

/// Ordering used for the rows and columns of decomposition matrices:
/// decreasing size, then decreasing lexicographic order of the parts.
pub fn label_order(a: &Partition, b: &Partition) -> Ordering {
    b.size.cmp(&a.size).then_with(|| b.parts.cmp(&a.parts))
}

/// Labels of the simple modules: partitions of `r, r - 2, ...` down to 1 or 2.
pub fn labels_lambda(r: u32) -> Result<Vec<Partition>> {
    if r < 2 {
        return Err(Error::RankTooSmall(r));
    }
    Ok((0..)
        .map(|i| r as i64 - 2 * i)
        .take_while(|&n| n > 0)
        .flat_map(|n| Partition::all_of_size(n as u32))
        .collect())
}

/// Labels of the cell modules: `labels_lambda(r)`, plus the empty partition
/// when `r` is even.
pub fn labels_l(r: u32) -> Result<Vec<Partition>> {
    let mut labels = labels_lambda(r)?;
    if r.is_multiple_of(2) {
        labels.push(Partition::empty());
    }
    Ok(labels)
}

pub fn in_labels_lambda(r: u32, p: &Partition) -> bool {
    p.size() <= r && p.size() > 0 && (r - p.size()).is_multiple_of(2)
}

pub fn in_labels_l(r: u32, p: &Partition) -> bool {
    p.size() <= r && (r - p.size()).is_multiple_of(2)
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str("]")
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Parses the bracket syntax `[3,1]`; `[]` is the empty partition.
    fn from_str(s: &str) -> Result<Self> {
        parse_partition_at(s, 0)
    }
}

pub(crate) fn parse_partition_at(s: &str, offset: usize) -> Result<Partition> {
    let err = |pos: usize, msg: &str| Error::Parse { pos: offset + pos, msg: msg.to_string() };
    let lead = s.len() - s.trim_start().len();
    let t = s.trim();
    let inner = t
        .strip_prefix('[')
        .ok_or_else(|| err(lead, "expected '['"))?
        .strip_suffix(']')
        .ok_or_else(|| err(lead + t.len().saturating_sub(1), "expected ']'"))?;
    let mut parts = Vec::new();
    if !inner.trim().is_empty() {
        let mut pos = lead + 1;
        for piece in inner.split(',') {
            let value = piece
                .trim()
                .parse::<u32>()
                .map_err(|_| err(pos, &format!("invalid part {:?}", piece.trim())))?;
            parts.push(value);
            pos += piece.len() + 1;
        }
    }
    Partition::new(parts)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(p(&[3, 1]).conjugate(), p(&[2, 1, 1]));
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
        assert_eq!(p(&[2, 1]).conjugate(), p(&[2, 1]));
    }

    #[test]
    fn containment_examples() {
        assert!(p(&[1]).is_contained_in(&p(&[3, 1])));
        assert!(!p(&[2]).is_contained_in(&p(&[1, 1])));
        for mu in Partition::all_up_to(6) {
            assert!(Partition::empty().is_contained_in(&mu));
        }
    }

    #[test]
    fn add_and_remove_examples() {
        assert_eq!(Partition::empty().add_q(1), Some(p(&[1])));
        assert_eq!(p(&[1]).add_q(2), Some(p(&[2])));
        assert_eq!(p(&[1]).add_q(0), Some(p(&[1, 1])));
        assert_eq!(p(&[2]).add_q(1), None);
        assert_eq!(p(&[1]).remove_q(0), Some(Partition::empty()));
        assert_eq!(p(&[1]).remove_q(1), None);
        assert_eq!(p(&[3, 1]).remove_q(2), Some(p(&[2, 1])));
        assert_eq!(p(&[3, 1]).remove_q(-1), Some(p(&[3])));
    }

    #[test]
    fn label_sets() {
        assert_eq!(labels_lambda(2).unwrap(), vec![p(&[2]), p(&[1, 1])]);
        assert_eq!(labels_l(2).unwrap(), vec![p(&[2]), p(&[1, 1]), Partition::empty()]);
        let three = vec![p(&[3]), p(&[2, 1]), p(&[1, 1, 1]), p(&[1])];
        assert_eq!(labels_lambda(3).unwrap(), three);
        assert_eq!(labels_l(3).unwrap(), three);
        assert_eq!(labels_l(4).unwrap().len(), 8);
        assert_eq!(labels_lambda(1), Err(Error::RankTooSmall(1)));
        assert_eq!(labels_l(0), Err(Error::RankTooSmall(0)));
        for r in 2..10 {
            let lam = labels_lambda(r).unwrap();
            let l = labels_l(r).unwrap();
            assert!(lam.iter().all(|x| l.contains(x)));
            assert_eq!(lam == l, r % 2 == 1);
            assert!(lam.iter().all(|x| in_labels_lambda(r, x)));
            assert!(l.iter().all(|x| in_labels_l(r, x)));
        }
    }

    #[test]
    fn partition_counts() {
        let counts: Vec<usize> = (0..=12).map(|n| Partition::all_of_size(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77]);
    }

    #[test]
    fn add_remove_equivalence_and_uniqueness() {
        for lam in Partition::all_up_to(10) {
            let contents: Vec<i32> = lam.addable_cells().iter().map(|c| c.content()).collect();
            let mut dedup = contents.clone();
            dedup.dedup();
            assert_eq!(contents.len(), dedup.len());
            for q in -12..=12 {
                if let Some(mu) = lam.add_q(q) {
                    assert_eq!(mu.size(), lam.size() + 1);
                    assert_eq!(mu.remove_q(q - 1).as_ref(), Some(&lam));
                }
                if let Some(nu) = lam.remove_q(q) {
                    assert_eq!(nu.add_q(q + 1).as_ref(), Some(&lam));
                }
            }
        }
    }

    #[test]
    fn parse_and_display() {
        assert_eq!("[3,1]".parse::<Partition>().unwrap(), p(&[3, 1]));
        assert_eq!(" [ 2 , 2 ] ".parse::<Partition>().unwrap(), p(&[2, 2]));
        assert_eq!("[]".parse::<Partition>().unwrap(), Partition::empty());
        assert_eq!(p(&[3, 1]).to_string(), "[3,1]");
        assert_eq!(Partition::empty().to_string(), "[]");
        assert!("[1,2]".parse::<Partition>().is_err());
        assert!("[1,0,1]".parse::<Partition>().is_err());
        assert!(matches!("3,1]".parse::<Partition>(), Err(Error::Parse { pos: 0, .. })));
        assert!(matches!("[3,x]".parse::<Partition>(), Err(Error::Parse { pos: 3, .. })));
    }

    #[test]
    fn label_order_sorts_matrix_axes() {
        let mut v = vec![Partition::empty(), p(&[1, 1]), p(&[2])];
        v.sort_by(label_order);
        assert_eq!(v, vec![p(&[2]), p(&[1, 1]), Partition::empty()]);
    }
}
