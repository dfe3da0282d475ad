//! Skew Young diagrams up to translation.
//!
//! A [`SkewDiagram`] is stored in its canonical frame: the first row is row 1
//! and the left-most box sits in column 1. Row `i` holds the boxes in columns
//! `l + 1 ..= r` for its interval `(l, r)`. Rows between the first and the
//! last that hold no boxes are kept as `(v, v)` where `v` is the left end of
//! the row above, so both endpoint sequences weakly decrease down the rows.
//!
//! Contents in the canonical frame are `col - row`. Callers that need a
//! different normalisation add an offset (see the procedures module).

mod enumerate;
mod hook;

use std::collections::{BTreeMap, HashSet};
use std::fmt;
use std::str::FromStr;

pub use enumerate::{universe, universe_count};
pub use hook::{
    covering, disjoint, enumerate_coverings, is_gamma, is_gamma0, nested, Covering, Hook,
    PlacedHook,
};

use crate::error::{Error, Result};
use crate::partitions::{parse_partition_at, Cell, Partition};

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SkewDiagram {
    size: u32,
    rows: Vec<(i32, i32)>,
}

/// A connected component together with its placement: box `(i, j)` of
/// `diagram` sits at `(i + row_offset, j + col_offset)` in the ambient frame.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Component {
    pub diagram: SkewDiagram,
    pub row_offset: i32,
    pub col_offset: i32,
}

impl Component {
    pub fn cells(&self) -> Vec<Cell> {
        self.diagram
            .cells()
            .into_iter()
            .map(|c| c.shifted(self.row_offset, self.col_offset))
            .collect()
    }
}

/// Result of bringing an arbitrary box set into the canonical frame. Box
/// `(i, j)` of the input is box `(i - row_shift, j - col_shift)` of `diagram`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Canonical {
    pub diagram: SkewDiagram,
    pub row_shift: i32,
    pub col_shift: i32,
}

impl SkewDiagram {
    pub fn empty() -> Self {
        SkewDiagram::default()
    }

    /// Builds a diagram from canonical row intervals, rejecting anything that
    /// is not already in canonical form.
    pub fn from_rows(rows: Vec<(i32, i32)>) -> Result<Self> {
        let bad = |msg: &str| Err(Error::InvalidSkew(format!("{msg}: {rows:?}")));
        if rows.is_empty() {
            return Ok(SkewDiagram::empty());
        }
        if rows.iter().any(|&(l, r)| l < 0 || r < l) {
            return bad("intervals must satisfy 0 <= left <= right");
        }
        if rows[0].0 == rows[0].1 {
            return bad("first row is empty");
        }
        let last = rows[rows.len() - 1];
        if last.0 != 0 || last.1 == 0 {
            return bad("last row must be nonempty and start in column 1");
        }
        for w in rows.windows(2) {
            let ((la, ra), (lb, rb)) = (w[0], w[1]);
            if lb > la || rb > ra {
                return bad("row endpoints must weakly decrease");
            }
            if lb == rb && lb != la {
                return bad("empty rows must repeat the left end of the row above");
            }
        }
        let size = rows.iter().map(|&(l, r)| (r - l) as u32).sum();
        Ok(SkewDiagram { size, rows })
    }

    /// The canonical class of `outer / inner`.
    pub fn from_pair(outer: &Partition, inner: &Partition) -> Result<Self> {
        if !inner.is_contained_in(outer) {
            return Err(Error::NotContained { inner: inner.clone(), outer: outer.clone() });
        }
        let cells: Vec<Cell> = outer.cells().filter(|&c| !inner.contains_cell(c)).collect();
        SkewDiagram::from_cells(&cells)
    }

    /// The canonical class of an arbitrary box set, if it is a skew shape.
    pub fn from_cells(cells: &[Cell]) -> Result<Self> {
        canonical_or_reason(cells).map(|c| c.diagram).map_err(Error::InvalidSkew)
    }

    pub fn size(&self) -> u32 {
        self.size
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn rows(&self) -> &[(i32, i32)] {
        &self.rows
    }

    /// Number of rows from the first to the last occupied row.
    pub fn height(&self) -> i32 {
        self.rows.len() as i32
    }

    /// Right-most occupied column.
    pub fn width(&self) -> i32 {
        self.rows.first().map_or(0, |r| r.1)
    }

    pub fn cells(&self) -> Vec<Cell> {
        let mut out = Vec::with_capacity(self.size as usize);
        for (i, &(l, r)) in self.rows.iter().enumerate() {
            for j in l + 1..=r {
                out.push(Cell::new(i as i32 + 1, j));
            }
        }
        out
    }

    pub fn contains(&self, cell: Cell) -> bool {
        match self.rows.get((cell.row - 1).max(0) as usize) {
            Some(&(l, r)) if cell.row >= 1 => l < cell.col && cell.col <= r,
            _ => false,
        }
    }

    /// Smallest and largest content in the canonical frame.
    pub fn content_range(&self) -> Option<(i32, i32)> {
        if self.is_empty() {
            None
        } else {
            Some((1 - self.height(), self.width() - 1))
        }
    }

    /// Largest minus smallest content; zero for ∅.
    pub fn span(&self) -> i32 {
        self.content_range().map_or(0, |(lo, hi)| hi - lo)
    }

    pub fn components(&self) -> Vec<Component> {
        let mut out: Vec<Component> = cell_components(&self.cells())
            .into_iter()
            .map(|cells| {
                let c = canonicalize(&cells).expect("components of a skew shape are skew shapes");
                Component { diagram: c.diagram, row_offset: c.row_shift, col_offset: c.col_shift }
            })
            .collect();
        out.sort_by_key(|c| (c.row_offset, c.col_offset));
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() == 1
    }

    pub fn conjugate(&self) -> SkewDiagram {
        let cells: Vec<Cell> = self.cells().into_iter().map(|c| Cell::new(c.col, c.row)).collect();
        SkewDiagram::from_cells(&cells).expect("the transpose of a skew shape is a skew shape")
    }

    /// Default content window for addable boxes: two beyond each extreme.
    fn default_window(&self) -> (i32, i32) {
        let (lo, hi) = self.content_range().unwrap_or((0, 0));
        (lo - 2, hi + 2)
    }

    /// d-addable boxes with content in `[lo - 2, hi + 2]`.
    pub fn d_addable(&self) -> Vec<Cell> {
        let (a, b) = self.default_window();
        self.d_addable_in(a, b)
    }

    /// u-addable boxes with content in `[lo - 2, hi + 2]`.
    pub fn u_addable(&self) -> Vec<Cell> {
        let (a, b) = self.default_window();
        self.u_addable_in(a, b)
    }

    /// d-addable boxes with contents in `[from, to]`. For ∅ every content has
    /// a single representative position `(1, 1 + c)`.
    pub fn d_addable_in(&self, from: i32, to: i32) -> Vec<Cell> {
        let cells = self.cells();
        (from..=to)
            .flat_map(|c| addable_positions(&cells, c))
            .filter(|&b| d_free(&cells, b))
            .collect()
    }

    pub fn u_addable_in(&self, from: i32, to: i32) -> Vec<Cell> {
        let cells = self.cells();
        (from..=to)
            .flat_map(|c| addable_positions(&cells, c))
            .filter(|&b| u_free(&cells, b))
            .collect()
    }

    pub fn d_removable(&self) -> Vec<Cell> {
        let cells = self.cells();
        cells.iter().copied().filter(|&b| d_free(&cells, b) && is_removable(&cells, b)).collect()
    }

    pub fn u_removable(&self) -> Vec<Cell> {
        let cells = self.cells();
        cells.iter().copied().filter(|&b| u_free(&cells, b) && is_removable(&cells, b)).collect()
    }

    /// One text line per row, `#` for a box and `.` for a gap inside the
    /// bounding box.
    pub fn render(&self) -> String {
        self.render_with(|_| '#')
    }

    /// Like [`render`](Self::render) but each box shows its content (with the
    /// given offset) modulo 10.
    pub fn render_contents(&self, content_offset: i32) -> String {
        self.render_with(|c| {
            let digit = (c.content() + content_offset).rem_euclid(10) as u32;
            char::from_digit(digit, 10).expect("digit below 10")
        })
    }

    fn render_with(&self, glyph: impl Fn(Cell) -> char) -> String {
        let width = self.width();
        let mut out = String::new();
        for (i, &(l, r)) in self.rows.iter().enumerate() {
            for j in 1..=width {
                let cell = Cell::new(i as i32 + 1, j);
                out.push(if l < j && j <= r { glyph(cell) } else { '.' });
            }
            out.push('\n');
        }
        out
    }
}

/// Brings a box set into the canonical frame, or returns `None` if it is not
/// a skew shape.
pub fn canonicalize(cells: &[Cell]) -> Option<Canonical> {
    canonical_or_reason(cells).ok()
}

fn canonical_or_reason(cells: &[Cell]) -> std::result::Result<Canonical, String> {
    let (top, rows) = absolute_rows(cells)?;
    if rows.is_empty() {
        return Ok(Canonical { diagram: SkewDiagram::empty(), row_shift: 0, col_shift: 0 });
    }
    let shift = rows[rows.len() - 1].0;
    let rows = rows.into_iter().map(|(l, r)| (l - shift, r - shift)).collect();
    Ok(Canonical {
        diagram: SkewDiagram { size: cells.len() as u32, rows },
        row_shift: top - 1,
        col_shift: shift,
    })
}

/// True if the box set is a skew shape (convex in the product order).
pub fn is_skew_cells(cells: &[Cell]) -> bool {
    absolute_rows(cells).is_ok()
}

/// Row intervals of a box set in its own coordinates, with empty rows filled
/// in, or the reason the set is not a skew shape. Duplicate boxes are
/// rejected.
fn absolute_rows(cells: &[Cell]) -> std::result::Result<(i32, Vec<(i32, i32)>), String> {
    if cells.is_empty() {
        return Ok((1, Vec::new()));
    }
    let mut by_row: BTreeMap<i32, (i32, i32, i32)> = BTreeMap::new();
    for c in cells {
        let e = by_row.entry(c.row).or_insert((c.col, c.col, 0));
        e.0 = e.0.min(c.col);
        e.1 = e.1.max(c.col);
        e.2 += 1;
    }
    let top = *by_row.keys().next().expect("nonempty");
    let bottom = *by_row.keys().next_back().expect("nonempty");
    let mut rows = Vec::with_capacity((bottom - top + 1) as usize);
    for row in top..=bottom {
        let interval = match by_row.get(&row) {
            Some(&(lo, hi, count)) => {
                if hi - lo + 1 != count {
                    return Err(format!("row {row} is not a contiguous run of distinct boxes"));
                }
                (lo - 1, hi)
            }
            None => {
                let (l, _) = *rows.last().expect("the top row is occupied");
                (l, l)
            }
        };
        if let Some(&(la, ra)) = rows.last() {
            if interval.0 > la {
                return Err(format!(
                    "left ends must weakly decrease, but row {row} starts at column {} right of row {} starting at column {}",
                    interval.0 + 1,
                    row - 1,
                    la + 1
                ));
            }
            if interval.1 > ra {
                return Err(format!(
                    "right ends must weakly decrease, but row {row} ends at column {} right of row {} ending at column {ra}",
                    interval.1,
                    row - 1
                ));
            }
        }
        rows.push(interval);
    }
    Ok((top, rows))
}

pub(crate) fn cell_components(cells: &[Cell]) -> Vec<Vec<Cell>> {
    let mut left: HashSet<Cell> = cells.iter().copied().collect();
    let mut out = Vec::new();
    for &start in cells {
        if !left.remove(&start) {
            continue;
        }
        let mut comp = vec![start];
        let mut stack = vec![start];
        while let Some(c) = stack.pop() {
            for n in [c.shifted(1, 0), c.shifted(-1, 0), c.shifted(0, 1), c.shifted(0, -1)] {
                if left.remove(&n) {
                    comp.push(n);
                    stack.push(n);
                }
            }
        }
        comp.sort();
        out.push(comp);
    }
    out
}

/// No box of `cells` lies to the right of `b` in its row or below it in its
/// column.
pub fn d_free(cells: &[Cell], b: Cell) -> bool {
    !cells.iter().any(|c| (c.row == b.row && c.col > b.col) || (c.col == b.col && c.row > b.row))
}

/// No box of `cells` lies to the left of `b` in its row or above it in its
/// column.
pub fn u_free(cells: &[Cell], b: Cell) -> bool {
    !cells.iter().any(|c| (c.row == b.row && c.col < b.col) || (c.col == b.col && c.row < b.row))
}

pub(crate) fn is_removable(cells: &[Cell], b: Cell) -> bool {
    let rest: Vec<Cell> = cells.iter().copied().filter(|&c| c != b).collect();
    rest.len() + 1 == cells.len() && is_skew_cells(&rest)
}

/// Every position of content `content` outside `cells` whose addition keeps a
/// skew shape. For an empty set the single representative `(1, 1 + content)`
/// is returned.
pub fn addable_positions(cells: &[Cell], content: i32) -> Vec<Cell> {
    if cells.is_empty() {
        return vec![Cell::new(1, 1 + content)];
    }
    let top = cells.iter().map(|c| c.row).min().unwrap_or(0);
    let bottom = cells.iter().map(|c| c.row).max().unwrap_or(0);
    let left = cells.iter().map(|c| c.col).min().unwrap_or(0);
    let right = cells.iter().map(|c| c.col).max().unwrap_or(0);
    // A box above every row must sit right of every column, and a box below
    // every row must sit left of every column, or convexity fails.
    let first = (top - 1).min(right + 1 - content);
    let last = (bottom + 1).max(left - 1 - content);
    let mut trial = Vec::with_capacity(cells.len() + 1);
    let mut out = Vec::new();
    for row in first..=last {
        let b = Cell::new(row, row + content);
        if cells.contains(&b) {
            continue;
        }
        trial.clear();
        trial.extend_from_slice(cells);
        trial.push(b);
        if is_skew_cells(&trial) {
            out.push(b);
        }
    }
    out
}

impl fmt::Display for SkewDiagram {
    /// Compact row syntax: `row:first..last` per occupied row with inclusive
    /// column bounds, separated by `;`. The empty diagram prints as `empty`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return f.write_str("empty");
        }
        let mut first = true;
        for (i, &(l, r)) in self.rows.iter().enumerate() {
            if l == r {
                continue;
            }
            if !first {
                f.write_str(";")?;
            }
            first = false;
            write!(f, "{}:{}..{}", i + 1, l + 1, r)?;
        }
        Ok(())
    }
}

impl FromStr for SkewDiagram {
    type Err = Error;

    /// Accepts the row syntax written by `Display` (any translate is
    /// canonicalized), `empty`, or a pair of partitions `OUTER/INNER` such as
    /// `[3,1]/[2]`. A lone partition `[2,1]` is read as its Young diagram.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        if t.is_empty() || t == "empty" {
            return Ok(SkewDiagram::empty());
        }
        if t.starts_with('[') {
            let lead = s.len() - s.trim_start().len();
            return match t.split_once('/') {
                Some((outer, inner)) => {
                    let outer_p = parse_partition_at(outer, lead)?;
                    let inner_p = parse_partition_at(inner, lead + outer.len() + 1)?;
                    SkewDiagram::from_pair(&outer_p, &inner_p)
                }
                None => SkewDiagram::from_pair(&parse_partition_at(t, lead)?, &Partition::empty()),
            };
        }
        let mut cells = Vec::new();
        let mut seen_rows = HashSet::new();
        let mut pos = s.len() - s.trim_start().len();
        for piece in t.split(';') {
            let err = |msg: String| Error::Parse { pos, msg };
            let (row, cols) = piece.split_once(':').ok_or_else(|| {
                err(format!("expected 'row:first..last', got {:?}", piece.trim()))
            })?;
            let (a, b) = cols
                .split_once("..")
                .ok_or_else(|| err(format!("expected 'first..last', got {:?}", cols.trim())))?;
            let num = |x: &str| {
                x.trim().parse::<i32>().map_err(|_| err(format!("invalid integer {:?}", x.trim())))
            };
            let (row, a, b) = (num(row)?, num(a)?, num(b)?);
            if b < a {
                return Err(err(format!("empty column range {a}..{b}")));
            }
            if !seen_rows.insert(row) {
                return Err(err(format!("row {row} given twice")));
            }
            cells.extend((a..=b).map(|j| Cell::new(row, j)));
            pos += piece.len() + 1;
        }
        SkewDiagram::from_cells(&cells)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn sk(outer: &[u32], inner: &[u32]) -> SkewDiagram {
        SkewDiagram::from_pair(&p(outer), &p(inner)).unwrap()
    }

    fn contents(cells: &[Cell], offset: i32) -> Vec<i32> {
        let mut v: Vec<i32> = cells.iter().map(|c| c.content() + offset).collect();
        v.sort();
        v
    }

    #[test]
    fn pair_construction() {
        let domino = sk(&[2], &[]);
        assert_eq!(domino.rows(), &[(0, 2)]);
        let split = sk(&[3, 1], &[2]);
        assert_eq!(split.cells(), vec![Cell::new(1, 3), Cell::new(2, 1)]);
        for q in Partition::all_up_to(5) {
            assert_eq!(SkewDiagram::from_pair(&q, &q).unwrap(), SkewDiagram::empty());
        }
        assert!(matches!(
            SkewDiagram::from_pair(&p(&[1, 1]), &p(&[2])),
            Err(Error::NotContained { .. })
        ));
    }

    #[test]
    fn six_row_example() {
        let k = sk(&[5, 5, 5, 3, 1, 1], &[3, 2, 2]);
        assert_eq!(k.size(), 13);
        assert_eq!(k.render_contents(5), "...89\n..678\n..567\n234..\n1....\n0....\n");
        assert_eq!(contents(&k.u_removable(), 5), vec![2, 6, 8]);
        assert_eq!(contents(&k.d_removable(), 5), vec![0, 4, 7]);
        let cells = k.cells();
        let touching = |b: &Cell| cells.iter().any(|c| c.is_adjacent(*b));
        let connected_d: Vec<Cell> = k.d_addable().into_iter().filter(touching).collect();
        let connected_u: Vec<Cell> = k.u_addable().into_iter().filter(touching).collect();
        let mut d = connected_d.clone();
        d.sort();
        let mut u = connected_u.clone();
        u.sort();
        assert_eq!(d, vec![Cell::new(1, 6), Cell::new(4, 4), Cell::new(5, 2), Cell::new(7, 1)]);
        assert_eq!(u, vec![Cell::new(0, 5), Cell::new(1, 3), Cell::new(3, 2), Cell::new(6, 0)]);
        let both: Vec<Cell> =
            k.d_addable().into_iter().filter(|b| !touching(b)).collect::<Vec<_>>();
        assert!(both.contains(&Cell::new(0, 6)));
        assert!(both.contains(&Cell::new(7, 0)));
        assert!(both.iter().all(|b| k.u_addable().contains(b)));
        // The five-row reading of the outer partition drops the last box.
        let short = sk(&[5, 5, 5, 3, 1], &[3, 2, 2]);
        assert_eq!(short.size(), 12);
        assert_eq!(short.render_contents(4), "...78\n..567\n..456\n123..\n0....\n");
    }

    #[test]
    fn domino_boxes() {
        let d = sk(&[2], &[]);
        let add = d.d_addable();
        let adjacent: Vec<Cell> =
            add.iter().copied().filter(|b| d.cells().iter().any(|c| c.is_adjacent(*b))).collect();
        assert_eq!(contents(&adjacent, 0), vec![-1, 2]);
        assert!(add.iter().all(|b| (-2..=3).contains(&b.content())));
        assert_eq!(d.u_removable(), vec![Cell::new(1, 1)]);
        assert_eq!(d.d_removable(), vec![Cell::new(1, 2)]);
        assert_eq!(SkewDiagram::empty().d_addable_in(0, 0), vec![Cell::new(1, 1)]);
    }

    #[test]
    fn component_examples() {
        assert_eq!(sk(&[2], &[]).components().len(), 1);
        let comps = sk(&[3, 1], &[2]).components();
        assert_eq!(comps.len(), 2);
        assert_eq!(comps[0].cells(), vec![Cell::new(1, 3)]);
        assert_eq!(comps[1].cells(), vec![Cell::new(2, 1)]);
        assert!(SkewDiagram::empty().components().is_empty());
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(sk(&[2], &[]).conjugate(), sk(&[1, 1], &[]));
        let stair = sk(&[3, 2], &[1]);
        assert_eq!(stair.conjugate(), sk(&[2, 2, 1], &[1]));
        assert_eq!(stair.conjugate().conjugate(), stair);
        assert_eq!(SkewDiagram::empty().conjugate(), SkewDiagram::empty());
    }

    #[test]
    fn rows_validation() {
        assert!(SkewDiagram::from_rows(vec![(1, 2), (0, 1)]).is_ok());
        assert!(SkewDiagram::from_rows(vec![(3, 5), (3, 3), (0, 2)]).is_ok());
        assert!(SkewDiagram::from_rows(vec![(3, 5), (2, 2), (0, 2)]).is_err());
        assert!(SkewDiagram::from_rows(vec![(0, 1), (0, 2)]).is_err());
        assert!(SkewDiagram::from_rows(vec![(1, 2)]).is_err());
        assert!(SkewDiagram::from_rows(vec![(3, 5), (3, 3), (0, 4)]).is_err());
    }

    #[test]
    fn convexity() {
        let c = |v: &[(i32, i32)]| v.iter().map(|&(i, j)| Cell::new(i, j)).collect::<Vec<_>>();
        assert!(is_skew_cells(&c(&[(1, 2), (2, 1)])));
        assert!(!is_skew_cells(&c(&[(1, 1), (2, 2)])));
        assert!(is_skew_cells(&c(&[(1, 5), (3, 1)])));
        assert!(!is_skew_cells(&c(&[(1, 2), (3, 2)])));
        assert!(!is_skew_cells(&c(&[(1, 1), (1, 3)])));
    }

    #[test]
    fn text_round_trip() {
        let k = sk(&[5, 5, 5, 3, 1, 1], &[3, 2, 2]);
        let text = k.to_string();
        assert_eq!(text, "1:4..5;2:3..5;3:3..5;4:1..3;5:1..1;6:1..1");
        assert_eq!(text.parse::<SkewDiagram>().unwrap(), k);
        let gap = sk(&[3, 1], &[2]);
        assert_eq!(gap.to_string(), "1:3..3;2:1..1");
        assert_eq!("[3,1]/[2]".parse::<SkewDiagram>().unwrap(), gap);
        assert_eq!("5:7..8".parse::<SkewDiagram>().unwrap(), sk(&[2], &[]));
        assert_eq!("empty".parse::<SkewDiagram>().unwrap(), SkewDiagram::empty());
        assert_eq!(SkewDiagram::empty().to_string(), "empty");
        assert!("1:1..1;2:2..2".parse::<SkewDiagram>().is_err());
        assert!(matches!("1:1..2;x".parse::<SkewDiagram>(), Err(Error::Parse { pos: 7, .. })));
    }

    #[test]
    fn render_gaps() {
        assert_eq!(sk(&[3, 1], &[2]).render(), "..#\n#..\n");
        assert_eq!(
            SkewDiagram::from_rows(vec![(2, 3), (2, 2), (0, 1)]).unwrap().render(),
            "..#\n...\n#..\n"
        );
        assert_eq!(SkewDiagram::empty().render(), "");
    }
}
