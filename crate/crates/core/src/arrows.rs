//! Weight diagrams, arrow pairs and flip sets.
//!
//! The weight diagram of a partition `λ` colours the integers: position
//! `λ_i - (i - 1)` is black for every `i ≥ 1` (with `λ_i = 0` past the
//! length) and every other position is white. Far left is all black, far
//! right all white, so a finite window describes the whole diagram.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::partitions::{label_order, Partition};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WeightDiagram {
    lo: i32,
    hi: i32,
    black: BTreeSet<i32>,
}

/// A white position `source` left of a black position `target`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ArrowPair {
    pub source: i32,
    pub target: i32,
}

impl ArrowPair {
    pub fn new(source: i32, target: i32) -> Self {
        ArrowPair { source, target }
    }

    /// Both ends of `self` lie strictly between the ends of `outer`.
    pub fn is_nested_in(&self, outer: &ArrowPair) -> bool {
        outer.source < self.source && self.target < outer.target
    }

    /// The two intervals do not overlap.
    pub fn is_disjoint_from(&self, other: &ArrowPair) -> bool {
        self.target < other.source || other.target < self.source
    }
}

impl fmt::Display for ArrowPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} -> {}", self.source, self.target)
    }
}

impl WeightDiagram {
    /// Builds a diagram from its black positions inside `[lo, hi]`. Positions
    /// below `lo` are black and positions above `hi` white.
    pub fn new(lo: i32, hi: i32, black: BTreeSet<i32>) -> Result<Self> {
        if lo > hi {
            return Err(Error::InvalidWeight(format!("empty window [{lo}, {hi}]")));
        }
        if let Some(x) = black.iter().find(|&&x| x < lo || x > hi) {
            return Err(Error::InvalidWeight(format!("black position {x} outside [{lo}, {hi}]")));
        }
        Ok(WeightDiagram { lo, hi, black })
    }

    pub fn window(&self) -> (i32, i32) {
        (self.lo, self.hi)
    }

    pub fn is_black(&self, x: i32) -> bool {
        x < self.lo || (x <= self.hi && self.black.contains(&x))
    }

    /// Number of black positions in `[from, to]`.
    pub fn blacks_in(&self, from: i32, to: i32) -> i32 {
        if from > to {
            return 0;
        }
        let below = (to.min(self.lo - 1) - from + 1).max(0);
        let (a, b) = (from.max(self.lo), to.min(self.hi));
        let inside = if a <= b { self.black.range(a..=b).count() as i32 } else { 0 };
        below + inside
    }

    /// The same colouring described over a wider window.
    pub fn widened(&self, lo: i32, hi: i32) -> WeightDiagram {
        let (lo, hi) = (lo.min(self.lo), hi.max(self.hi));
        let black = (lo..=hi).filter(|&x| self.is_black(x)).collect();
        WeightDiagram { lo, hi, black }
    }

    /// Every wb pair: a white position left of a black one. All of them lie
    /// inside the window.
    pub fn wb_pairs(&self) -> Vec<ArrowPair> {
        let mut out = Vec::new();
        for i in self.lo..=self.hi {
            if self.is_black(i) {
                continue;
            }
            for &j in self.black.range(i + 1..) {
                out.push(ArrowPair::new(i, j));
            }
        }
        out
    }

    /// hw-condition: `[source, target]` holds exactly one more white than
    /// black position. d-condition: every prefix `[source + 1, c]` with
    /// `c < target` holds at least as many white as black positions.
    pub fn is_arrow_pair(&self, pair: ArrowPair) -> bool {
        let ArrowPair { source: i, target: j } = pair;
        if i >= j || self.is_black(i) || !self.is_black(j) {
            return false;
        }
        let black = self.blacks_in(i, j);
        if (j - i + 1) - black != black + 1 {
            return false;
        }
        let mut balance = 0;
        for c in i + 1..j {
            balance += if self.is_black(c) { -1 } else { 1 };
            if balance < 0 {
                return false;
            }
        }
        true
    }

    pub fn arrow_pairs(&self) -> Vec<ArrowPair> {
        self.wb_pairs().into_iter().filter(|&p| self.is_arrow_pair(p)).collect()
    }

    /// Exchanges the colours of a wb pair.
    pub fn flip(&self, pair: ArrowPair) -> Result<WeightDiagram> {
        let ArrowPair { source, target } = pair;
        if source >= target || self.is_black(source) || !self.is_black(target) {
            return Err(Error::NotWbPair { white: source, black: target });
        }
        let mut w = self.widened(source, target);
        w.black.remove(&target);
        w.black.insert(source);
        Ok(w)
    }

    /// The colouring of the conjugate partition: reflect through the midpoint
    /// of 0 and 1, then swap the colours.
    pub fn reflected(&self) -> WeightDiagram {
        let (lo, hi) = (1 - self.hi, 1 - self.lo);
        let black = (lo..=hi).filter(|&x| !self.is_black(1 - x)).collect();
        WeightDiagram { lo, hi, black }
    }

    /// A ruler line, a line of `x` (black) and `o` (white), and one line per
    /// arrow pair.
    pub fn render(&self) -> String {
        let mut ruler = String::new();
        let mut dots = String::new();
        for x in self.lo..=self.hi {
            ruler.push_str(&format!("{x:>4}"));
            dots.push_str(&format!("{:>4}", if self.is_black(x) { 'x' } else { 'o' }));
        }
        let mut out = format!("{ruler}\n{dots}\n");
        for a in self.arrow_pairs() {
            out.push_str(&format!("{a}\n"));
        }
        out
    }
}

pub fn weight_of_partition(p: &Partition) -> WeightDiagram {
    let n = p.size() as i32;
    let (lo, hi) = (-n - 2, n + 2);
    let len = p.len() as i32;
    let black = (1..=len.max(0) + n + 3)
        .map(|i| p.part(i as usize) as i32 - (i - 1))
        .filter(|&x| x >= lo)
        .collect();
    WeightDiagram { lo, hi, black }
}

/// The partition whose weight diagram is `w`. The diagram must have exactly
/// `1 - lo` black positions in its window, otherwise its tails do not come
/// from a partition.
pub fn partition_of_weight(w: &WeightDiagram) -> Result<Partition> {
    let count = w.black.len() as i32;
    if count != 1 - w.lo {
        return Err(Error::InvalidWeight(format!(
            "{count} black positions in [{}, {}], expected {}",
            w.lo,
            w.hi,
            1 - w.lo
        )));
    }
    let parts: Vec<u32> = w
        .black
        .iter()
        .rev()
        .enumerate()
        .map(|(i, &b)| (b + i as i32) as u32)
        .filter(|&v| v > 0)
        .collect();
    Partition::new(parts)
}

/// Π(p): every partition reached by flipping a set of arrow pairs of `x_p`
/// with pairwise distinct sources, the empty set included. Sorted in
/// [`label_order`].
pub fn pi_set(p: &Partition) -> Vec<Partition> {
    let w = weight_of_partition(p);
    let arrows = w.arrow_pairs();
    let mut by_source: Vec<Vec<ArrowPair>> = Vec::new();
    for a in arrows {
        match by_source.last_mut() {
            Some(group) if group[0].source == a.source => group.push(a),
            _ => by_source.push(vec![a]),
        }
    }
    let mut found: BTreeSet<Partition> = BTreeSet::new();
    fn choose(
        w: &WeightDiagram,
        groups: &[Vec<ArrowPair>],
        picked: &mut Vec<ArrowPair>,
        found: &mut BTreeSet<Partition>,
    ) {
        let Some((group, rest)) = groups.split_first() else {
            let mut current = w.clone();
            for &a in picked.iter() {
                match current.flip(a) {
                    Ok(next) => current = next,
                    Err(_) => return,
                }
            }
            if let Ok(p) = partition_of_weight(&current) {
                found.insert(p);
            }
            return;
        };
        choose(w, rest, picked, found);
        for &a in group {
            picked.push(a);
            choose(w, rest, picked, found);
            picked.pop();
        }
    }
    choose(&w, &by_source, &mut Vec::new(), &mut found);
    let mut out: Vec<Partition> = found.into_iter().collect();
    out.sort_by(label_order);
    out
}

/// Hook statistics predicted from dot counts for a flip of `x_mu`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FlipPrediction {
    /// The partition after the flip.
    pub lambda: Partition,
    pub ht: u32,
    pub wd: u32,
    /// Content and anticontent of the minimal box.
    pub min_content: i32,
    pub min_anticontent: i32,
    /// Anticontent of the box of content `min_content + i`, for each `i`.
    pub profile: Vec<i32>,
}

/// Flips `pair` in `x_mu` and predicts the removed rim hook from dot counts.
pub fn rim_hook_of_flip(mu: &Partition, pair: ArrowPair) -> Result<FlipPrediction> {
    let w = weight_of_partition(mu);
    let lambda = partition_of_weight(&w.flip(pair)?)?;
    let ArrowPair { source: lw, target: lb } = pair;
    let ht = w.blacks_in(lw, lb);
    let wd = lb - lw - ht + 1;
    let row = w.blacks_in(lb + 1, w.hi) + ht;
    let a = 2 * row + lw;
    let profile = (0..ht + wd - 1).map(|i| a + i - 2 * w.blacks_in(lw + 1, lw + i)).collect();
    Ok(FlipPrediction {
        lambda,
        ht: ht as u32,
        wd: wd as u32,
        min_content: lw,
        min_anticontent: a,
        profile,
    })
}

/// The same statistics measured on the boxes of `mu / lambda`, which must be
/// a rim hook. `None` if it is not.
pub fn observed_hook(mu: &Partition, lambda: &Partition) -> Option<FlipPrediction> {
    if !lambda.is_contained_in(mu) {
        return None;
    }
    let mut cells: Vec<_> = mu.cells().filter(|&c| !lambda.contains_cell(c)).collect();
    cells.sort_by_key(|c| c.content());
    let first = *cells.first()?;
    if cells.iter().enumerate().any(|(i, c)| c.content() != first.content() + i as i32) {
        return None;
    }
    let rows: BTreeSet<i32> = cells.iter().map(|c| c.row).collect();
    let cols: BTreeSet<i32> = cells.iter().map(|c| c.col).collect();
    Some(FlipPrediction {
        lambda: lambda.clone(),
        ht: rows.len() as u32,
        wd: cols.len() as u32,
        min_content: first.content(),
        min_anticontent: first.anticontent(),
        profile: cells.iter().map(|c| c.anticontent()).collect(),
    })
}
