//! Hooks, rim-hook coverings and the Γ membership test.

use std::collections::{BTreeMap, HashSet};

use super::{canonicalize, cell_components, is_skew_cells, SkewDiagram};
use crate::error::{Error, Result};
use crate::partitions::Cell;

/// A connected skew diagram in which no two boxes share a content.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Hook {
    diagram: SkewDiagram,
    ht: u32,
    wd: u32,
}

impl Hook {
    pub fn new(diagram: SkewDiagram) -> Result<Self> {
        if diagram.is_empty() {
            return Err(Error::NotAHook("the empty diagram".into()));
        }
        let cells = diagram.cells();
        let contents: HashSet<i32> = cells.iter().map(|c| c.content()).collect();
        if contents.len() != cells.len() {
            return Err(Error::NotAHook(format!("{diagram} repeats a content")));
        }
        if !diagram.is_connected() {
            return Err(Error::NotAHook(format!("{diagram} is not connected")));
        }
        let ht = diagram.height() as u32;
        let wd = diagram.width() as u32;
        debug_assert_eq!(diagram.size(), ht + wd - 1);
        Ok(Hook { diagram, ht, wd })
    }

    pub fn diagram(&self) -> &SkewDiagram {
        &self.diagram
    }

    pub fn ht(&self) -> u32 {
        self.ht
    }

    pub fn wd(&self) -> u32 {
        self.wd
    }

    pub fn size(&self) -> u32 {
        self.diagram.size()
    }

    /// The box of smallest content: first column of the last row.
    pub fn minimal_box(&self) -> Cell {
        Cell::new(self.ht as i32, 1)
    }

    /// The box of largest content: last column of the first row.
    pub fn maximal_box(&self) -> Cell {
        Cell::new(1, self.wd as i32)
    }

    /// Width is height plus one.
    pub fn satisfies_hw(&self) -> bool {
        self.wd == self.ht + 1
    }

    /// The minimal box has the smallest anticontent in the hook.
    pub fn satisfies_d(&self) -> bool {
        let a = self.minimal_box().anticontent();
        self.diagram.cells().iter().all(|c| c.anticontent() >= a)
    }
}

/// A hook fixed in space: its boxes in the ambient frame.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlacedHook {
    pub hook: Hook,
    pub cells: Vec<Cell>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Covering {
    pub hooks: Vec<PlacedHook>,
}

impl Covering {
    /// True if the hooks partition `cells` and every pair is disjoint or
    /// nested.
    pub fn is_valid_for(&self, cells: &[Cell]) -> bool {
        let mut seen = HashSet::new();
        for h in &self.hooks {
            for c in &h.cells {
                if !seen.insert(*c) {
                    return false;
                }
            }
        }
        let ambient: HashSet<Cell> = cells.iter().copied().collect();
        if seen != ambient {
            return false;
        }
        pairwise_compatible(&self.hooks.iter().map(|h| h.cells.clone()).collect::<Vec<_>>())
    }

    /// Cell sets sorted so that two coverings compare equal exactly when they
    /// consist of the same placed hooks.
    pub fn normalized_cells(&self) -> Vec<Vec<Cell>> {
        let mut v: Vec<Vec<Cell>> = self
            .hooks
            .iter()
            .map(|h| {
                let mut c = h.cells.clone();
                c.sort();
                c
            })
            .collect();
        v.sort();
        v
    }
}

fn pairwise_compatible(hooks: &[Vec<Cell>]) -> bool {
    hooks
        .iter()
        .enumerate()
        .all(|(i, a)| hooks[i + 1..].iter().all(|b| disjoint(a, b) || nested(a, b) || nested(b, a)))
}

/// No box of `a` shares a side with a box of `b`.
pub fn disjoint(a: &[Cell], b: &[Cell]) -> bool {
    !a.iter().any(|x| b.iter().any(|y| x.is_adjacent(*y)))
}

/// `inner` is nested in `outer`: the lower and right side of every box of
/// `inner` is shared with a box of `inner` or `outer`.
pub fn nested(inner: &[Cell], outer: &[Cell]) -> bool {
    let has = |c: Cell| inner.contains(&c) || outer.contains(&c);
    inner.iter().all(|x| has(x.shifted(1, 0)) && has(x.shifted(0, 1)))
}

/// The covering by outer rim hooks: from each component keep the right-most
/// box of every content, then recurse on what is left.
pub fn covering(k: &SkewDiagram) -> Covering {
    let mut hooks = Vec::new();
    let mut work = vec![k.cells()];
    while let Some(cells) = work.pop() {
        for comp in cell_components(&cells) {
            let mut outer: BTreeMap<i32, Cell> = BTreeMap::new();
            for &c in &comp {
                let e = outer.entry(c.content()).or_insert(c);
                if c.col > e.col {
                    *e = c;
                }
            }
            let rim: Vec<Cell> = outer.into_values().collect();
            let rest: Vec<Cell> = comp.iter().copied().filter(|c| !rim.contains(c)).collect();
            let diagram = canonicalize(&rim).expect("an outer rim is a skew shape").diagram;
            let hook = Hook::new(diagram).expect("an outer rim is a hook");
            hooks.push(PlacedHook { hook, cells: rim });
            if !rest.is_empty() {
                work.push(rest);
            }
        }
    }
    hooks.sort_by(|a, b| a.cells.cmp(&b.cells));
    Covering { hooks }
}

/// Membership in Γ₀: width is height plus one, and the minimal box has the
/// smallest anticontent in the hook.
pub fn is_gamma0(h: &Hook) -> bool {
    h.satisfies_hw() && h.satisfies_d()
}

/// Membership in Γ: every hook of the covering lies in Γ₀. ∅ is in Γ.
pub fn is_gamma(k: &SkewDiagram) -> bool {
    covering(k).hooks.iter().all(|h| is_gamma0(&h.hook))
}

/// Every decomposition of `k` into placed hooks that are pairwise disjoint
/// or nested, found by exhaustive search. Intended for small diagrams.
pub fn enumerate_coverings(k: &SkewDiagram) -> Vec<Vec<Vec<Cell>>> {
    let cells = k.cells();
    assert!(cells.len() < 64, "exhaustive covering search needs fewer than 64 boxes");
    let mut masks: Vec<u64> = Vec::new();
    hook_subsets(&cells, &mut masks);
    let hooks: Vec<(u64, Vec<Cell>)> = masks
        .into_iter()
        .map(|m| (m, (0..cells.len()).filter(|i| m >> i & 1 == 1).map(|i| cells[i]).collect()))
        .collect();
    struct Search<'a> {
        full: u64,
        hooks: &'a [(u64, Vec<Cell>)],
        chosen: Vec<usize>,
        results: Vec<Vec<Vec<Cell>>>,
    }
    impl Search<'_> {
        fn run(&mut self, covered: u64) {
            if covered == self.full {
                let mut hs: Vec<Vec<Cell>> =
                    self.chosen.iter().map(|&i| self.hooks[i].1.clone()).collect();
                hs.sort();
                self.results.push(hs);
                return;
            }
            // The lowest uncovered box must lie in the next hook.
            let first = (!covered).trailing_zeros();
            for (i, (mask, hook)) in self.hooks.iter().enumerate() {
                if mask >> first & 1 == 0 || mask & covered != 0 {
                    continue;
                }
                let compatible = self.chosen.iter().all(|&j| {
                    let other = &self.hooks[j].1;
                    disjoint(hook, other) || nested(hook, other) || nested(other, hook)
                });
                if compatible {
                    self.chosen.push(i);
                    self.run(covered | mask);
                    self.chosen.pop();
                }
            }
        }
    }
    let mut search = Search {
        full: (1u64 << cells.len()) - 1,
        hooks: &hooks,
        chosen: Vec::new(),
        results: Vec::new(),
    };
    search.run(0);
    let mut results = search.results;
    results.sort();
    results
}

/// All subsets of `cells` (as bitmasks) that are hooks: connected skew
/// shapes with pairwise distinct contents.
fn hook_subsets(cells: &[Cell], out: &mut Vec<u64>) {
    let mut seen = HashSet::new();
    for start in 0..cells.len() {
        let mut stack = vec![1u64 << start];
        while let Some(mask) = stack.pop() {
            if !seen.insert(mask) {
                continue;
            }
            let members: Vec<Cell> =
                (0..cells.len()).filter(|i| mask >> i & 1 == 1).map(|i| cells[i]).collect();
            if is_skew_cells(&members) {
                out.push(mask);
            }
            for (j, c) in cells.iter().enumerate() {
                if mask >> j & 1 == 0
                    && members.iter().any(|m| m.is_adjacent(*c))
                    && members.iter().all(|m| m.content() != c.content())
                {
                    stack.push(mask | 1 << j);
                }
            }
        }
    }
    out.sort();
}
