//! The push-down and extend operators on skew diagrams with a fixed content
//! normalisation, the closures Υ and Ῡ they generate from ∅, and the
//! harness comparing Υ, Ῡ and Γ over a bounded universe.
//!
//! 𝐏_q moves the bottom q-box of a diagram down its diagonal by adding a
//! d-addable q-box `b1` and removing a u-removable q-box `b2`. 𝐄_q adds a
//! u-addable (q-1)-box `b2` and then a d-addable q-box `b1`. The barred
//! operators additionally require the result to have no d-addable (q+1)-box
//! (for 𝐏̄_q) or (q-1)-box (for 𝐄̄_q).

use std::collections::HashMap;
use std::fmt;

use crate::exec::Exec;
use crate::partitions::Cell;
use crate::skew::{addable_positions, canonicalize, d_free, is_gamma, is_removable, u_free};
use crate::skew::{universe, SkewDiagram};

/// A skew diagram with a chosen content normalisation: the box in canonical
/// position `(i, j)` has content `content_offset + j - i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AnchoredSkew {
    pub diagram: SkewDiagram,
    pub content_offset: i32,
}

impl AnchoredSkew {
    pub fn new(diagram: SkewDiagram, content_offset: i32) -> Self {
        AnchoredSkew { diagram, content_offset }
    }

    pub fn empty() -> Self {
        AnchoredSkew::new(SkewDiagram::empty(), 0)
    }

    /// Anchors `diagram` so that its smallest content is `min_content`.
    pub fn with_min_content(diagram: SkewDiagram, min_content: i32) -> Self {
        let lo = diagram.content_range().map_or(0, |(lo, _)| lo);
        AnchoredSkew::new(diagram, min_content - lo)
    }

    pub fn content(&self, cell: Cell) -> i32 {
        self.content_offset + cell.content()
    }

    pub fn content_range(&self) -> Option<(i32, i32)> {
        self.diagram
            .content_range()
            .map(|(lo, hi)| (lo + self.content_offset, hi + self.content_offset))
    }

    fn from_cells(cells: &[Cell], content_offset: i32) -> Self {
        let c = canonicalize(cells).expect("operators preserve skew shapes");
        AnchoredSkew::new(c.diagram, content_offset + c.col_shift - c.row_shift)
    }
}

impl fmt::Display for AnchoredSkew {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}@{}", self.diagram, self.content_offset)
    }
}

/// 𝐏_q. `None` stands for the value ∅ the operator takes when the required
/// boxes do not exist.
pub fn op_p(k: &AnchoredSkew, q: i32) -> Option<AnchoredSkew> {
    let cells = k.diagram.cells();
    let c = q - k.content_offset;
    if !cells.iter().any(|b| b.content() == c) {
        return None;
    }
    let mut out = None;
    for b1 in addable_positions(&cells, c) {
        if !d_free(&cells, b1) {
            continue;
        }
        let mut grown = cells.clone();
        grown.push(b1);
        for &b2 in &cells {
            if b2.content() == c && u_free(&grown, b2) && is_removable(&grown, b2) {
                let moved: Vec<Cell> = grown.iter().copied().filter(|&x| x != b2).collect();
                let result = AnchoredSkew::from_cells(&moved, k.content_offset);
                debug_assert!(out.as_ref().is_none_or(|o| o == &result));
                out = Some(result);
            }
        }
    }
    out
}

/// 𝐄_q. On diagrams without (q-1)-boxes the u-addable box `b2` can be placed
/// in several detached positions, so all outcomes are returned, sorted.
pub fn op_e(k: &AnchoredSkew, q: i32) -> Vec<AnchoredSkew> {
    let cells = k.diagram.cells();
    let c = q - k.content_offset;
    let mut out = Vec::new();
    for b2 in addable_positions(&cells, c - 1) {
        if !u_free(&cells, b2) {
            continue;
        }
        let mut grown = cells.clone();
        grown.push(b2);
        for b1 in addable_positions(&grown, c) {
            if d_free(&grown, b1) {
                let mut full = grown.clone();
                full.push(b1);
                out.push(AnchoredSkew::from_cells(&full, k.content_offset));
            }
        }
    }
    out.sort();
    out.dedup();
    out
}

fn has_d_addable(k: &AnchoredSkew, content: i32) -> bool {
    let cells = k.diagram.cells();
    addable_positions(&cells, content - k.content_offset).into_iter().any(|b| d_free(&cells, b))
}

/// 𝐏̄_q: 𝐏_q when its result has no d-addable (q+1)-box, else ∅.
pub fn op_pbar(k: &AnchoredSkew, q: i32) -> Option<AnchoredSkew> {
    op_p(k, q).filter(|r| !has_d_addable(r, q + 1))
}

/// 𝐄̄_q: the outcomes of 𝐄_q without a d-addable (q-1)-box.
pub fn op_ebar(k: &AnchoredSkew, q: i32) -> Vec<AnchoredSkew> {
    op_e(k, q).into_iter().filter(|r| !has_d_addable(r, q - 1)).collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Operator {
    P,
    E,
    PBar,
    EBar,
}

impl fmt::Display for Operator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Operator::P => "P",
            Operator::E => "E",
            Operator::PBar => "Pbar",
            Operator::EBar => "Ebar",
        })
    }
}

/// How a member was first reached: `diagram = op_q(parent)` with the parent
/// anchored at offset 0.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Step {
    pub parent: SkewDiagram,
    pub op: Operator,
    pub q: i32,
}

/// A bounded closure under the operators.
#[derive(Clone, Debug, Default)]
pub struct Generation {
    /// Members sorted by size and then by rows.
    pub members: Vec<SkewDiagram>,
    /// For every nonempty member, the first step that produced it.
    pub steps: HashMap<SkewDiagram, Step>,
}

impl Generation {
    pub fn contains(&self, k: &SkewDiagram) -> bool {
        self.members.binary_search(k).is_ok()
    }
}

/// All successors of `k` (anchored at offset 0) that stay within the bounds,
/// in a fixed order.
fn successors(
    k: &SkewDiagram,
    max_size: u32,
    max_span: i32,
    barred: bool,
) -> Vec<(SkewDiagram, Step)> {
    let anchored = AnchoredSkew::new(k.clone(), 0);
    let mut out = Vec::new();
    let step = |op, q| Step { parent: k.clone(), op, q };
    let (p_op, e_op) =
        if barred { (Operator::PBar, Operator::EBar) } else { (Operator::P, Operator::E) };
    let range = k.content_range();
    if let Some((lo, hi)) = range {
        for q in lo..=hi {
            let result = if barred { op_pbar(&anchored, q) } else { op_p(&anchored, q) };
            if let Some(r) = result {
                out.push((r.diagram, step(p_op, q)));
            }
        }
    }
    if k.size() + 2 <= max_size {
        // Both new boxes must stay within the span bound: q - 1 >= hi - S and
        // q <= lo + S. From ∅ every q gives a translate of the same domino.
        let (from, to) = match range {
            Some((lo, hi)) => (hi - max_span + 1, lo + max_span),
            None => (1, 1),
        };
        for q in from..=to {
            let results = if barred { op_ebar(&anchored, q) } else { op_e(&anchored, q) };
            for r in results {
                out.push((r.diagram, step(e_op, q)));
            }
        }
    }
    out.retain(|(d, _)| d.span() <= max_span);
    out
}

/// The members of Υ (or Ῡ when `barred`) with at most `max_size` boxes and
/// span at most `max_span`, by breadth-first closure from ∅.
///
/// Each breadth-first level is expanded through `exec`, and new members are
/// merged in frontier order, so the result, including the recorded steps,
/// does not depend on scheduling.
pub fn generate_upsilon(max_size: u32, max_span: u32, barred: bool, exec: Exec) -> Generation {
    let max_span = max_span as i32;
    let mut steps: HashMap<SkewDiagram, Step> = HashMap::new();
    let mut members = vec![SkewDiagram::empty()];
    let mut frontier = vec![SkewDiagram::empty()];
    while !frontier.is_empty() {
        let expanded = exec.map(&frontier, |k| successors(k, max_size, max_span, barred));
        let mut next = Vec::new();
        for succ in expanded {
            for (d, step) in succ {
                if d.is_empty() || steps.contains_key(&d) {
                    continue;
                }
                steps.insert(d.clone(), step);
                next.push(d);
            }
        }
        next.sort();
        members.extend(next.iter().cloned());
        frontier = next;
    }
    members.sort();
    Generation { members, steps }
}

/// A diagram on which the three membership tests disagree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Disagreement {
    pub diagram: SkewDiagram,
    pub in_gamma: bool,
    pub in_upsilon: bool,
    pub in_upsilon_bar: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EquivalenceReport {
    pub max_size: u32,
    pub max_span: u32,
    /// Number of canonical diagrams examined, ∅ included.
    pub universe: usize,
    pub gamma: usize,
    pub upsilon: usize,
    pub upsilon_bar: usize,
    /// Connected nonempty members of Γ.
    pub connected_gamma: usize,
    pub disagreements: Vec<Disagreement>,
}

impl EquivalenceReport {
    pub fn is_consistent(&self) -> bool {
        self.disagreements.is_empty()
            && self.gamma == self.upsilon
            && self.upsilon == self.upsilon_bar
    }
}

impl fmt::Display for EquivalenceReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "max-size {} max-span {}", self.max_size, self.max_span)?;
        writeln!(f, "universe {}", self.universe)?;
        writeln!(f, "gamma {}", self.gamma)?;
        writeln!(f, "upsilon {}", self.upsilon)?;
        writeln!(f, "upsilon-bar {}", self.upsilon_bar)?;
        writeln!(f, "connected-gamma {}", self.connected_gamma)?;
        write!(f, "disagreements {}", self.disagreements.len())?;
        for d in &self.disagreements {
            write!(
                f,
                "\n  {} gamma={} upsilon={} upsilon-bar={}",
                d.diagram, d.in_gamma, d.in_upsilon, d.in_upsilon_bar
            )?;
        }
        Ok(())
    }
}

/// Compares Γ, Υ and Ῡ on every canonical diagram with at most `max_size`
/// boxes and span at most `max_span`.
pub fn equivalence_report(max_size: u32, max_span: u32, exec: Exec) -> EquivalenceReport {
    let all = universe(max_size, max_span, exec);
    let verdicts = exec.map(&all, is_gamma);
    let upsilon = generate_upsilon(max_size, max_span, false, exec);
    let upsilon_bar = generate_upsilon(max_size, max_span, true, exec);
    let mut disagreements = Vec::new();
    let mut gamma = 0;
    let mut connected_gamma = 0;
    for (k, &g) in all.iter().zip(&verdicts) {
        let u = upsilon.contains(k);
        let ub = upsilon_bar.contains(k);
        if g {
            gamma += 1;
            if !k.is_empty() && k.is_connected() {
                connected_gamma += 1;
            }
        }
        if g != u || u != ub {
            disagreements.push(Disagreement {
                diagram: k.clone(),
                in_gamma: g,
                in_upsilon: u,
                in_upsilon_bar: ub,
            });
        }
    }
    // Everything generated lies in the universe by construction; anything
    // else would be an internal error worth surfacing as a disagreement.
    for (gen, barred) in [(&upsilon, false), (&upsilon_bar, true)] {
        for k in &gen.members {
            if all.binary_search(k).is_err() {
                disagreements.push(Disagreement {
                    diagram: k.clone(),
                    in_gamma: is_gamma(k),
                    in_upsilon: !barred || upsilon.contains(k),
                    in_upsilon_bar: barred || upsilon_bar.contains(k),
                });
            }
        }
    }
    EquivalenceReport {
        max_size,
        max_span,
        universe: all.len(),
        gamma,
        upsilon: upsilon.members.len(),
        upsilon_bar: upsilon_bar.members.len(),
        connected_gamma,
        disagreements,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::Partition;

    fn sk(outer: &[u32], inner: &[u32]) -> SkewDiagram {
        SkewDiagram::from_pair(
            &Partition::new(outer.to_vec()).unwrap(),
            &Partition::new(inner.to_vec()).unwrap(),
        )
        .unwrap()
    }

    /// Anchors a diagram by the content of its smallest-content box.
    fn at(outer: &[u32], inner: &[u32], min_content: i32) -> AnchoredSkew {
        AnchoredSkew::with_min_content(sk(outer, inner), min_content)
    }

    #[test]
    fn extend_examples() {
        let domino = at(&[2], &[], 0);
        assert_eq!(op_e(&AnchoredSkew::empty(), 1), vec![domino.clone()]);
        assert_eq!(op_ebar(&AnchoredSkew::empty(), 1), vec![domino.clone()]);
        let stair = at(&[3, 2], &[1], 0);
        assert_eq!(op_e(&domino, 3), vec![stair.clone()]);
        assert!(op_ebar(&domino, 3).is_empty());
        let low = at(&[3, 2], &[1], -2);
        assert_eq!(op_e(&domino, -1), vec![low.clone()]);
        assert_eq!(op_ebar(&domino, -1), vec![low]);
        for q in -6..=8 {
            if q == 3 || q == -1 {
                continue;
            }
            for r in op_e(&domino, q) {
                let comps = r.diagram.components();
                assert_eq!(comps.len(), 2, "E_{q}");
                assert!(comps.iter().all(|c| c.diagram == sk(&[2], &[])));
            }
        }
    }

    #[test]
    fn push_down_examples() {
        let stair = at(&[3, 2], &[1], 0);
        let hook = at(&[3, 3], &[2], 0);
        assert_eq!(op_p(&stair, 2), Some(hook.clone()));
        assert_eq!(op_pbar(&stair, 2), Some(hook.clone()));
        for q in -6..=8 {
            if q != 2 {
                assert_eq!(op_p(&stair, q), None, "P_{q}");
            }
            assert_eq!(op_p(&hook, q), None, "P_{q}");
        }
    }

    #[test]
    fn further_extend_examples() {
        let stair = at(&[3, 2], &[1], 0);
        let hook = at(&[3, 3], &[2], 0);
        assert_eq!(op_e(&hook, 5), vec![at(&[4, 3, 3], &[2, 2], 0)]);
        assert_eq!(op_ebar(&hook, -1), vec![at(&[4, 4, 2], &[3, 1], -2)]);
        assert_eq!(op_e(&stair, 5), vec![at(&[4, 3, 2], &[2, 1], 0)]);
        assert!(op_ebar(&stair, 5).is_empty());
        // The block gains boxes of contents 1 and 2, so it is reached by E_2.
        assert_eq!(op_e(&stair, 2), vec![at(&[3, 3], &[], 0)]);
        assert_eq!(op_ebar(&stair, 2), vec![at(&[3, 3], &[], 0)]);
        assert!(op_e(&stair, 1).is_empty());
        assert_eq!(op_e(&stair, -1), vec![at(&[4, 3, 2], &[2, 1], -2)]);
        assert_eq!(op_ebar(&stair, -1), vec![at(&[4, 3, 2], &[2, 1], -2)]);
    }

    #[test]
    fn small_generations() {
        let zero = generate_upsilon(0, 0, false, Exec::Sequential);
        assert_eq!(zero.members, vec![SkewDiagram::empty()]);
        for barred in [false, true] {
            let two = generate_upsilon(2, 2, barred, Exec::Sequential);
            assert_eq!(two.members, vec![SkewDiagram::empty(), sk(&[2], &[])]);
        }
    }

    #[test]
    fn six_box_equivalence() {
        let report = equivalence_report(6, 6, Exec::Sequential);
        assert!(report.is_consistent(), "{report}");
        assert_eq!(report.connected_gamma, 9);
        assert_eq!(report.universe, 507);
        let trivial = equivalence_report(0, 0, Exec::Sequential);
        assert_eq!((trivial.universe, trivial.gamma, trivial.upsilon), (1, 1, 1));
    }

    #[test]
    fn steps_replay() {
        for barred in [false, true] {
            let g = generate_upsilon(6, 8, barred, Exec::Sequential);
            for k in g.members.iter().filter(|k| !k.is_empty()) {
                let s = &g.steps[k];
                let parent = AnchoredSkew::new(s.parent.clone(), 0);
                let outcomes: Vec<SkewDiagram> = match s.op {
                    Operator::P => op_p(&parent, s.q).into_iter().map(|r| r.diagram).collect(),
                    Operator::PBar => {
                        op_pbar(&parent, s.q).into_iter().map(|r| r.diagram).collect()
                    }
                    Operator::E => op_e(&parent, s.q).into_iter().map(|r| r.diagram).collect(),
                    Operator::EBar => {
                        op_ebar(&parent, s.q).into_iter().map(|r| r.diagram).collect()
                    }
                };
                assert!(outcomes.contains(k));
                assert!(g.contains(&s.parent));
            }
        }
    }
}
