//! Exhaustive property checks tying the descriptions together. Each check
//! returns a [`CheckReport`] with the number of cases examined and the
//! failing cases, so callers can print a verdict and the first witness.

use std::collections::HashSet;
use std::fmt;

use crate::arrows::{observed_hook, pi_set, rim_hook_of_flip, weight_of_partition, ArrowPair};
use crate::exec::Exec;
use crate::multiplicities::{cell_matrix, prop_diff2_check};
use crate::partitions::{Cell, Partition};
use crate::procedures::{generate_upsilon, op_ebar, op_pbar, AnchoredSkew, Operator};
use crate::skew::{
    covering, enumerate_coverings, is_gamma, is_gamma0, is_skew_cells, nested, universe, Hook,
    SkewDiagram,
};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckReport {
    pub name: &'static str,
    pub cases: usize,
    pub failures: Vec<String>,
}

impl CheckReport {
    fn new(name: &'static str, cases: usize, failures: Vec<String>) -> Self {
        CheckReport { name, cases, failures }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = if self.passed() { "PASS" } else { "FAIL" };
        write!(
            f,
            "{verdict} {} ({} cases, {} failures)",
            self.name,
            self.cases,
            self.failures.len()
        )?;
        if let Some(first) = self.failures.first() {
            write!(f, "; first: {first}")?;
        }
        Ok(())
    }
}

/// Every partition contained in `mu`, the empty one included.
pub fn subpartitions(mu: &Partition) -> Vec<Partition> {
    fn go(mu: &[u32], i: usize, cap: u32, current: &mut Vec<u32>, out: &mut Vec<Partition>) {
        out.push(Partition::new(current.clone()).expect("weakly decreasing by construction"));
        if i == mu.len() {
            return;
        }
        for v in 1..=cap.min(mu[i]) {
            current.push(v);
            go(mu, i + 1, v, current, out);
            current.pop();
        }
    }
    let mut out = Vec::new();
    go(mu.parts(), 0, u32::MAX, &mut Vec::new(), &mut out);
    out
}

fn pair_skew(mu: &Partition, lam: &Partition) -> SkewDiagram {
    SkewDiagram::from_pair(mu, lam).expect("containment holds by construction")
}

/// For every diagram of the universe `(max_size, max_span)`, the covering
/// partitions the boxes into pairwise disjoint-or-nested hooks.
pub fn covering_validity(max_size: u32, max_span: u32, exec: Exec) -> CheckReport {
    let all = universe(max_size, max_span, exec);
    let failures = exec.flat_map(&all, |k| {
        let ok = covering(k).is_valid_for(&k.cells());
        if ok {
            vec![]
        } else {
            vec![format!("{k}")]
        }
    });
    CheckReport::new("covering validity", all.len(), failures)
}

/// Exhaustive search finds exactly one disjoint-or-nested hook decomposition
/// of every diagram of the universe, and it is the covering.
pub fn covering_uniqueness(max_size: u32, max_span: u32, exec: Exec) -> CheckReport {
    let all = universe(max_size, max_span, exec);
    let failures = exec.flat_map(&all, |k| {
        let found = enumerate_coverings(k);
        let expected = covering(k).normalized_cells();
        if found.len() == 1 && found[0] == expected {
            vec![]
        } else {
            vec![format!("{k}: {} decompositions", found.len())]
        }
    });
    CheckReport::new("covering uniqueness", all.len(), failures)
}

/// Every vertical domino `{(i, j), (i + 1, j)}` that can be added to `nu`
/// with no box of `nu` above it in its column or left of it in its rows.
/// Placements are searched in a margin of a few rows and one column around `nu`.
pub fn admissible_dominoes(nu: &SkewDiagram) -> Vec<(Cell, Cell)> {
    if nu.is_empty() {
        return vec![(Cell::new(1, 1), Cell::new(2, 1))];
    }
    let cells = nu.cells();
    let mut out = Vec::new();
    for i in -2..=nu.height() + 2 {
        for j in 0..=nu.width() + 1 {
            let (a, b) = (Cell::new(i, j), Cell::new(i + 1, j));
            if nu.contains(a) || nu.contains(b) {
                continue;
            }
            let blocked = cells.iter().any(|c| {
                ((c.row == a.row || c.row == b.row) && c.col < j) || (c.col == j && c.row < i)
            });
            if blocked {
                continue;
            }
            let mut grown = cells.clone();
            grown.extend([a, b]);
            if is_skew_cells(&grown) {
                out.push((a, b));
            }
        }
    }
    out
}

/// Adding an admissible vertical domino never keeps both diagrams in Γ.
pub fn domino_exclusion(max_size: u32, max_span: u32, exec: Exec) -> CheckReport {
    let all = universe(max_size, max_span, exec);
    let results = exec.map(&all, |nu| {
        let dominoes = admissible_dominoes(nu);
        let count = dominoes.len();
        if !is_gamma(nu) {
            return (count, vec![]);
        }
        let mut failures = Vec::new();
        for (a, b) in dominoes {
            let mut grown = nu.cells();
            grown.extend([a, b]);
            let kappa = SkewDiagram::from_cells(&grown).expect("checked skew");
            if is_gamma(&kappa) {
                failures.push(format!("{nu} + {a}{b}"));
            }
        }
        (count, failures)
    });
    let cases = results.iter().map(|r| r.0).sum();
    let failures = results.into_iter().flat_map(|r| r.1).collect();
    CheckReport::new("vertical domino exclusion", cases, failures)
}

fn partitions_up_to(max_n: u32) -> Vec<Partition> {
    let mut v = Partition::all_up_to(max_n);
    v.reverse();
    v
}

/// `λ ∈ Π(μ)` exactly when `λ ⊆ μ` and `μ/λ ∈ Γ`, for all `|μ| ≤ max_n`.
pub fn pi_matches_gamma(max_n: u32, exec: Exec) -> CheckReport {
    let mus = partitions_up_to(max_n);
    let results = exec.map(&mus, |mu| {
        let pi: HashSet<Partition> = pi_set(mu).into_iter().collect();
        let subs = subpartitions(mu);
        let mut failures = Vec::new();
        for lam in &subs {
            let in_pi = pi.contains(lam);
            let in_gamma = is_gamma(&pair_skew(mu, lam));
            if in_pi != in_gamma {
                failures.push(format!("mu={mu} lam={lam}: in Pi {in_pi}, in Gamma {in_gamma}"));
            }
        }
        for lam in &pi {
            if !lam.is_contained_in(mu) {
                failures.push(format!("mu={mu}: {lam} in Pi is not contained in mu"));
            }
        }
        (subs.len(), failures)
    });
    let cases = results.iter().map(|r| r.0).sum();
    let failures = results.into_iter().flat_map(|r| r.1).collect();
    CheckReport::new("flip set equals Gamma", cases, failures)
}

/// For every wb pair of `x_μ`: it is an arrow pair exactly when the removed
/// rim hook is in Γ₀, and the dot-count predictions of height, width and
/// anticontent profile match the hook.
pub fn arrows_match_gamma0(max_n: u32, exec: Exec) -> CheckReport {
    let mus = partitions_up_to(max_n);
    let results = exec.map(&mus, |mu| {
        let w = weight_of_partition(mu);
        let pairs = w.wb_pairs();
        let mut failures = Vec::new();
        for &pair in &pairs {
            let predicted = match rim_hook_of_flip(mu, pair) {
                Ok(p) => p,
                Err(e) => {
                    failures.push(format!("mu={mu} pair {pair}: {e}"));
                    continue;
                }
            };
            let Some(observed) = observed_hook(mu, &predicted.lambda) else {
                failures.push(format!("mu={mu} pair {pair}: removed boxes are not a rim hook"));
                continue;
            };
            if observed != predicted {
                failures.push(format!(
                    "mu={mu} pair {pair}: predicted {predicted:?}, observed {observed:?}"
                ));
            }
            let hook = Hook::new(pair_skew(mu, &predicted.lambda)).expect("rim hook");
            if w.is_arrow_pair(pair) != is_gamma0(&hook) {
                failures.push(format!(
                    "mu={mu} pair {pair}: arrow {} vs Gamma0 {}",
                    w.is_arrow_pair(pair),
                    is_gamma0(&hook)
                ));
            }
        }
        (pairs.len(), failures)
    });
    let cases = results.iter().map(|r| r.0).sum();
    let failures = results.into_iter().flat_map(|r| r.1).collect();
    CheckReport::new("arrow pairs equal Gamma0 hooks", cases, failures)
}

fn removed_cells(mu: &Partition, lam: &Partition) -> Vec<Cell> {
    mu.cells().filter(|&c| !lam.contains_cell(c)).collect()
}

/// Flipping two disjoint wb pairs removes disjoint rim hooks, and flipping
/// two nested pairs removes nested rim hooks.
pub fn flips_disjoint_or_nested(max_n: u32, exec: Exec) -> CheckReport {
    let mus = partitions_up_to(max_n);
    let results = exec.map(&mus, |mu| {
        let w = weight_of_partition(mu);
        let pairs = w.wb_pairs();
        let mut cases = 0;
        let mut failures = Vec::new();
        let flip_two = |first: ArrowPair, second: ArrowPair| -> Option<(Vec<Cell>, Vec<Cell>)> {
            let mid_w = w.flip(first).ok()?;
            let mid = crate::arrows::partition_of_weight(&mid_w).ok()?;
            let end = crate::arrows::partition_of_weight(&mid_w.flip(second).ok()?).ok()?;
            Some((removed_cells(mu, &mid), removed_cells(&mid, &end)))
        };
        for &a in &pairs {
            for &b in &pairs {
                if a.is_nested_in(&b) {
                    cases += 1;
                    match flip_two(b, a) {
                        Some((outer, inner)) if nested(&inner, &outer) => {}
                        _ => failures.push(format!("mu={mu}: {a} nested in {b}")),
                    }
                } else if a < b && a.source != b.source && a.is_disjoint_from(&b) {
                    cases += 1;
                    match flip_two(a, b) {
                        Some((x, y)) if crate::skew::disjoint(&x, &y) => {}
                        _ => failures.push(format!("mu={mu}: {a} and {b} disjoint")),
                    }
                }
            }
        }
        (cases, failures)
    });
    let cases = results.iter().map(|r| r.0).sum();
    let failures = results.into_iter().flat_map(|r| r.1).collect();
    CheckReport::new("disjoint and nested flips", cases, failures)
}

/// The weight diagram of the conjugate is the reflected, recoloured one.
pub fn conjugate_reflection(max_n: u32) -> CheckReport {
    let mut failures = Vec::new();
    let mus = partitions_up_to(max_n);
    for mu in &mus {
        let reflected = weight_of_partition(mu).reflected();
        let conj = weight_of_partition(&mu.conjugate());
        let n = max_n as i32 + 3;
        if let Some(x) = (-n..=n + 1).find(|&x| reflected.is_black(x) != conj.is_black(x)) {
            failures.push(format!("mu={mu} at position {x}"));
        }
    }
    CheckReport::new("conjugate weight reflection", mus.len(), failures)
}

/// Two arrows of one diagram are nested, disjoint, or share their source.
pub fn arrows_non_crossing(max_n: u32) -> CheckReport {
    let mut failures = Vec::new();
    let mut cases = 0;
    for mu in partitions_up_to(max_n) {
        let arrows = weight_of_partition(&mu).arrow_pairs();
        for (i, a) in arrows.iter().enumerate() {
            for b in &arrows[i + 1..] {
                cases += 1;
                let ok = a.source == b.source
                    || a.is_nested_in(b)
                    || b.is_nested_in(a)
                    || a.is_disjoint_from(b);
                let shared_target = a.target == b.target;
                if !ok || shared_target {
                    failures.push(format!("mu={mu}: {a} and {b} cross"));
                }
            }
        }
    }
    CheckReport::new("non-crossing arrows", cases, failures)
}

/// With `λ¹` obtained from a partition by removing its q-box and `λ²` by
/// adding its (q-1)-box, no `μ` has both `μ/λ¹` and `μ/λ²` in Γ.
pub fn vertical_pair_chains(max_mu: u32, exec: Exec) -> CheckReport {
    let mus = partitions_up_to(max_mu);
    let results = exec.map(&mus, |mu| {
        let mut cases = 0;
        let mut failures = Vec::new();
        for lam2 in subpartitions(mu) {
            for cell in lam2.removable_cells() {
                let q = cell.content() + 1;
                let eta = lam2.remove_box(cell.content()).expect("removable");
                let Some(lam1) = eta.remove_q(q) else { continue };
                cases += 1;
                if is_gamma(&pair_skew(mu, &lam1)) && is_gamma(&pair_skew(mu, &lam2)) {
                    failures.push(format!("mu={mu} eta={eta} q={q}"));
                }
            }
        }
        (cases, failures)
    });
    let cases = results.iter().map(|r| r.0).sum();
    let failures = results.into_iter().flat_map(|r| r.1).collect();
    CheckReport::new("vertical pair chains", cases, failures)
}

/// Cell multiplicities agree between ranks `r` and `r + 2` on shared labels.
pub fn rank_stability(r_max: u32, exec: Exec) -> CheckReport {
    let mut failures = Vec::new();
    let mut cases = 0;
    for r in 2..=r_max.saturating_sub(2) {
        let (Ok(small), Ok(big)) = (cell_matrix(r, exec), cell_matrix(r + 2, exec)) else {
            failures.push(format!("r={r}: matrix construction failed"));
            continue;
        };
        for (lam, row) in small.rows.iter().zip(&small.entries) {
            for (mu, &e) in small.cols.iter().zip(row) {
                cases += 1;
                if big.get(lam, mu) != Some(e) {
                    failures.push(format!("r={r} lam={lam} mu={mu}"));
                }
            }
        }
    }
    CheckReport::new("rank stability", cases, failures)
}

/// Two-box growth: multiplicity 1 exactly on horizontal dominoes.
pub fn two_box_growth(max_n: u32, exec: Exec) -> CheckReport {
    let failures: Vec<String> = prop_diff2_check(max_n, exec)
        .into_iter()
        .map(|v| format!("lam={} mu={} mult={}", v.lam, v.mu, v.mult))
        .collect();
    let cases = Partition::all_up_to(max_n).len();
    CheckReport::new("two-box growth", cases, failures)
}

/// Every nonempty member of Γ in the universe is a barred-operator image of
/// another member of Γ, and every hook in Γ₀ has an even number of boxes.
pub fn gamma_predecessors(max_size: u32, max_span: u32, exec: Exec) -> CheckReport {
    let all = universe(max_size, max_span, exec);
    let gen = generate_upsilon(max_size, max_span, true, exec);
    let failures = exec.flat_map(&all, |k| {
        let mut out = Vec::new();
        for h in covering(k).hooks {
            if is_gamma0(&h.hook) && h.hook.size() % 2 == 1 {
                out.push(format!("{k}: odd hook in Gamma0"));
            }
        }
        if k.is_empty() || !is_gamma(k) {
            return out;
        }
        let Some(step) = gen.steps.get(k) else {
            out.push(format!("{k}: no barred predecessor"));
            return out;
        };
        let parent = AnchoredSkew::new(step.parent.clone(), 0);
        let reproduced = match step.op {
            Operator::PBar => op_pbar(&parent, step.q).is_some_and(|r| &r.diagram == k),
            Operator::EBar => op_ebar(&parent, step.q).iter().any(|r| &r.diagram == k),
            _ => false,
        };
        if !reproduced || !is_gamma(&step.parent) {
            out.push(format!("{k}: recorded predecessor {} does not reproduce it", step.parent));
        }
        out
    });
    CheckReport::new("barred predecessors", all.len(), failures)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn subpartition_counts() {
        let p = |v: &[u32]| Partition::new(v.to_vec()).unwrap();
        assert_eq!(subpartitions(&Partition::empty()), vec![Partition::empty()]);
        assert_eq!(subpartitions(&p(&[2, 1])).len(), 5);
        assert_eq!(subpartitions(&p(&[3, 3])).len(), 10);
    }

    #[test]
    fn small_runs_pass() {
        let e = Exec::Sequential;
        for report in [
            covering_validity(6, 6, e),
            covering_uniqueness(5, 5, e),
            domino_exclusion(6, 6, e),
            pi_matches_gamma(6, e),
            arrows_match_gamma0(6, e),
            flips_disjoint_or_nested(6, e),
            conjugate_reflection(6),
            arrows_non_crossing(6),
            vertical_pair_chains(6, e),
            rank_stability(6, e),
            two_box_growth(6, e),
            gamma_predecessors(6, 6, e),
        ] {
            assert!(report.passed(), "{report}");
            assert!(report.cases > 0, "{report}");
        }
    }
}
