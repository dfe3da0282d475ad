//! Cell and Cartan decomposition multiplicities.
//!
//! `[W_r(λ) : L_r(μ)]` is 1 exactly when `λ ⊆ μ` and `μ/λ ∈ Γ`. The Cartan
//! multiplicity `[P_r(ν) : L_r(μ)]` is the sum over `λ ∈ 𝐋_r` of
//! `[W_r(λ) : L_r(μ)] · [W_r(λ') : L_r(ν')]`, and is also 1 exactly when some
//! `λ ⊆ μ, ν` has `μ/λ ∈ Γ` and the conjugate of `ν/λ` in Γ. Both forms
//! are computed and compared.

use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::partitions::{in_labels_l, in_labels_lambda, labels_l, labels_lambda, Partition};
use crate::skew::{is_gamma, SkewDiagram};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecompositionMatrix {
    pub r: u32,
    pub rows: Vec<Partition>,
    pub cols: Vec<Partition>,
    pub entries: Vec<Vec<u32>>,
}

impl DecompositionMatrix {
    pub fn get(&self, row: &Partition, col: &Partition) -> Option<u32> {
        let i = self.rows.iter().position(|x| x == row)?;
        let j = self.cols.iter().position(|x| x == col)?;
        Some(self.entries[i][j])
    }

    pub fn max_entry(&self) -> u32 {
        self.entries.iter().flatten().copied().max().unwrap_or(0)
    }

    /// Comma separated: a header of column labels, then one line per row
    /// starting with its label. Labels are quoted since they contain commas.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("\"\"");
        for c in &self.cols {
            out.push_str(&format!(",\"{c}\""));
        }
        out.push('\n');
        for (label, row) in self.rows.iter().zip(&self.entries) {
            out.push_str(&format!("\"{label}\""));
            for e in row {
                out.push_str(&format!(",{e}"));
            }
            out.push('\n');
        }
        out
    }
}

impl fmt::Display for DecompositionMatrix {
    /// Aligned table with row labels on the left and column labels on top.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let row_labels: Vec<String> = self.rows.iter().map(|p| p.to_string()).collect();
        let col_labels: Vec<String> = self.cols.iter().map(|p| p.to_string()).collect();
        let lw = row_labels.iter().map(String::len).max().unwrap_or(0);
        let widths: Vec<usize> = col_labels.iter().map(|c| c.len().max(1)).collect();
        write!(f, "{:lw$}", "")?;
        for (c, w) in col_labels.iter().zip(&widths) {
            write!(f, " {c:>w$}")?;
        }
        for (label, row) in row_labels.iter().zip(&self.entries) {
            write!(f, "\n{label:lw$}")?;
            for (e, w) in row.iter().zip(&widths) {
                write!(f, " {e:>w$}")?;
            }
        }
        Ok(())
    }
}

fn check_l(r: u32, p: &Partition) -> Result<()> {
    if r < 2 {
        return Err(Error::RankTooSmall(r));
    }
    if !in_labels_l(r, p) {
        return Err(Error::InvalidLabel { r, label: p.clone(), set: "L_r" });
    }
    Ok(())
}

fn check_lambda(r: u32, p: &Partition) -> Result<()> {
    if r < 2 {
        return Err(Error::RankTooSmall(r));
    }
    if !in_labels_lambda(r, p) {
        return Err(Error::InvalidLabel { r, label: p.clone(), set: "Lambda_r" });
    }
    Ok(())
}

/// `[W(λ) : L(μ)]` without label checks: 1 iff `λ ⊆ μ` and `μ/λ ∈ Γ`.
pub fn cell_mult_unchecked(lam: &Partition, mu: &Partition) -> u32 {
    if !lam.is_contained_in(mu) {
        return 0;
    }
    let k = SkewDiagram::from_pair(mu, lam).expect("containment checked");
    u32::from(is_gamma(&k))
}

/// `[W_r(λ) : L_r(μ)]` for `λ ∈ 𝐋_r` and `μ ∈ Λ_r`.
pub fn cell_mult(r: u32, lam: &Partition, mu: &Partition) -> Result<u32> {
    check_l(r, lam)?;
    check_lambda(r, mu)?;
    Ok(cell_mult_unchecked(lam, mu))
}

/// Rows `𝐋_r`, columns `Λ_r`.
pub fn cell_matrix(r: u32, exec: Exec) -> Result<DecompositionMatrix> {
    let rows = labels_l(r)?;
    let cols = labels_lambda(r)?;
    let entries =
        exec.map(&rows, |lam| cols.iter().map(|mu| cell_mult_unchecked(lam, mu)).collect());
    Ok(DecompositionMatrix { r, rows, cols, entries })
}

/// `[P_r(ν) : L_r(μ)]` as the sum over `λ ∈ 𝐋_r`.
pub fn cartan_mult_sum(r: u32, nu: &Partition, mu: &Partition) -> Result<u32> {
    check_lambda(r, nu)?;
    check_lambda(r, mu)?;
    let nu_c = nu.conjugate();
    Ok(labels_l(r)?
        .iter()
        .map(|lam| cell_mult_unchecked(lam, mu) * cell_mult_unchecked(&lam.conjugate(), &nu_c))
        .sum())
}

/// The first `λ ∈ 𝐋_r` (in label order) with `λ ⊆ μ`, `λ ⊆ ν`, `μ/λ ∈ Γ`
/// and the conjugate of `ν/λ` in Γ.
pub fn cartan_witness(r: u32, nu: &Partition, mu: &Partition) -> Result<Option<Partition>> {
    check_lambda(r, nu)?;
    check_lambda(r, mu)?;
    Ok(labels_l(r)?.into_iter().find(|lam| witnesses(lam, nu, mu)))
}

fn witnesses(lam: &Partition, nu: &Partition, mu: &Partition) -> bool {
    if !lam.is_contained_in(mu) || !lam.is_contained_in(nu) {
        return false;
    }
    let down = SkewDiagram::from_pair(mu, lam).expect("containment checked");
    let across = SkewDiagram::from_pair(nu, lam).expect("containment checked");
    is_gamma(&down) && is_gamma(&across.conjugate())
}

/// 1 if a witness exists, else 0.
pub fn cartan_mult_witness(r: u32, nu: &Partition, mu: &Partition) -> Result<u32> {
    Ok(u32::from(cartan_witness(r, nu, mu)?.is_some()))
}

/// Rows `ν`, columns `μ`, both `Λ_r`. Fails if the sum and witness forms
/// disagree anywhere or an entry exceeds 1.
pub fn cartan_matrix(r: u32, exec: Exec) -> Result<DecompositionMatrix> {
    let labels = labels_lambda(r)?;
    let sums = labels_l(r)?;
    // W(λ, μ) and W(λ', ν') for all λ ∈ 𝐋_r, looked up by index.
    let w: Vec<Vec<u32>> =
        exec.map(&sums, |lam| labels.iter().map(|mu| cell_mult_unchecked(lam, mu)).collect());
    let index: HashMap<&Partition, usize> = sums.iter().enumerate().map(|(i, p)| (p, i)).collect();
    let col_index: HashMap<&Partition, usize> =
        labels.iter().enumerate().map(|(i, p)| (p, i)).collect();
    let conj_row: Vec<usize> = sums.iter().map(|lam| index[&lam.conjugate()]).collect();
    let conj_col: Vec<usize> = labels.iter().map(|nu| col_index[&nu.conjugate()]).collect();
    let rows = exec.map(&(0..labels.len()).collect::<Vec<_>>(), |&i| {
        let nu = &labels[i];
        (0..labels.len())
            .map(|j| {
                let mu = &labels[j];
                let sum: u32 =
                    (0..sums.len()).map(|l| w[l][j] * w[conj_row[l]][conj_col[i]]).sum();
                let witness = sums.iter().any(|lam| witnesses(lam, nu, mu));
                if sum != u32::from(witness) {
                    return Err(Error::Inconsistent(format!(
                        "r = {r}: [P({nu}):L({mu})] is {sum} by the sum but the witness test says {}",
                        u32::from(witness)
                    )));
                }
                Ok(sum)
            })
            .collect::<Result<Vec<u32>>>()
    });
    let entries = rows.into_iter().collect::<Result<Vec<_>>>()?;
    Ok(DecompositionMatrix { r, rows: labels.clone(), cols: labels, entries })
}

/// A pair `λ ⊆ μ` with `|μ/λ| = 2` where the cell multiplicity disagrees
/// with "μ/λ is a horizontal domino".
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Diff2Violation {
    pub lam: Partition,
    pub mu: Partition,
    pub mult: u32,
}

/// Checks every `λ` with `|λ| ≤ max_n` and every `μ ⊇ λ` with two more boxes.
pub fn prop_diff2_check(max_n: u32, exec: Exec) -> Vec<Diff2Violation> {
    let domino = SkewDiagram::from_rows(vec![(0, 2)]).expect("horizontal domino");
    let lams = Partition::all_up_to(max_n);
    exec.flat_map(&lams, |lam| {
        let mut two_up: Vec<Partition> = lam
            .addable_cells()
            .iter()
            .filter_map(|c| lam.add_box(c.content()))
            .flat_map(|m| m.addable_cells().into_iter().filter_map(move |c| m.add_box(c.content())))
            .collect();
        two_up.sort();
        two_up.dedup();
        two_up
            .into_iter()
            .filter_map(|mu| {
                let mult = cell_mult_unchecked(lam, &mu);
                let horizontal = SkewDiagram::from_pair(&mu, lam).ok()? == domino;
                (u32::from(horizontal) != mult).then(|| Diff2Violation {
                    lam: lam.clone(),
                    mu,
                    mult,
                })
            })
            .collect()
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn cell_examples() {
        let e = Partition::empty();
        assert_eq!(cell_mult(2, &e, &p(&[2])), Ok(1));
        assert_eq!(cell_mult(2, &e, &p(&[1, 1])), Ok(0));
        for mu in Partition::all_of_size(4) {
            assert_eq!(cell_mult(4, &e, &mu), Ok(0), "{mu}");
        }
        for r in 2..=6 {
            for lam in labels_lambda(r).unwrap() {
                assert_eq!(cell_mult(r, &lam, &lam), Ok(1));
            }
        }
        assert!(matches!(cell_mult(3, &e, &p(&[3])), Err(Error::InvalidLabel { .. })));
        assert!(matches!(cell_mult(2, &p(&[1]), &p(&[2])), Err(Error::InvalidLabel { .. })));
        assert!(matches!(cell_mult(4, &p(&[2]), &e), Err(Error::InvalidLabel { .. })));
    }

    #[test]
    fn cell_matrices() {
        let m = cell_matrix(2, Exec::Sequential).unwrap();
        assert_eq!(m.rows, vec![p(&[2]), p(&[1, 1]), Partition::empty()]);
        assert_eq!(m.entries, vec![vec![1, 0], vec![0, 1], vec![1, 0]]);
        let m3 = cell_matrix(3, Exec::Sequential).unwrap();
        assert_eq!(m3.get(&p(&[1]), &p(&[3])), Some(1));
        assert_eq!(m3.get(&p(&[1]), &p(&[2, 1])), Some(0));
        assert_eq!(m3.get(&p(&[1]), &p(&[1, 1, 1])), Some(0));
        for r in 2..=7 {
            let m = cell_matrix(r, Exec::Sequential).unwrap();
            for (lam, row) in m.rows.iter().zip(&m.entries) {
                if lam.size() == r {
                    let expected: Vec<u32> = m.cols.iter().map(|mu| u32::from(mu == lam)).collect();
                    assert_eq!(row, &expected);
                }
            }
        }
    }

    #[test]
    fn cartan_examples() {
        let (two, one_one) = (p(&[2]), p(&[1, 1]));
        assert_eq!(cartan_mult_sum(2, &one_one, &two), Ok(1));
        assert_eq!(cartan_mult_sum(2, &two, &one_one), Ok(0));
        assert_eq!(cartan_mult_sum(2, &two, &two), Ok(1));
        assert_eq!(cartan_witness(2, &one_one, &two), Ok(Some(Partition::empty())));
        assert_eq!(cartan_witness(2, &two, &one_one), Ok(None));
        let m = cartan_matrix(2, Exec::Sequential).unwrap();
        assert_eq!(m.rows, vec![two.clone(), one_one.clone()]);
        assert_eq!(m.entries, vec![vec![1, 0], vec![1, 1]]);
        let m3 = cartan_matrix(3, Exec::Sequential).unwrap();
        assert_eq!(m3.rows.len(), 4);
        assert!((0..4).all(|i| m3.entries[i][i] == 1));
        for r in 2..=6 {
            for nu in labels_lambda(r).unwrap() {
                assert!(cartan_witness(r, &nu, &nu).unwrap().is_some());
            }
        }
    }

    #[test]
    fn diff2_examples() {
        assert_eq!(cell_mult_unchecked(&p(&[1]), &p(&[2, 1])), 0);
        assert_eq!(cell_mult_unchecked(&p(&[2]), &p(&[2, 2])), 1);
        assert_eq!(cell_mult_unchecked(&p(&[1]), &p(&[1, 1, 1])), 0);
        assert!(prop_diff2_check(6, Exec::Sequential).is_empty());
    }

    #[test]
    fn formats() {
        let m = cartan_matrix(2, Exec::Sequential).unwrap();
        assert_eq!(m.to_string(), "      [2] [1,1]\n[2]     1     0\n[1,1]   1     1");
        assert_eq!(m.to_csv(), "\"\",\"[2]\",\"[1,1]\"\n\"[2]\",1,0\n\"[1,1]\",1,1\n");
    }
}
