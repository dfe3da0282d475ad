//! Integer combinations of cell-module classes `[W_r(λ)]`, the operators
//! `[𝐑_q]` and `[𝐄]` acting on them, and a checker for the Temperley–Lieb
//! relations those operators satisfy.
//!
//! `[𝐑_q]` sends `[W_r(λ)]` to the sum of `[W_{r-1}(μ)]` over `μ` obtained by
//! removing the q-box of `λ`, plus `[W_{r-1}(ν)]` for `ν` obtained by adding
//! the (q-1)-box when `|λ| < r`. `[𝐄]` sends `[W_r(λ)]` to `[W_{r-2}(λ)]` when
//! `|λ| < r`. Grades below the operators' domains (`r < 3` for `[𝐑_q]`,
//! `r < 4` for `[𝐄]`) map to zero.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::partitions::{in_labels_l, labels_l, Partition};

/// A finitely supported integer combination of classes `[W_r(λ)]`, keyed by
/// `(r, λ)`. Zero coefficients are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct ClassVector {
    terms: BTreeMap<(u32, Partition), i64>,
}

impl ClassVector {
    pub fn zero() -> Self {
        ClassVector::default()
    }

    /// The basis class `[W_r(λ)]`; `λ` must lie in `𝐋_r`.
    pub fn basis(r: u32, lam: Partition) -> Result<Self> {
        let mut v = ClassVector::zero();
        v.add_term(r, lam, 1)?;
        Ok(v)
    }

    pub fn add_term(&mut self, r: u32, lam: Partition, coeff: i64) -> Result<()> {
        if r < 2 {
            return Err(Error::RankTooSmall(r));
        }
        if !in_labels_l(r, &lam) {
            return Err(Error::InvalidLabel { r, label: lam, set: "L_r" });
        }
        self.add_unchecked(r, lam, coeff);
        Ok(())
    }

    fn add_unchecked(&mut self, r: u32, lam: Partition, coeff: i64) {
        let key = (r, lam);
        let entry = self.terms.entry(key.clone()).or_insert(0);
        *entry += coeff;
        if *entry == 0 {
            self.terms.remove(&key);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, r: u32, lam: &Partition) -> i64 {
        self.terms.get(&(r, lam.clone())).copied().unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (u32, &Partition, i64)> {
        self.terms.iter().map(|((r, lam), &c)| (*r, lam, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scaled(&self, k: i64) -> ClassVector {
        let mut out = ClassVector::zero();
        for (r, lam, c) in self.terms() {
            out.add_unchecked(r, lam.clone(), k * c);
        }
        out
    }

    pub fn plus(&self, other: &ClassVector) -> ClassVector {
        let mut out = self.clone();
        for (r, lam, c) in other.terms() {
            out.add_unchecked(r, lam.clone(), c);
        }
        out
    }
}

impl fmt::Display for ClassVector {
    /// Terms like `2 W_3([1]) - W_2([])`; the zero vector prints as `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (r, lam, c)) in self.terms().enumerate() {
            let sign = if c < 0 { "-" } else { "+" };
            if i == 0 {
                if c < 0 {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            if c.abs() != 1 {
                write!(f, "{} ", c.abs())?;
            }
            write!(f, "W_{r}({lam})")?;
        }
        Ok(())
    }
}

pub fn apply_rq(v: &ClassVector, q: i32) -> ClassVector {
    let mut out = ClassVector::zero();
    for (r, lam, c) in v.terms() {
        if r < 3 {
            continue;
        }
        if let Some(mu) = lam.remove_q(q) {
            out.add_unchecked(r - 1, mu, c);
        }
        if lam.size() < r {
            if let Some(nu) = lam.add_q(q) {
                out.add_unchecked(r - 1, nu, c);
            }
        }
    }
    out
}

pub fn apply_e(v: &ClassVector) -> ClassVector {
    let mut out = ClassVector::zero();
    for (r, lam, c) in v.terms() {
        if r >= 4 && lam.size() < r {
            out.add_unchecked(r - 2, lam.clone(), c);
        }
    }
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Relation {
    /// `[𝐑_q]² = 0`.
    Square,
    /// `[𝐑_q][𝐑_p] = [𝐑_p][𝐑_q]` for `|p - q| > 1`.
    FarCommute,
    /// `[𝐑_q][𝐑_p][𝐑_q] = [𝐄][𝐑_q]` for `p = q ± 1`.
    Braid,
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Relation::Square => "R_q R_q = 0",
            Relation::FarCommute => "R_q R_p = R_p R_q",
            Relation::Braid => "R_q R_p R_q = E R_q",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TlViolation {
    pub r: u32,
    pub lam: Partition,
    pub relation: Relation,
    pub q: i32,
    pub p: Option<i32>,
    pub lhs: ClassVector,
    pub rhs: ClassVector,
}

impl fmt::Display for TlViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "W_{}({}) {} q={}", self.r, self.lam, self.relation, self.q)?;
        if let Some(p) = self.p {
            write!(f, " p={p}")?;
        }
        write!(f, ": lhs = {}, rhs = {}", self.lhs, self.rhs)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TlReport {
    pub classes: usize,
    pub identities: usize,
    pub violations: Vec<TlViolation>,
}

/// Checks the three relation families on every basis class `[W_r(λ)]` with
/// `2 ≤ r ≤ r_max` and `λ ∈ 𝐋_r`, for all `q, p` in `[q_lo, q_hi]`.
/// Violations are ordered by class, relation, `q` and `p`.
pub fn verify_tl(r_max: u32, q_lo: i32, q_hi: i32, exec: Exec) -> Result<TlReport> {
    if r_max < 2 {
        return Err(Error::RankTooSmall(r_max));
    }
    let mut classes = Vec::new();
    for r in 2..=r_max {
        let mut labels = labels_l(r)?;
        labels.sort();
        classes.extend(labels.into_iter().map(|lam| (r, lam)));
    }
    let results = exec.map(&classes, |(r, lam)| check_class(*r, lam, q_lo, q_hi));
    let mut identities = 0;
    let mut violations = Vec::new();
    for (count, found) in results {
        identities += count;
        violations.extend(found);
    }
    Ok(TlReport { classes: classes.len(), identities, violations })
}

fn check_class(r: u32, lam: &Partition, q_lo: i32, q_hi: i32) -> (usize, Vec<TlViolation>) {
    let v = ClassVector::basis(r, lam.clone()).expect("labels come from L_r");
    let mut count = 0;
    let mut found = Vec::new();
    let mut record = |relation, q, p, lhs: ClassVector, rhs: ClassVector| {
        count += 1;
        if lhs != rhs {
            found.push(TlViolation { r, lam: lam.clone(), relation, q, p, lhs, rhs });
        }
    };
    let single: BTreeMap<i32, ClassVector> = (q_lo..=q_hi).map(|q| (q, apply_rq(&v, q))).collect();
    for q in q_lo..=q_hi {
        record(Relation::Square, q, None, apply_rq(&single[&q], q), ClassVector::zero());
    }
    for q in q_lo..=q_hi {
        for p in q_lo..=q_hi {
            if (p - q).abs() > 1 && q < p {
                let lhs = apply_rq(&single[&p], q);
                let rhs = apply_rq(&single[&q], p);
                record(Relation::FarCommute, q, Some(p), lhs, rhs);
            }
        }
    }
    for q in q_lo..=q_hi {
        for p in [q - 1, q + 1] {
            if (q_lo..=q_hi).contains(&p) {
                let lhs = apply_rq(&apply_rq(&single[&q], p), q);
                let rhs = apply_e(&single[&q]);
                record(Relation::Braid, q, Some(p), lhs, rhs);
            }
        }
    }
    (count, found)
}
