//! Leading constituents and lengths of `S_n`-representations, and the length
//! theorem for `H^*(M̄_{0,n})`.
//!
//! For every `0 ≤ i ≤ n-3` the length of `H^{2i}` equals
//! `min(i+1, n-i-2)`. The leading constituent `w_{n,i}` is the exceptional
//! partition `λ_{n,i}` (with multiplicity one) for `i ∈ A_n`, and otherwise
//! has two columns of that height plus a nonempty third column. Rows
//! `i ∈ {0, n-3}` are the trivial representation, whose conjugate `(1^n)`
//! meets the column condition with height 1.

use std::cmp::Ordering;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::moduli::Engine;
use crate::partition::Partition;
use crate::symfunc::SymFunc;

fn support(f: &SymFunc) -> Result<Vec<Partition>> {
    let schur = f.to_schur();
    if schur.is_zero() {
        return Err(Error::ZeroInput);
    }
    if schur.degree().is_none() {
        return Err(Error::Inhomogeneous);
    }
    Ok(schur.terms().keys().cloned().collect())
}

/// The maximal partition in the Schur support of `f` under
/// [`Partition::compare`].
pub fn w(f: &SymFunc) -> Result<Partition> {
    let parts = support(f)?;
    let mut best = parts[0].clone();
    for p in &parts[1..] {
        if p.compare(&best)? == Ordering::Greater {
            best = p.clone();
        }
    }
    Ok(best)
}

/// The largest number of parts among the Schur constituents of `f`.
pub fn length(f: &SymFunc) -> Result<usize> {
    Ok(support(f)?.iter().map(Partition::len).max().unwrap_or(0))
}

/// `min(i+1, n-i-2)`.
pub fn length_bound(n: usize, i: usize) -> usize {
    (i + 1).min((n - 2).saturating_sub(i))
}

/// `λ'_1 = λ'_2 = min(i+1, n-i-2)` and `λ'_3 ≥ 1`.
pub fn star_property(lambda: &Partition, n: usize, i: usize) -> Result<bool> {
    if lambda.size() != n {
        return Err(Error::SizeMismatch(lambda.size(), n));
    }
    let c = lambda.conjugate();
    let bound = length_bound(n, i);
    Ok(c.part(1) == bound && c.part(2) == bound && c.part(3) >= 1)
}

/// `A_n`: `{(n-4)/2, (n-2)/2}` for even `n`, `{(n-3)/2}` for odd `n`.
pub fn a_set(n: usize) -> Vec<usize> {
    if n < 4 {
        return Vec::new();
    }
    if n % 2 == 0 {
        vec![(n - 4) / 2, (n - 2) / 2]
    } else {
        vec![(n - 3) / 2]
    }
}

/// `λ_{n,i}` for `i ∈ A_n`: `(4, 2^{(n-4)/2})` or `(4, 2^{(n-5)/2}, 1)`.
pub fn exceptional_lambda(n: usize, i: usize) -> Option<Partition> {
    if !a_set(n).contains(&i) {
        return None;
    }
    let mut parts = vec![4];
    if n % 2 == 0 {
        parts.extend(std::iter::repeat(2).take((n - 4) / 2));
    } else {
        parts.extend(std::iter::repeat(2).take((n - 5) / 2));
        parts.push(1);
    }
    Some(Partition::new(parts))
}

/// `w(s_μ ∘ s_(m))`: `((m-1)^k) + μ` for odd `m` and `((m-1)^k) + μ'` for
/// even `m`, where `k = |μ|`.
pub fn plethysm_w_closed_form(mu: &Partition, m: usize) -> Result<Partition> {
    if m == 0 || mu.is_empty() {
        return Err(Error::invalid("plethysm_w_closed_form needs m >= 1 and nonempty μ"));
    }
    let block = Partition::rectangle(m - 1, mu.size());
    Ok(if m % 2 == 1 {
        block.sum(mu)
    } else {
        block.sum(&mu.conjugate())
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LengthRow {
    pub i: usize,
    pub length: usize,
    pub w: Partition,
    pub star: bool,
    pub lambda_mult: Option<i64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LengthReport {
    pub n: usize,
    pub rows: Vec<LengthRow>,
}

impl LengthReport {
    /// Human-readable descriptions of every violated claim; empty on success.
    pub fn failures(&self) -> Vec<String> {
        let n = self.n;
        let mut out = Vec::new();
        if self.rows.len() != n - 2 {
            out.push(format!("n={n}: {} rows, expected {}", self.rows.len(), n - 2));
        }
        for row in &self.rows {
            out.extend(self.row_failures(row));
        }
        for (a, b) in self.rows.iter().zip(self.rows.iter().rev()) {
            if a.length != b.length {
                out.push(format!("n={n}: lengths of rows {} and {} differ", a.i, b.i));
            }
        }
        out
    }

    pub fn passed(&self) -> bool {
        self.failures().is_empty()
    }

    pub fn row_failures(&self, row: &LengthRow) -> Vec<String> {
        let n = self.n;
        let i = row.i;
        let mut out = Vec::new();
        let bound = length_bound(n, i);
        if row.length != bound {
            out.push(format!("n={n} i={i}: length {} != {bound}", row.length));
        }
        if let Some(lambda) = exceptional_lambda(n, i) {
            if row.w != lambda {
                out.push(format!("n={n} i={i}: w = {} but λ = {lambda}", row.w));
            }
            if row.lambda_mult != Some(1) {
                out.push(format!(
                    "n={n} i={i}: multiplicity of {lambda} is {:?}",
                    row.lambda_mult
                ));
            }
        } else if !row.star {
            out.push(format!("n={n} i={i}: w = {} fails the column condition", row.w));
        }
        if (i == 0 || i + 3 == n) && row.w != Partition::row(n) {
            out.push(format!("n={n} i={i}: w = {} but expected ({n})", row.w));
        }
        out
    }
}

/// Length, leading constituent and the column condition for each
/// `H^{2i}(M̄_{0,n})`.
pub fn length_theorem_report(engine: &Engine, n: usize) -> Result<LengthReport> {
    let full = engine.full_character(n)?.to_schur();
    let mut rows = Vec::with_capacity(n - 2);
    for i in 0..=n - 3 {
        let part = full.q_coefficient(i);
        let wi = w(&part)?;
        let lambda_mult = match exceptional_lambda(n, i) {
            Some(lambda) => {
                let c = part.coeff(&lambda).coeff(0);
                let m = c
                    .is_integer()
                    .then(|| i64::try_from(c.to_integer()).ok())
                    .flatten()
                    .ok_or_else(|| Error::invalid(format!("multiplicity {c} is not a machine integer")))?;
                Some(m)
            }
            None => None,
        };
        rows.push(LengthRow {
            i,
            length: length(&part)?,
            star: star_property(&wi, n, i)?,
            w: wi,
            lambda_mult,
        });
    }
    Ok(LengthReport { n, rows })
}
