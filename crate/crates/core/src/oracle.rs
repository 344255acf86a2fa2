//! Slow independent reference implementations.
//!
//! Symmetric functions are evaluated as honest polynomials in `N` variables,
//! which is faithful in degrees up to `N`. Schur functions are rebuilt from
//! the Jacobi–Trudi determinant with `h_n` obtained from Newton's identities,
//! bypassing the character table.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Mutex, OnceLock};

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::qpoly::QPoly;
use crate::symfunc::{Basis, SymFunc};

/// A polynomial in `N` commuting variables with rational coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialPoly {
    nvars: usize,
    terms: BTreeMap<Vec<u32>, BigRational>,
}

impl MonomialPoly {
    pub fn zero(nvars: usize) -> Self {
        MonomialPoly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(nvars: usize) -> Self {
        let mut p = MonomialPoly::zero(nvars);
        p.terms.insert(vec![0; nvars], BigRational::one());
        p
    }

    /// `x_1^k + … + x_N^k`.
    pub fn power_sum(nvars: usize, k: u32) -> Self {
        let mut p = MonomialPoly::zero(nvars);
        for i in 0..nvars {
            let mut e = vec![0; nvars];
            e[i] = k;
            p.terms.insert(e, BigRational::one());
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> &BTreeMap<Vec<u32>, BigRational> {
        &self.terms
    }

    pub fn coeff(&self, exponents: &[u32]) -> BigRational {
        self.terms.get(exponents).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn add_term(&mut self, e: Vec<u32>, c: BigRational) {
        let slot = self.terms.entry(e).or_insert_with(BigRational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.retain(|_, v| !v.is_zero());
        }
    }

    pub fn add(&self, other: &MonomialPoly) -> MonomialPoly {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, c: &BigRational) -> MonomialPoly {
        if c.is_zero() {
            return MonomialPoly::zero(self.nvars);
        }
        MonomialPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, v)| (e.clone(), v * c)).collect(),
        }
    }

    pub fn mul(&self, other: &MonomialPoly) -> MonomialPoly {
        let mut acc: HashMap<Vec<u32>, BigRational> = HashMap::new();
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                let e: Vec<u32> = a.iter().zip(b).map(|(x, y)| x + y).collect();
                *acc.entry(e).or_insert_with(BigRational::zero) += ca * cb;
            }
        }
        MonomialPoly {
            nvars: self.nvars,
            terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }

    /// `x_i ↦ x_i^k` for every variable.
    pub fn frobenius(&self, k: u32) -> MonomialPoly {
        MonomialPoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.iter().map(|x| x * k).collect(), c.clone()))
                .collect(),
        }
    }

    /// Invariance under every adjacent transposition of variables.
    pub fn is_symmetric(&self) -> bool {
        (0..self.nvars.saturating_sub(1)).all(|i| {
            self.terms.iter().all(|(e, c)| {
                let mut t = e.clone();
                t.swap(i, i + 1);
                self.terms.get(&t) == Some(c)
            })
        })
    }
}

fn require_q_free(f: &SymFunc) -> Result<()> {
    if f.is_q_free() {
        Ok(())
    } else {
        Err(Error::invalid("oracle inputs must not depend on q"))
    }
}

type IntPoly = HashMap<Vec<u32>, i128>;

fn int_mul(a: &IntPoly, b: &IntPoly) -> IntPoly {
    let mut out = IntPoly::new();
    for (ea, ca) in a {
        for (eb, cb) in b {
            let e: Vec<u32> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
            let prod = ca.checked_mul(*cb).expect("oracle coefficient overflow");
            *out.entry(e).or_insert(0) += prod;
        }
    }
    out.retain(|_, c| *c != 0);
    out
}

/// `Σ_λ c_λ ∏_i factor(λ_i)`, with products of leading parts shared between
/// partitions.
fn combine(
    f: &SymFunc,
    nvars: usize,
    factor: impl Fn(usize) -> IntPoly,
) -> MonomialPoly {
    let mut prefixes: HashMap<Vec<usize>, IntPoly> = HashMap::new();
    prefixes.insert(Vec::new(), IntPoly::from([(vec![0; nvars], 1)]));
    let mut factors: HashMap<usize, IntPoly> = HashMap::new();
    let mut acc: HashMap<Vec<u32>, BigRational> = HashMap::new();
    for (lambda, c) in f.to_powersum().terms() {
        let parts = lambda.parts();
        for len in 1..=parts.len() {
            if prefixes.contains_key(&parts[..len]) {
                continue;
            }
            let part = parts[len - 1];
            let step = factors.entry(part).or_insert_with(|| factor(part)).clone();
            let next = int_mul(&prefixes[&parts[..len - 1]], &step);
            prefixes.insert(parts[..len].to_vec(), next);
        }
        let c = c.coeff(0);
        for (e, k) in &prefixes[parts] {
            *acc.entry(e.clone()).or_insert_with(BigRational::zero) += &c * BigRational::from_integer((*k).into());
        }
    }
    MonomialPoly {
        nvars,
        terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
    }
}

fn int_power_sum(nvars: usize, k: usize) -> IntPoly {
    (0..nvars)
        .map(|i| {
            let mut e = vec![0; nvars];
            e[i] = k as u32;
            (e, 1)
        })
        .collect()
}

/// The image of `f` in `Q[x_1, …, x_N]`.
pub fn expand(f: &SymFunc, nvars: usize) -> Result<MonomialPoly> {
    require_q_free(f)?;
    let top = f.degrees().into_iter().max().unwrap_or(0);
    if nvars < top {
        return Err(Error::invalid(format!(
            "{nvars} variables cannot represent degree {top} faithfully"
        )));
    }
    Ok(combine(f, nvars, |k| int_power_sum(nvars, k)))
}

/// `f ∘ g` computed by feeding the monomials of `g`, with multiplicity, as
/// the alphabet of `f`.
pub fn oracle_plethysm(f: &SymFunc, g: &SymFunc, nvars: usize) -> Result<MonomialPoly> {
    require_q_free(f)?;
    let df = f.degrees().into_iter().max().unwrap_or(0);
    let dg = g.degrees().into_iter().max().unwrap_or(0);
    if nvars < df * dg {
        return Err(Error::invalid(format!(
            "{nvars} variables cannot represent degree {} faithfully",
            df * dg
        )));
    }
    let alphabet = expand(g, nvars)?;
    if alphabet
        .terms
        .values()
        .any(|c| !c.is_integer() || c.is_negative())
    {
        return Err(Error::invalid(
            "inner function must have non-negative integer monomial coefficients",
        ));
    }
    let letters: IntPoly = alphabet
        .terms
        .iter()
        .map(|(e, c)| {
            let k = i128::try_from(c.to_integer()).expect("alphabet multiplicity fits i128");
            (e.clone(), k)
        })
        .collect();
    Ok(combine(f, nvars, |k| {
        letters
            .iter()
            .map(|(e, c)| (e.iter().map(|x| x * k as u32).collect(), *c))
            .collect()
    }))
}

fn h_newton(n: usize) -> SymFunc {
    static MEMO: OnceLock<Mutex<Vec<SymFunc>>> = OnceLock::new();
    let memo = MEMO.get_or_init(|| Mutex::new(vec![SymFunc::one()]));
    if let Some(h) = memo.lock().unwrap().get(n) {
        return h.clone();
    }
    // n h_n = Σ_{k=1}^n p_k h_{n-k}
    let mut total = SymFunc::zero(Basis::PowerSum);
    for k in 1..=n {
        total = &total + &SymFunc::p([k]).multiply(&h_newton(n - k));
    }
    let h = total.scale(&QPoly::constant(BigRational::new(1.into(), (n as i64).into())));
    let mut guard = memo.lock().unwrap();
    if guard.len() == n {
        guard.push(h.clone());
    }
    h
}

fn h_entry(k: isize) -> SymFunc {
    if k < 0 {
        SymFunc::zero(Basis::PowerSum)
    } else {
        h_newton(k as usize)
    }
}

/// `s_λ = det(h_{λ_i - i + j})`, expanded along rows with the determinant of
/// each remaining minor cached by its column set.
pub fn jacobi_trudi_to_powersum(lambda: &Partition) -> SymFunc {
    let len = lambda.len();
    if len == 0 {
        return SymFunc::one();
    }
    let entry = |i: usize, j: usize| h_entry(lambda.part(i + 1) as isize - i as isize + j as isize);
    let mut minors: HashMap<u64, SymFunc> = HashMap::new();
    minor(0, (1u64 << len) - 1, len, &entry, &mut minors)
}

fn minor(
    row: usize,
    cols: u64,
    len: usize,
    entry: &impl Fn(usize, usize) -> SymFunc,
    memo: &mut HashMap<u64, SymFunc>,
) -> SymFunc {
    if row == len {
        return SymFunc::one();
    }
    if let Some(v) = memo.get(&cols) {
        return v.clone();
    }
    let mut total = SymFunc::zero(Basis::PowerSum);
    let mut sign_negative = false;
    for j in 0..len {
        if cols & (1 << j) == 0 {
            continue;
        }
        let a = entry(row, j);
        if !a.is_zero() {
            let rest = minor(row + 1, cols & !(1 << j), len, entry, memo);
            let t = a.multiply(&rest);
            total = if sign_negative { &total - &t } else { &total + &t };
        }
        sign_negative = !sign_negative;
    }
    memo.insert(cols, total.clone());
    total
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::partitions_of;

    fn r(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn expansions() {
        let p2 = expand(&SymFunc::p([2]), 2).unwrap();
        assert_eq!(p2, MonomialPoly::power_sum(2, 2));
        let e2 = expand(&SymFunc::s([1, 1]), 2).unwrap();
        assert_eq!(e2.terms().len(), 1);
        assert_eq!(e2.coeff(&[1, 1]), r(1, 1));
        let s21 = expand(&SymFunc::s([2, 1]), 3).unwrap();
        assert_eq!(s21.terms().len(), 7);
        assert_eq!(s21.coeff(&[1, 1, 1]), r(2, 1));
        assert_eq!(s21.coeff(&[2, 1, 0]), r(1, 1));
        assert!(s21.is_symmetric());
        assert!(expand(&SymFunc::s([2, 1]), 2).is_err());
        assert!(expand(&SymFunc::s([1]).scale(&QPoly::q_pow(1)), 2).is_err());
    }

    #[test]
    fn plethysm_oracle_basics() {
        let g = SymFunc::s([2, 1]);
        assert_eq!(oracle_plethysm(&SymFunc::p([1]), &g, 3).unwrap(), expand(&g, 3).unwrap());
        assert_eq!(oracle_plethysm(&g, &SymFunc::p([1]), 3).unwrap(), expand(&g, 3).unwrap());
        let f = SymFunc::s([2]);
        let g = SymFunc::s([3]);
        assert_eq!(
            oracle_plethysm(&f, &g, 6).unwrap(),
            expand(&(&SymFunc::s([6]) + &SymFunc::s([4, 2])), 6).unwrap()
        );
        assert!(oracle_plethysm(&f, &(&SymFunc::s([1, 1]) - &SymFunc::s([2])), 4).is_err());
        assert!(oracle_plethysm(&f, &SymFunc::p([2]), 4).is_ok());
        assert!(oracle_plethysm(&f, &SymFunc::s([2]).scale(&QPoly::constant(r(1, 2))), 4).is_err());
    }

    #[test]
    fn jacobi_trudi_examples() {
        let s21 = jacobi_trudi_to_powersum(&Partition::from([2, 1]));
        let expected = (&SymFunc::p([1, 1, 1]) - &SymFunc::p([3])).scale(&QPoly::constant(r(1, 3)));
        assert_eq!(s21, expected);
        assert_eq!(jacobi_trudi_to_powersum(&Partition::row(4)), SymFunc::h(4));
        assert_eq!(jacobi_trudi_to_powersum(&Partition::column(4)), SymFunc::e(4));
    }

    #[test]
    fn jacobi_trudi_matches_characters() {
        for n in 0..=6 {
            for lambda in partitions_of(n) {
                assert_eq!(
                    jacobi_trudi_to_powersum(&lambda),
                    SymFunc::s(lambda.clone()).to_powersum(),
                    "{lambda}"
                );
            }
        }
    }
}
