//! The ring `Λ ⊗ Q[q]` of symmetric functions with polynomial coefficients.
//!
//! Values are sparse maps from partitions to [`QPoly`] coefficients, tagged
//! with the basis they are expressed in. The power-sum basis is the working
//! basis: products, Kronecker products, plethysm and the `∂/∂p_λ` operators
//! are monomial there. The Schur basis is produced on demand through the
//! character table, which is also how Littlewood–Richardson and Kronecker
//! coefficients appear.
//!
//! A value may mix degrees; the map is ordered by size first, so its
//! homogeneous components are contiguous.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::characters::character;
use crate::error::{Error, Result};
use crate::partition::{binomial, factorial, partitions_shared, Partition};
use crate::qpoly::QPoly;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Basis {
    #[serde(rename = "powersum")]
    PowerSum,
    #[serde(rename = "schur")]
    Schur,
}

#[derive(Clone)]
pub struct SymFunc {
    basis: Basis,
    terms: BTreeMap<Partition, QPoly>,
}

pub(crate) fn rational(n: impl Into<BigInt>) -> BigRational {
    BigRational::from_integer(n.into())
}

pub(crate) fn inverse(z: BigUint) -> BigRational {
    BigRational::new(BigInt::one(), BigInt::from(z))
}

pub(crate) fn add_into<K: Ord + Clone>(map: &mut BTreeMap<K, QPoly>, key: &K, c: &QPoly) {
    if c.is_zero() {
        return;
    }
    match map.get_mut(key) {
        Some(existing) => {
            *existing += c;
            if existing.is_zero() {
                map.remove(key);
            }
        }
        None => {
            map.insert(key.clone(), c.clone());
        }
    }
}

impl SymFunc {
    pub fn zero(basis: Basis) -> Self {
        SymFunc {
            basis,
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        SymFunc::p(Partition::empty())
    }

    /// The power-sum monomial `p_λ`.
    pub fn p(lambda: impl Into<Partition>) -> Self {
        SymFunc::monomial(Basis::PowerSum, lambda.into(), QPoly::one())
    }

    /// The Schur function `s_λ`.
    pub fn s(lambda: impl Into<Partition>) -> Self {
        SymFunc::monomial(Basis::Schur, lambda.into(), QPoly::one())
    }

    /// `h_n = s_(n)`; `h_0 = 1`.
    pub fn h(n: usize) -> Self {
        SymFunc::s(Partition::row(n))
    }

    /// `e_n = s_(1^n)`.
    pub fn e(n: usize) -> Self {
        SymFunc::s(Partition::column(n))
    }

    pub fn monomial(basis: Basis, lambda: Partition, coeff: QPoly) -> Self {
        let mut f = SymFunc::zero(basis);
        f.add_term(&lambda, &coeff);
        f
    }

    pub fn from_terms<I>(basis: Basis, terms: I) -> Self
    where
        I: IntoIterator<Item = (Partition, QPoly)>,
    {
        let mut f = SymFunc::zero(basis);
        for (lambda, c) in terms {
            f.add_term(&lambda, &c);
        }
        f
    }

    pub fn add_term(&mut self, lambda: &Partition, coeff: &QPoly) {
        add_into(&mut self.terms, lambda, coeff);
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn terms(&self) -> &BTreeMap<Partition, QPoly> {
        &self.terms
    }

    pub fn coeff(&self, lambda: &Partition) -> QPoly {
        self.terms.get(lambda).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// The set of degrees carrying a nonzero component.
    pub fn degrees(&self) -> BTreeSet<usize> {
        self.terms.keys().map(Partition::size).collect()
    }

    /// The common degree of all terms; `None` for zero or mixed degrees.
    pub fn degree(&self) -> Option<usize> {
        let first = self.terms.keys().next()?.size();
        let last = self.terms.keys().next_back()?.size();
        (first == last).then_some(first)
    }

    pub fn homogeneous_component(&self, degree: usize) -> SymFunc {
        SymFunc {
            basis: self.basis,
            terms: self
                .terms
                .iter()
                .filter(|(k, _)| k.size() == degree)
                .map(|(k, v)| (k.clone(), v.clone()))
                .collect(),
        }
    }

    /// Terms in presentation order: by degree, then decreasing under
    /// [`Partition::compare`].
    pub fn sorted_terms(&self) -> Vec<(&Partition, &QPoly)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| a.0.size().cmp(&b.0.size()).then_with(|| b.0.column_order(a.0)));
        v
    }

    /// Applies `f` to every coefficient, dropping terms that become zero.
    pub fn map_coeffs(&self, f: impl Fn(&QPoly) -> QPoly) -> SymFunc {
        SymFunc::from_terms(self.basis, self.terms.iter().map(|(k, v)| (k.clone(), f(v))))
    }

    pub fn scale(&self, c: &QPoly) -> SymFunc {
        self.map_coeffs(|v| v * c)
    }

    /// The coefficient of `q^i`, as a `q`-free symmetric function.
    pub fn q_coefficient(&self, i: usize) -> SymFunc {
        self.map_coeffs(|v| QPoly::constant(v.coeff(i)))
    }

    /// Highest power of `q` present.
    pub fn q_degree(&self) -> Option<usize> {
        self.terms.values().filter_map(QPoly::degree).max()
    }

    pub fn to_basis(&self, basis: Basis) -> SymFunc {
        match basis {
            Basis::PowerSum => self.to_powersum(),
            Basis::Schur => self.to_schur(),
        }
    }

    /// `s_λ = Σ_μ χ^λ(μ) p_μ / z_μ`.
    pub fn to_powersum(&self) -> SymFunc {
        if self.basis == Basis::PowerSum {
            return self.clone();
        }
        let mut out = SymFunc::zero(Basis::PowerSum);
        for (lambda, c) in &self.terms {
            for mu in partitions_shared(lambda.size()).iter() {
                let chi = character(lambda, mu);
                if chi == 0 {
                    continue;
                }
                let weight = rational(chi) * inverse(mu.centralizer_order());
                out.add_term(mu, &c.scale(&weight));
            }
        }
        out
    }

    /// `p_μ = Σ_λ χ^λ(μ) s_λ`.
    pub fn to_schur(&self) -> SymFunc {
        if self.basis == Basis::Schur {
            return self.clone();
        }
        let mut out = SymFunc::zero(Basis::Schur);
        for (mu, c) in &self.terms {
            for lambda in partitions_shared(mu.size()).iter() {
                let chi = character(lambda, mu);
                if chi == 0 {
                    continue;
                }
                out.add_term(lambda, &c.scale(&rational(chi)));
            }
        }
        out
    }

    fn add_signed(&self, other: &SymFunc, negate: bool) -> SymFunc {
        let (mut out, rhs) = if self.basis == other.basis {
            (self.clone(), other.clone())
        } else {
            (self.to_powersum(), other.to_powersum())
        };
        for (k, v) in &rhs.terms {
            if negate {
                out.add_term(k, &-v);
            } else {
                out.add_term(k, v);
            }
        }
        out
    }

    /// The induction product, bilinear in `p_λ p_μ = p_{λ∪μ}`.
    pub fn multiply(&self, other: &SymFunc) -> SymFunc {
        let a = self.to_powersum();
        let b = other.to_powersum();
        let mut out = SymFunc::zero(Basis::PowerSum);
        for (la, ca) in &a.terms {
            for (lb, cb) in &b.terms {
                out.add_term(&la.union(lb), &(ca * cb));
            }
        }
        out
    }

    pub fn pow(&self, exp: usize) -> SymFunc {
        (0..exp).fold(SymFunc::one(), |acc, _| acc.multiply(self))
    }

    /// The internal (tensor) product `p_λ * p_μ = δ_{λμ} z_λ p_λ`.
    pub fn kronecker(&self, other: &SymFunc) -> Result<SymFunc> {
        if self.is_zero() || other.is_zero() {
            return Ok(SymFunc::zero(Basis::PowerSum));
        }
        let (da, db) = match (self.degree(), other.degree()) {
            (Some(a), Some(b)) => (a, b),
            _ => return Err(Error::Inhomogeneous),
        };
        if da != db {
            return Err(Error::DegreeMismatch(format!(
                "Kronecker product of degrees {da} and {db}"
            )));
        }
        let a = self.to_powersum();
        let b = other.to_powersum();
        let mut out = SymFunc::zero(Basis::PowerSum);
        for (lambda, ca) in &a.terms {
            if let Some(cb) = b.terms.get(lambda) {
                let z = rational(BigInt::from(lambda.centralizer_order()));
                out.add_term(lambda, &(ca * cb).scale(&z));
            }
        }
        Ok(out)
    }

    /// `p_n ∘ self`: every `p_j` becomes `p_{nj}` and every `q^k` becomes
    /// `q^{nk}`; rational coefficients are unchanged.
    pub fn adams(&self, n: usize) -> SymFunc {
        assert!(n > 0, "p_0 is not a plethystic operator");
        let g = self.to_powersum();
        SymFunc::from_terms(
            Basis::PowerSum,
            g.terms
                .iter()
                .map(|(mu, c)| (mu.scale(n), c.substitute_power(n))),
        )
    }

    /// Plethysm `self ∘ inner`.
    ///
    /// `self` is expanded in power sums and each `p_λ` is sent to
    /// `∏ p_{λ_i} ∘ inner`. Powers of `q` in the coefficients of `self` are
    /// left alone; powers of `q` inside `inner` are scaled by the adams
    /// operation.
    pub fn plethysm(&self, inner: &SymFunc) -> SymFunc {
        let outer = self.to_powersum();
        let inner = inner.to_powersum();
        let mut adams: HashMap<usize, SymFunc> = HashMap::new();
        let mut out = SymFunc::zero(Basis::PowerSum);
        for (lambda, c) in &outer.terms {
            let mut prod = SymFunc::one();
            for &part in lambda.parts() {
                let a = adams.entry(part).or_insert_with(|| inner.adams(part));
                prod = prod.multiply(a);
            }
            for (mu, v) in &prod.terms {
                out.add_term(mu, &(v * c));
            }
        }
        out
    }

    /// `∂/∂p_λ = (∏ 1/m_i(λ)!) ∂/∂p_{λ_1} ⋯ ∂/∂p_{λ_ℓ}`. On a monomial
    /// `p_α` containing `λ` this gives `∏_j C(m_j(α), m_j(λ)) p_{α∖λ}`.
    pub fn pderiv(&self, lambda: &Partition) -> SymFunc {
        let f = self.to_powersum();
        let needed = lambda.multiplicities();
        let mut out = SymFunc::zero(Basis::PowerSum);
        for (alpha, c) in &f.terms {
            let Some(rest) = alpha.remove(lambda) else {
                continue;
            };
            let have = alpha.multiplicities();
            let factor: BigUint = needed
                .iter()
                .map(|(j, m)| binomial(have[j], *m))
                .product();
            out.add_term(&rest, &c.scale(&rational(BigInt::from(factor))));
        }
        out
    }

    /// Graded dimension: evaluates a degree-`n` character at the identity.
    /// Uses `n!·[p_(1^n)]`.
    pub fn dimension(&self) -> Result<QPoly> {
        if self.is_zero() {
            return Ok(QPoly::zero());
        }
        let n = self.degree().ok_or(Error::Inhomogeneous)?;
        let f = self.to_powersum();
        let c = f.coeff(&Partition::column(n));
        Ok(c.scale(&rational(BigInt::from(factorial(n)))))
    }

    /// Graded dimension through the Schur expansion and hook lengths.
    pub fn dimension_via_schur(&self) -> Result<QPoly> {
        if self.is_zero() {
            return Ok(QPoly::zero());
        }
        self.degree().ok_or(Error::Inhomogeneous)?;
        let f = self.to_schur();
        let mut total = QPoly::zero();
        for (lambda, c) in &f.terms {
            let dim = if lambda.is_empty() {
                BigUint::one()
            } else {
                lambda.irrep_dimension()?
            };
            total += &c.scale(&rational(BigInt::from(dim)));
        }
        Ok(total)
    }

    /// True when the Schur expansion has coefficients in `Z_{≥0}[q]`.
    pub fn is_effective(&self) -> bool {
        self.to_schur().terms.values().all(QPoly::is_effective)
    }

    /// Rational constant coefficients only (no `q`).
    pub fn is_q_free(&self) -> bool {
        self.terms.values().all(QPoly::is_constant)
    }
}

impl PartialEq for SymFunc {
    fn eq(&self, other: &Self) -> bool {
        if self.basis == other.basis {
            self.terms == other.terms
        } else {
            self.to_powersum().terms == other.to_powersum().terms
        }
    }
}

impl Eq for SymFunc {}

impl fmt::Debug for SymFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = match self.basis {
            Basis::PowerSum => "p",
            Basis::Schur => "s",
        };
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (lambda, c)) in self.sorted_terms().into_iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "({c}){tag}{lambda}")?;
        }
        Ok(())
    }
}

impl Add for &SymFunc {
    type Output = SymFunc;
    fn add(self, rhs: &SymFunc) -> SymFunc {
        self.add_signed(rhs, false)
    }
}

impl Sub for &SymFunc {
    type Output = SymFunc;
    fn sub(self, rhs: &SymFunc) -> SymFunc {
        self.add_signed(rhs, true)
    }
}

impl Neg for &SymFunc {
    type Output = SymFunc;
    fn neg(self) -> SymFunc {
        self.map_coeffs(|c| -c)
    }
}

impl Mul for &SymFunc {
    type Output = SymFunc;
    fn mul(self, rhs: &SymFunc) -> SymFunc {
        self.multiply(rhs)
    }
}
