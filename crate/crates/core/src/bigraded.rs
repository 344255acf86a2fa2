//! Characters of `S_k × S_{n-k}`: the ring `Λ^x ⊗ Λ^y [q]`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::partition::{factorial, partitions_shared, Partition};
use crate::qpoly::QPoly;
use crate::symfunc::{add_into, rational, Basis, SymFunc};

/// Key of a tensor term: `(x-leg, y-leg)`.
pub type BiKey = (Partition, Partition);

/// A finite sum of `c(q) b^x_λ b^y_μ` with both legs in the same basis.
#[derive(Clone)]
pub struct BiSymFunc {
    basis: Basis,
    terms: BTreeMap<BiKey, QPoly>,
}

impl BiSymFunc {
    pub fn zero(basis: Basis) -> Self {
        BiSymFunc {
            basis,
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        BiSymFunc::monomial(Basis::PowerSum, Partition::empty(), Partition::empty(), QPoly::one())
    }

    pub fn monomial(basis: Basis, x: Partition, y: Partition, coeff: QPoly) -> Self {
        let mut f = BiSymFunc::zero(basis);
        f.add_term(&(x, y), &coeff);
        f
    }

    /// `s^x_λ s^y_μ`.
    pub fn schur(x: impl Into<Partition>, y: impl Into<Partition>) -> Self {
        BiSymFunc::monomial(Basis::Schur, x.into(), y.into(), QPoly::one())
    }

    pub fn from_terms<I>(basis: Basis, terms: I) -> Self
    where
        I: IntoIterator<Item = (BiKey, QPoly)>,
    {
        let mut f = BiSymFunc::zero(basis);
        for (key, c) in terms {
            f.add_term(&key, &c);
        }
        f
    }

    /// `f ⊗ 1`.
    pub fn from_x(f: &SymFunc) -> Self {
        BiSymFunc::from_terms(
            f.basis(),
            f.terms()
                .iter()
                .map(|(l, c)| ((l.clone(), Partition::empty()), c.clone())),
        )
    }

    /// `1 ⊗ f`.
    pub fn from_y(f: &SymFunc) -> Self {
        BiSymFunc::from_terms(
            f.basis(),
            f.terms()
                .iter()
                .map(|(l, c)| ((Partition::empty(), l.clone()), c.clone())),
        )
    }

    /// `f ⊗ g`.
    pub fn tensor(f: &SymFunc, g: &SymFunc) -> Self {
        let f = f.to_powersum();
        let g = g.to_powersum();
        let mut out = BiSymFunc::zero(Basis::PowerSum);
        for (a, ca) in f.terms() {
            for (b, cb) in g.terms() {
                out.add_term(&(a.clone(), b.clone()), &(ca * cb));
            }
        }
        out
    }

    pub fn add_term(&mut self, key: &BiKey, coeff: &QPoly) {
        add_into(&mut self.terms, key, coeff);
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn terms(&self) -> &BTreeMap<BiKey, QPoly> {
        &self.terms
    }

    pub fn coeff(&self, x: &Partition, y: &Partition) -> QPoly {
        self.terms
            .get(&(x.clone(), y.clone()))
            .cloned()
            .unwrap_or_default()
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

    /// `(|x|, |y|)` shared by every term; `None` for zero or mixed bidegrees.
    pub fn bidegree(&self) -> Option<(usize, usize)> {
        let mut keys = self.terms.keys();
        let (x, y) = keys.next()?;
        let d = (x.size(), y.size());
        keys.all(|(a, b)| (a.size(), b.size()) == d).then_some(d)
    }

    /// Presentation order: x-leg then y-leg, each decreasing under
    /// [`Partition::compare`].
    pub fn sorted_terms(&self) -> Vec<(&BiKey, &QPoly)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| {
            let (ax, ay) = a.0;
            let (bx, by) = b.0;
            ax.size()
                .cmp(&bx.size())
                .then_with(|| bx.column_order(ax))
                .then_with(|| ay.size().cmp(&by.size()))
                .then_with(|| by.column_order(ay))
        });
        v
    }

    pub fn map_coeffs(&self, f: impl Fn(&QPoly) -> QPoly) -> BiSymFunc {
        BiSymFunc::from_terms(self.basis, self.terms.iter().map(|(k, v)| (k.clone(), f(v))))
    }

    pub fn scale(&self, c: &QPoly) -> BiSymFunc {
        self.map_coeffs(|v| v * c)
    }

    pub fn q_coefficient(&self, i: usize) -> BiSymFunc {
        self.map_coeffs(|v| QPoly::constant(v.coeff(i)))
    }

    pub fn q_degree(&self) -> Option<usize> {
        self.terms.values().filter_map(QPoly::degree).max()
    }

    /// Exchanges the two legs.
    pub fn swap(&self) -> BiSymFunc {
        BiSymFunc::from_terms(
            self.basis,
            self.terms
                .iter()
                .map(|((x, y), c)| ((y.clone(), x.clone()), c.clone())),
        )
    }

    fn convert(&self, target: Basis) -> BiSymFunc {
        if self.basis == target {
            return self.clone();
        }
        let mut cache: HashMap<Partition, SymFunc> = HashMap::new();
        let mut expand = |lambda: &Partition| {
            cache
                .entry(lambda.clone())
                .or_insert_with(|| {
                    SymFunc::monomial(self.basis, lambda.clone(), QPoly::one()).to_basis(target)
                })
                .clone()
        };
        let mut out = BiSymFunc::zero(target);
        for ((x, y), c) in &self.terms {
            let ex = expand(x);
            let ey = expand(y);
            for (a, ca) in ex.terms() {
                let cac = ca * c;
                for (b, cb) in ey.terms() {
                    out.add_term(&(a.clone(), b.clone()), &(&cac * cb));
                }
            }
        }
        out
    }

    pub fn to_powersum(&self) -> BiSymFunc {
        self.convert(Basis::PowerSum)
    }

    pub fn to_schur(&self) -> BiSymFunc {
        self.convert(Basis::Schur)
    }

    fn add_signed(&self, other: &BiSymFunc, negate: bool) -> BiSymFunc {
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

    /// Legwise product in `Λ^x ⊗ Λ^y`.
    pub fn multiply(&self, other: &BiSymFunc) -> BiSymFunc {
        let a = self.to_powersum();
        let b = other.to_powersum();
        let mut out = BiSymFunc::zero(Basis::PowerSum);
        for ((ax, ay), ca) in &a.terms {
            for ((bx, by), cb) in &b.terms {
                out.add_term(&(ax.union(bx), ay.union(by)), &(ca * cb));
            }
        }
        out
    }

    /// Applies `∂/∂p^x_ν` to the x-leg only. With `|ν| = m` on an x-leg of
    /// degree `k + m`, the result carries the coefficients of the restriction
    /// `S_{k+m} → S_k × S_m` paired with `p_ν`.
    pub fn x_deriv(&self, nu: &Partition) -> Result<BiSymFunc> {
        let f = self.to_powersum();
        if let Some((dx, _)) = f.bidegree() {
            if nu.size() > dx {
                return Err(Error::invalid(format!(
                    "cannot differentiate an x-leg of degree {dx} by p_{nu}"
                )));
            }
        }
        let mut out = BiSymFunc::zero(Basis::PowerSum);
        let mut derivs: HashMap<Partition, SymFunc> = HashMap::new();
        for ((x, y), c) in &f.terms {
            let d = derivs
                .entry(x.clone())
                .or_insert_with(|| SymFunc::p(x.clone()).pderiv(nu));
            for (rest, cd) in d.terms() {
                out.add_term(&(rest.clone(), y.clone()), &(c * cd));
            }
        }
        Ok(out)
    }

    /// Plethysm on the y-leg, `p^x_α ⊗ p^y_β ↦ p^x_α ⊗ (p_β ∘ inner)`.
    /// Coefficients of `self` are inert.
    pub fn y_plethysm(&self, inner: &SymFunc) -> BiSymFunc {
        let f = self.to_powersum();
        let mut out = BiSymFunc::zero(Basis::PowerSum);
        let mut cache: HashMap<Partition, SymFunc> = HashMap::new();
        for ((x, y), c) in &f.terms {
            let g = cache
                .entry(y.clone())
                .or_insert_with(|| SymFunc::p(y.clone()).plethysm(inner));
            for (b, cb) in g.terms() {
                out.add_term(&(x.clone(), b.clone()), &(c * cb));
            }
        }
        out
    }

    /// Induction from `S_k × S_{n-k}` to `S_n`: multiplies the legs in `Λ`.
    pub fn induce_to_full(&self) -> SymFunc {
        let f = self.to_powersum();
        SymFunc::from_terms(
            Basis::PowerSum,
            f.terms.iter().map(|((x, y), c)| (x.union(y), c.clone())),
        )
    }

    /// Graded dimension, `k!(n-k)!·[p^x_(1^k) p^y_(1^{n-k})]`.
    pub fn dimension(&self) -> Result<QPoly> {
        if self.is_zero() {
            return Ok(QPoly::zero());
        }
        let (k, rest) = self.bidegree().ok_or(Error::Inhomogeneous)?;
        let f = self.to_powersum();
        let c = f.coeff(&Partition::column(k), &Partition::column(rest));
        Ok(c.scale(&rational(BigInt::from(factorial(k) * factorial(rest)))))
    }

    /// Every Schur coefficient lies in `Z_{≥0}[q]`.
    pub fn is_effective(&self) -> bool {
        self.to_schur().terms.values().all(QPoly::is_effective)
    }

    /// First term whose Schur coefficient is not in `Z_{≥0}[q]`.
    pub fn first_non_effective(&self) -> Option<(BiKey, QPoly)> {
        self.to_schur()
            .terms
            .into_iter()
            .find(|(_, c)| !c.is_effective())
    }

    /// `q^d f(1/q) = f(q)` coefficientwise.
    pub fn is_palindromic(&self, d: usize) -> bool {
        self.terms
            .values()
            .all(|c| c.reflect(d).as_ref() == Some(c))
    }
}

/// Restriction from `S_n` to `S_k × S_{n-k}`:
/// `Σ_{λ ⊢ n-k} (∂/∂p^x_λ f) p^y_λ`, with `f` read in the x-variables.
pub fn restrict_full(f: &SymFunc, k: usize) -> Result<BiSymFunc> {
    if f.is_zero() {
        return Ok(BiSymFunc::zero(Basis::PowerSum));
    }
    let n = f.degree().ok_or(Error::Inhomogeneous)?;
    if k > n {
        return Err(Error::invalid(format!("restriction index k = {k} exceeds degree {n}")));
    }
    let f = f.to_powersum();
    let mut out = BiSymFunc::zero(Basis::PowerSum);
    for lambda in partitions_shared(n - k).iter() {
        let d = f.pderiv(lambda);
        for (x, c) in d.terms() {
            out.add_term(&(x.clone(), lambda.clone()), c);
        }
    }
    Ok(out)
}

impl PartialEq for BiSymFunc {
    fn eq(&self, other: &Self) -> bool {
        if self.basis == other.basis {
            self.terms == other.terms
        } else {
            self.to_powersum().terms == other.to_powersum().terms
        }
    }
}

impl Eq for BiSymFunc {}

impl fmt::Debug for BiSymFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = match self.basis {
            Basis::PowerSum => "p",
            Basis::Schur => "s",
        };
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, ((x, y), c)) in self.sorted_terms().into_iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "({c}){tag}x{x}{tag}y{y}")?;
        }
        Ok(())
    }
}

impl Add for &BiSymFunc {
    type Output = BiSymFunc;
    fn add(self, rhs: &BiSymFunc) -> BiSymFunc {
        self.add_signed(rhs, false)
    }
}

impl Sub for &BiSymFunc {
    type Output = BiSymFunc;
    fn sub(self, rhs: &BiSymFunc) -> BiSymFunc {
        self.add_signed(rhs, true)
    }
}

impl Neg for &BiSymFunc {
    type Output = BiSymFunc;
    fn neg(self) -> BiSymFunc {
        self.map_coeffs(|c| -c)
    }
}

impl Mul for &BiSymFunc {
    type Output = BiSymFunc;
    fn mul(self, rhs: &BiSymFunc) -> BiSymFunc {
        self.multiply(rhs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::binomial;

    fn sp(parts: &[usize]) -> SymFunc {
        SymFunc::s(Partition::from(parts))
    }

    fn q(c: &[i64]) -> QPoly {
        QPoly::from_ints(c)
    }

    #[test]
    fn restriction_of_trivial() {
        for k in 0..=5 {
            let r = restrict_full(&SymFunc::h(5), k).unwrap();
            assert_eq!(r.to_schur().terms, BiSymFunc::schur(Partition::row(k), Partition::row(5 - k)).terms);
        }
        let f = &sp(&[3, 1]) + &sp(&[2, 2]);
        assert_eq!(restrict_full(&f, 0).unwrap(), BiSymFunc::from_y(&f));
        assert!(restrict_full(&f, 5).is_err());
    }

    #[test]
    fn restriction_of_e5_at_one_point() {
        // E^5_{0,2} restricted to S_1 x S_4
        let e5 = &sp(&[5]).scale(&q(&[1, 1, 1])) + &sp(&[4, 1]).scale(&q(&[0, 1]));
        let r = restrict_full(&e5, 1).unwrap().to_schur();
        let expected = &BiSymFunc::schur([1], [4]).scale(&q(&[1, 2, 1]))
            + &BiSymFunc::schur([1], [3, 1]).scale(&q(&[0, 1]));
        assert_eq!(r.terms, expected.to_schur().terms);
    }

    #[test]
    fn restriction_mirror_and_dimension() {
        let f = &(&sp(&[4, 2, 1]) + &sp(&[3, 3, 1]).scale(&q(&[0, 2]))) + &sp(&[7]);
        let dim = f.dimension().unwrap();
        for k in 0..=7 {
            let r = restrict_full(&f, k).unwrap();
            assert_eq!(r.swap(), restrict_full(&f, 7 - k).unwrap());
            assert_eq!(r.dimension().unwrap(), dim);
            let induced = r.induce_to_full().dimension().unwrap();
            let index = BigInt::from(binomial(7, k));
            assert_eq!(induced, dim.scale(&rational(index)));
        }
    }

    #[test]
    fn x_derivatives() {
        let f = BiSymFunc::schur([2], [1]);
        assert_eq!(f.x_deriv(&Partition::from([1])).unwrap().to_schur().terms, BiSymFunc::schur([1], [1]).terms);
        let half = QPoly::constant(num_rational::BigRational::new(1.into(), 2.into()));
        let d = f.x_deriv(&Partition::from([2])).unwrap().to_schur();
        assert_eq!(d.terms, BiSymFunc::schur(Partition::empty(), [1]).scale(&half).terms);
        let f = BiSymFunc::schur([2], [2]).scale(&q(&[1, 1]));
        let d = f.x_deriv(&Partition::from([1])).unwrap().to_schur();
        assert_eq!(d.terms, BiSymFunc::schur([1], [2]).scale(&q(&[1, 1])).terms);
        assert!(f.x_deriv(&Partition::from([3])).is_err());
    }

    #[test]
    fn x_derivative_decomposition_recovers_restriction() {
        // Σ_ν (∂/∂p^x_ν F) p^z_ν reassembles the restriction of the x-leg
        let f = &BiSymFunc::schur([3, 1], [2]).scale(&q(&[0, 1])) + &BiSymFunc::schur([4], [1, 1]);
        let m = 2;
        let mut total = BiSymFunc::zero(Basis::PowerSum);
        for nu in partitions_shared(m).iter() {
            let d = f.x_deriv(nu).unwrap();
            // move p_ν into the y-leg to compare with restricting x
            let shifted = d.multiply(&BiSymFunc::from_y(&SymFunc::p(nu.clone())));
            total = &total + &shifted;
        }
        let mut expected = BiSymFunc::zero(Basis::PowerSum);
        for ((x, y), c) in f.to_powersum().terms() {
            let r = restrict_full(&SymFunc::p(x.clone()), 2).unwrap();
            let r = r.multiply(&BiSymFunc::from_y(&SymFunc::p(y.clone()))).scale(c);
            expected = &expected + &r;
        }
        assert_eq!(total, expected);
    }

    #[test]
    fn induction_examples() {
        let f = BiSymFunc::schur([1], [4]);
        assert_eq!(f.induce_to_full().to_schur().terms(), (&sp(&[5]) + &sp(&[4, 1])).terms());
        let g = &sp(&[3, 1]) + &sp(&[1, 1, 1, 1]);
        assert_eq!(BiSymFunc::from_y(&g).induce_to_full(), g);
        let t = BiSymFunc::tensor(&sp(&[4]).scale(&q(&[1, 1, 1])), &sp(&[3]).scale(&q(&[0, 1])));
        let expected = (&sp(&[4]) * &sp(&[3])).scale(&q(&[0, 1, 1, 1]));
        assert_eq!(t.induce_to_full(), expected);
    }

    #[test]
    fn ring_structure() {
        let f = BiSymFunc::schur([2, 1], [1]).scale(&q(&[1, 3]));
        assert_eq!(&f * &BiSymFunc::one(), f);
        let g = &BiSymFunc::schur([1], Partition::empty()) * &BiSymFunc::schur(Partition::empty(), [2]);
        assert_eq!(g, BiSymFunc::schur([1], [2]));
        let d = f.dimension().unwrap().eval(&rational(1));
        let d2 = f.scale(&q(&[1, 1])).dimension().unwrap().eval(&rational(1));
        assert_eq!(d2, d * rational(2));
        assert_eq!(g.bidegree(), Some((1, 2)));
    }

    #[test]
    fn y_plethysm_leaves_x_alone() {
        let f = BiSymFunc::schur([1], [2]).scale(&q(&[0, 1]));
        let out = f.y_plethysm(&sp(&[3])).to_schur();
        let expected = BiSymFunc::tensor(&sp(&[1]), &sp(&[2]).plethysm(&sp(&[3]))).scale(&q(&[0, 1]));
        assert_eq!(out, expected);
    }
}
