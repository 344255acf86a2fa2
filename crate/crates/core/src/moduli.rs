//! Equivariant Poincaré polynomials `E^n_{k,l}(q)` of the moduli spaces of
//! rational curves with `k` marked points of weight 1 and `n - k` points of
//! weight `1/l`.
//!
//! The spaces form a tower of blow-ups
//! `M^n_{k,1} → M^n_{k,2} → … → M^n_{k,r(n,k)}` whose centres are unions of
//! smaller spaces of the same kind. Each step adds a correction built from
//! `E^{n-lm}_{k+m,l+1}`, the cohomology of `(H^+(P^{l-1}))^{⊗m}`, and a
//! wreath-product induction. For `k = 0` the bottom of the tower is the GIT
//! quotient of `(P^1)^n` (Kirwan's resolution when `n` is even), which has a
//! closed form.
//!
//! Traversal: for `k = 0` the engine walks down in `l` from the GIT base; for
//! `k ≥ 1` it starts from the restriction of `E^n_{0,1}` at `l = 2` and walks
//! up, subtracting corrections. Every correction references strictly smaller
//! `n`, so the recursion terminates.

use std::collections::HashMap;
use std::path::PathBuf;
use std::sync::{Arc, RwLock};

use crate::bigraded::{restrict_full, BiSymFunc};
use crate::cache::DiskCache;
use crate::error::{Error, Result};
use crate::partition::{partitions_shared, Partition};
use crate::qpoly::QPoly;
use crate::symfunc::{Basis, SymFunc};

/// Normalized `(n, k, l)` with `l` clamped to `r(n, k)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MemoKey {
    pub n: usize,
    pub k: usize,
    pub l: usize,
}

impl MemoKey {
    pub fn new(n: usize, k: usize, l: usize) -> Result<Self> {
        if k > n {
            return Err(Error::invalid(format!("k = {k} exceeds n = {n}")));
        }
        if l == 0 {
            return Err(Error::invalid("l must be at least 1"));
        }
        let top = r(n, k)?;
        Ok(MemoKey {
            n,
            k,
            l: l.min(top),
        })
    }
}

/// Last level of the blow-up tower for weights `(1^k, (1/l)^{n-k})`.
pub fn r(n: usize, k: usize) -> Result<usize> {
    if n < 3 {
        return Err(Error::invalid(format!("n = {n} is below 3")));
    }
    if k > n {
        return Err(Error::invalid(format!("k = {k} exceeds n = {n}")));
    }
    Ok(match k {
        0 => (n - 1) / 2,
        1 => n - 2,
        _ if k == n => 1,
        _ => n - k,
    })
}

/// `P_n(q) = Σ_{i=0}^{⌊n/2⌋} s_(n-i) s_(i) (q^{n-i} - q^{i+1})`.
pub fn p_polynomial(n: usize) -> SymFunc {
    let mut total = SymFunc::zero(Basis::PowerSum);
    for i in 0..=n / 2 {
        let weight = &QPoly::q_pow(n - i) - &QPoly::q_pow(i + 1);
        if weight.is_zero() {
            continue;
        }
        let term = SymFunc::h(n - i).multiply(&SymFunc::h(i)).scale(&weight);
        total = &total + &term;
    }
    total
}

/// Graded `S_m`-character of `(H^+(P^{l-1}))^{⊗m}`: the sum over
/// `(m_1, …, m_{l-1})` with `Σ m_j = m` of `∏ s_(m_j) q^{Σ j m_j}`.
/// Zero for `l = 1`.
pub fn fiber_character(m: usize, l: usize) -> SymFunc {
    let mut total = SymFunc::zero(Basis::PowerSum);
    if l < 2 {
        return total;
    }
    let mut counts = vec![0usize; l - 1];
    distribute(m, 0, &mut counts, &mut |counts| {
        let weight: usize = counts.iter().enumerate().map(|(j, c)| (j + 1) * c).sum();
        let prod = counts
            .iter()
            .fold(SymFunc::one(), |acc, &c| acc.multiply(&SymFunc::h(c)));
        total = &total + &prod.scale(&QPoly::q_pow(weight));
    });
    total
}

fn distribute(left: usize, slot: usize, counts: &mut Vec<usize>, visit: &mut impl FnMut(&[usize])) {
    if slot + 1 == counts.len() {
        counts[slot] = left;
        visit(counts);
        return;
    }
    for c in 0..=left {
        counts[slot] = c;
        distribute(left - c, slot + 1, counts, visit);
    }
}

fn q3_minus_q() -> QPoly {
    QPoly::from_ints(&[0, -1, 0, 1])
}

/// Divides every Schur coefficient by `q^3 - q`, failing on any remainder.
fn divide_by_q3_minus_q(f: &SymFunc) -> Result<SymFunc> {
    let divisor = q3_minus_q();
    let schur = f.to_schur();
    let mut out = SymFunc::zero(Basis::Schur);
    for (lambda, c) in schur.terms() {
        let (quot, rem) = c.div_rem(&divisor);
        if !rem.is_zero() {
            return Err(Error::InexactDivision {
                partition: lambda.to_string(),
                remainder: rem.to_string(),
            });
        }
        out.add_term(lambda, &quot);
    }
    Ok(out)
}

/// `E^n_{0,(n-1)/2} = P_n(q) / (q^3 - q)` for odd `n`.
pub fn base_odd(n: usize) -> Result<BiSymFunc> {
    if n < 3 || n % 2 == 0 {
        return Err(Error::invalid(format!("base_odd needs odd n >= 3, got {n}")));
    }
    let quotient = divide_by_q3_minus_q(&p_polynomial(n))?;
    Ok(BiSymFunc::from_y(&quotient))
}

/// `E^n_{0,m-1}` for `n = 2m`, from Kirwan's resolution of the GIT quotient:
/// `[P_n - s_(m)^2 q^m + (s_(2)∘s_(m)) q + (s_(1,1)∘s_(m)) q^2] / (q^3 - q)`
/// plus `s_(2) ∘ (∂/∂p^x_1 E^{m+1}_{1,m-1})`.
pub fn base_even(n: usize) -> Result<BiSymFunc> {
    if n < 4 || n % 2 == 1 {
        return Err(Error::invalid(format!("base_even needs even n >= 4, got {n}")));
    }
    let m = n / 2;
    let hm = SymFunc::h(m);
    let numerator = &(&p_polynomial(n) - &hm.pow(2).scale(&QPoly::q_pow(m)))
        + &(&SymFunc::h(2).plethysm(&hm).scale(&QPoly::q_pow(1))
            + &SymFunc::e(2).plethysm(&hm).scale(&QPoly::q_pow(2)));
    let quotient = divide_by_q3_minus_q(&numerator)?;

    let branch = projective_base(m + 1)?
        .x_deriv(&Partition::row(1))?
        .induce_to_full();
    let exceptional = SymFunc::h(2).plethysm(&branch);
    Ok(BiSymFunc::from_y(&(&quotient + &exceptional)))
}

/// `E^n_{1,n-2} = s^x_(1) s^y_(n-1) (1 + q + … + q^{n-3})`; the space is
/// `P^{n-3}`.
pub fn projective_base(n: usize) -> Result<BiSymFunc> {
    if n < 3 {
        return Err(Error::invalid(format!("projective_base needs n >= 3, got {n}")));
    }
    Ok(BiSymFunc::schur([1], Partition::row(n - 1)).scale(&QPoly::geometric(n - 3)))
}

/// Memoizing evaluator for `E^n_{k,l}`, optionally backed by a [`DiskCache`].
///
/// The memo is shared across threads: lookups take a read lock, and a value
/// computed twice by racing threads is identical, so the second insert is
/// harmless.
pub struct Engine {
    memo: RwLock<HashMap<MemoKey, Arc<BiSymFunc>>>,
    schur: RwLock<HashMap<MemoKey, Arc<BiSymFunc>>>,
    disk: Option<DiskCache>,
}

impl Default for Engine {
    fn default() -> Self {
        Engine::new()
    }
}

impl Engine {
    pub fn new() -> Self {
        Engine {
            memo: RwLock::new(HashMap::new()),
            schur: RwLock::new(HashMap::new()),
            disk: None,
        }
    }

    pub fn with_cache(dir: impl Into<PathBuf>) -> Result<Self> {
        Ok(Engine {
            memo: RwLock::new(HashMap::new()),
            schur: RwLock::new(HashMap::new()),
            disk: Some(DiskCache::open(dir)?),
        })
    }

    pub fn disk_cache(&self) -> Option<&DiskCache> {
        self.disk.as_ref()
    }

    pub fn memo_len(&self) -> usize {
        self.memo.read().unwrap().len()
    }

    /// `E^n_{k,l}(q)` in the power-sum basis.
    pub fn e(&self, n: usize, k: usize, l: usize) -> Result<Arc<BiSymFunc>> {
        let key = MemoKey::new(n, k, l)?;
        if let Some(v) = self.memo.read().unwrap().get(&key) {
            return Ok(Arc::clone(v));
        }
        if let Some(disk) = &self.disk {
            if let Some(schur) = disk.load(key)? {
                let v = Arc::new(schur.to_powersum());
                self.remember(key, &v, schur);
                return Ok(v);
            }
        }
        let value = self.compute(key)?;
        let schur = value.to_schur();
        if let Some(((x, y), coeff)) = schur.first_non_effective() {
            return Err(Error::NotEffective {
                n: key.n,
                k: key.k,
                l: key.l,
                term: format!("s^x{x} s^y{y}"),
                coeff: coeff.to_string(),
            });
        }
        if let Some(disk) = &self.disk {
            disk.store(key, &schur)?;
        }
        let value = Arc::new(value);
        self.remember(key, &value, schur);
        Ok(value)
    }

    fn remember(&self, key: MemoKey, value: &Arc<BiSymFunc>, schur: BiSymFunc) {
        self.memo
            .write()
            .unwrap()
            .entry(key)
            .or_insert_with(|| Arc::clone(value));
        self.schur
            .write()
            .unwrap()
            .entry(key)
            .or_insert_with(|| Arc::new(schur));
    }

    /// `E^n_{k,l}(q)` in the Schur basis.
    pub fn e_schur(&self, n: usize, k: usize, l: usize) -> Result<Arc<BiSymFunc>> {
        let key = MemoKey::new(n, k, l)?;
        self.e(n, k, l)?;
        Ok(Arc::clone(&self.schur.read().unwrap()[&key]))
    }

    /// The `S_n`-character of `H^*(M̄_{0,n})`, i.e. `E^n_{0,1}` as an element
    /// of `Λ[q]`.
    pub fn full_character(&self, n: usize) -> Result<SymFunc> {
        Ok(self.e(n, 0, 1)?.induce_to_full())
    }

    fn compute(&self, key: MemoKey) -> Result<BiSymFunc> {
        let MemoKey { n, k, l } = key;
        if n == 3 {
            return Ok(BiSymFunc::schur(Partition::row(k), Partition::row(3 - k)).to_powersum());
        }
        if k == n {
            return Ok(self.e(n, 0, 1)?.swap());
        }
        if k == 0 {
            let top = r(n, 0)?;
            if l == top {
                let base = if n % 2 == 1 { base_odd(n)? } else { base_even(n)? };
                return Ok(base.to_powersum());
            }
            if l == 1 {
                // M^n_{0,1} → M^n_{0,2} is an isomorphism
                return Ok((*self.e(n, 0, 2)?).clone());
            }
            let mut total = (*self.e(n, 0, l + 1)?).clone();
            for m in 1..=n / (l + 1) {
                total = &total + &self.correction(n, 0, m, l)?;
            }
            return Ok(total);
        }
        if l <= 2 {
            return restrict_full(&self.full_character(n)?, k);
        }
        let mut total = (*self.e(n, k, l - 1)?).clone();
        for m in 1..=(n - k) / l {
            total = &total - &self.correction(n, k, m, l - 1)?;
        }
        Ok(total)
    }

    /// The contribution of the `m`-fold intersections of the blow-up centres
    /// of `M^n_{k,l} → M^n_{k,l+1}`:
    ///
    /// `Σ_{ν ⊢ m} (∂/∂p^x_ν E^{n-lm}_{k+m,l+1}) · ((p_ν * F_{m,l}) ∘ s_(l+1))`
    ///
    /// with the second factor in the y-variables.
    pub fn correction(&self, n: usize, k: usize, m: usize, l: usize) -> Result<BiSymFunc> {
        if m == 0 || l == 0 || k > n || m * (l + 1) > n - k {
            return Err(Error::invalid(format!(
                "correction({n},{k},{m},{l}) outside 1 <= m <= (n-k)/(l+1)"
            )));
        }
        if n < l * m + 3 {
            return Err(Error::invalid(format!(
                "correction({n},{k},{m},{l}) references a space with fewer than 3 points"
            )));
        }
        let fiber = fiber_character(m, l);
        if fiber.is_zero() {
            return Ok(BiSymFunc::zero(Basis::PowerSum));
        }
        let sub = self.e(n - l * m, k + m, l + 1)?;
        let collide = SymFunc::h(l + 1);
        let mut total = BiSymFunc::zero(Basis::PowerSum);
        for nu in partitions_shared(m).iter() {
            let coefficients = sub.x_deriv(nu)?;
            if coefficients.is_zero() {
                continue;
            }
            let clusters = SymFunc::p(nu.clone()).kronecker(&fiber)?.plethysm(&collide);
            total = &total + &coefficients.multiply(&BiSymFunc::from_y(&clusters));
        }
        Ok(total)
    }

    /// Betti numbers of `M̄_{0,n}` as a polynomial in `q` (half degree).
    pub fn poincare_polynomial(&self, n: usize) -> Result<QPoly> {
        self.e(n, 0, 1)?.dimension()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(c: &[i64]) -> QPoly {
        QPoly::from_ints(c)
    }

    fn s(parts: &[usize]) -> SymFunc {
        SymFunc::s(Partition::from(parts))
    }

    #[test]
    fn r_values() {
        assert_eq!(r(7, 0).unwrap(), 3);
        assert_eq!(r(4, 2).unwrap(), 2);
        assert_eq!(r(5, 1).unwrap(), 3);
        assert_eq!(r(6, 6).unwrap(), 1);
        assert_eq!(r(6, 4).unwrap(), 2);
        assert!(r(2, 0).is_err());
    }

    #[test]
    fn memo_key_clamps() {
        assert_eq!(MemoKey::new(7, 0, 9).unwrap(), MemoKey { n: 7, k: 0, l: 3 });
        assert!(MemoKey::new(5, 6, 1).is_err());
        assert!(MemoKey::new(5, 1, 0).is_err());
    }

    #[test]
    fn p_polynomial_small() {
        assert_eq!(p_polynomial(3).to_schur(), s(&[3]).scale(&q(&[0, -1, 0, 1])));
        let p5 = divide_by_q3_minus_q(&p_polynomial(5)).unwrap();
        let expected = &s(&[5]).scale(&q(&[1, 1, 1])) + &s(&[4, 1]).scale(&q(&[0, 1]));
        assert_eq!(p5, expected);
    }

    #[test]
    fn fiber_characters() {
        assert_eq!(fiber_character(1, 2).to_schur(), s(&[1]).scale(&q(&[0, 1])));
        assert_eq!(fiber_character(2, 2).to_schur(), s(&[2]).scale(&q(&[0, 0, 1])));
        // (2,0), (1,1), (0,2) over I_{3,k}
        let expected = &(&s(&[2]).scale(&q(&[0, 0, 1])) + &(&s(&[1]) * &s(&[1])).scale(&q(&[0, 0, 0, 1])))
            + &s(&[2]).scale(&q(&[0, 0, 0, 0, 1]));
        assert_eq!(fiber_character(2, 3), expected);
        assert!(fiber_character(3, 1).is_zero());
        // dimension (l-1)^m
        for m in 1..=4 {
            for l in 2..=4 {
                let dim = fiber_character(m, l).dimension().unwrap();
                let total = dim.eval(&num_rational::BigRational::from_integer(1.into()));
                assert_eq!(total, num_rational::BigRational::from_integer(((l - 1) as i64).pow(m as u32).into()));
            }
        }
    }

    #[test]
    fn odd_bases() {
        assert_eq!(base_odd(3).unwrap().induce_to_full(), s(&[3]));
        let e7 = base_odd(7).unwrap().induce_to_full();
        let expected = &(&s(&[7]).scale(&q(&[1, 1, 2, 1, 1])) + &s(&[6, 1]).scale(&q(&[0, 1, 1, 1])))
            + &s(&[5, 2]).scale(&q(&[0, 0, 1]));
        assert_eq!(e7, expected);
        assert!(base_odd(4).is_err());
    }

    #[test]
    fn even_bases() {
        let e4 = base_even(4).unwrap();
        assert_eq!(e4.dimension().unwrap(), q(&[1, 1]));
        assert_eq!(e4.induce_to_full(), s(&[4]).scale(&q(&[1, 1])));
        let e6 = base_even(6).unwrap().induce_to_full();
        let expected = &(&s(&[6]).scale(&q(&[1, 2, 2, 1])) + &s(&[5, 1]).scale(&q(&[0, 1, 1])))
            + &s(&[4, 2]).scale(&q(&[0, 1, 1]));
        assert_eq!(e6, expected);
    }

    #[test]
    fn corrections_for_seven_points() {
        let engine = Engine::new();
        let c1 = engine.correction(7, 0, 1, 2).unwrap().induce_to_full();
        let expected = (&s(&[4]) * &s(&[3])).scale(&q(&[0, 1, 1, 1]));
        assert_eq!(c1, expected);
        let c2 = engine.correction(7, 0, 2, 2).unwrap().induce_to_full();
        let expected = (&s(&[1]) * &s(&[2]).plethysm(&s(&[3]))).scale(&q(&[0, 0, 1]));
        assert_eq!(c2, expected);
        let c = engine.correction(5, 1, 1, 2).unwrap();
        let expected = BiSymFunc::tensor(&s(&[1]), &(&s(&[1]) * &s(&[3]))).scale(&q(&[0, 1]));
        assert_eq!(c, expected);
        assert!(engine.correction(7, 0, 3, 2).is_err());
    }

    #[test]
    fn small_spaces() {
        let engine = Engine::new();
        assert_eq!(*engine.e_schur(3, 0, 1).unwrap(), BiSymFunc::schur(Partition::empty(), [3]));
        assert_eq!(*engine.e_schur(3, 2, 5).unwrap(), BiSymFunc::schur([2], [1]));
        assert_eq!(
            *engine.e_schur(4, 2, 3).unwrap(),
            BiSymFunc::schur([2], [2]).scale(&q(&[1, 1]))
        );
        assert_eq!(*engine.e_schur(5, 1, 3).unwrap(), projective_base(5).unwrap());
        assert_eq!(engine.e(6, 6, 1).unwrap().swap(), *engine.e(6, 0, 1).unwrap());
        assert!(engine.e(2, 0, 1).is_err());
    }

    #[test]
    fn poincare_polynomials() {
        let engine = Engine::new();
        assert_eq!(engine.poincare_polynomial(4).unwrap(), q(&[1, 1]));
        assert_eq!(engine.poincare_polynomial(5).unwrap(), q(&[1, 5, 1]));
        assert_eq!(engine.poincare_polynomial(6).unwrap(), q(&[1, 16, 16, 1]));
        assert_eq!(engine.poincare_polynomial(7).unwrap(), q(&[1, 42, 127, 42, 1]));
        assert_eq!(engine.poincare_polynomial(8).unwrap(), q(&[1, 99, 715, 715, 99, 1]));
    }

    #[test]
    fn recursion_matches_projective_space() {
        let engine = Engine::new();
        for n in 4..=9 {
            let top = r(n, 1).unwrap();
            assert_eq!(*engine.e(n, 1, top).unwrap(), projective_base(n).unwrap(), "n={n}");
        }
    }
}
