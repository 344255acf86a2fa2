//! Integer partitions and the combinatorics built on them.
//!
//! A [`Partition`] is stored as its weakly decreasing list of positive parts.
//! The derived `Ord` (size first, then lexicographic on parts) only exists so
//! partitions can key ordered maps; the mathematically meaningful order is
//! [`Partition::compare`], which compares conjugates lexicographically.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigUint;
use num_traits::One;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Partition {
    parts: Vec<usize>,
    size: usize,
}

impl Partition {
    pub fn empty() -> Self {
        Partition::default()
    }

    /// Builds a partition from arbitrary positive parts; zeros are dropped and
    /// the remainder sorted into decreasing order.
    pub fn new(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        let size = parts.iter().sum();
        Partition { parts, size }
    }

    /// Accepts only an already-canonical part list.
    pub fn from_parts(parts: &[usize]) -> Result<Self> {
        if parts.iter().any(|&p| p == 0) {
            return Err(Error::invalid(format!("partition {parts:?} has a zero part")));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::invalid(format!("partition {parts:?} is not weakly decreasing")));
        }
        Ok(Partition {
            size: parts.iter().sum(),
            parts: parts.to_vec(),
        })
    }

    /// The one-row partition `(n)`; empty for `n = 0`.
    pub fn row(n: usize) -> Self {
        Partition::new(vec![n])
    }

    /// The one-column partition `(1^n)`.
    pub fn column(n: usize) -> Self {
        Partition::new(vec![1; n])
    }

    /// `(part^count)`.
    pub fn rectangle(part: usize, count: usize) -> Self {
        Partition::new(vec![part; count])
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// `λ_i` with 1-based indexing; zero past the last part.
    pub fn part(&self, i: usize) -> usize {
        if i == 0 {
            return 0;
        }
        self.parts.get(i - 1).copied().unwrap_or(0)
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.parts.first().copied().unwrap_or(0);
        let parts = (1..=width)
            .map(|i| self.parts.iter().take_while(|&&p| p >= i).count())
            .collect();
        Partition {
            parts,
            size: self.size,
        }
    }

    /// Multiset union of the parts.
    pub fn union(&self, other: &Partition) -> Partition {
        let mut parts = Vec::with_capacity(self.len() + other.len());
        parts.extend_from_slice(&self.parts);
        parts.extend_from_slice(&other.parts);
        Partition::new(parts)
    }

    /// Componentwise sum, missing parts counting as zero.
    pub fn sum(&self, other: &Partition) -> Partition {
        let len = self.len().max(other.len());
        Partition::new((1..=len).map(|i| self.part(i) + other.part(i)).collect())
    }

    /// Every part multiplied by `factor`.
    pub fn scale(&self, factor: usize) -> Partition {
        Partition::new(self.parts.iter().map(|p| p * factor).collect())
    }

    /// Removes the parts of `sub` from `self` as multisets, or `None` when
    /// `sub` is not contained in `self`.
    pub fn remove(&self, sub: &Partition) -> Option<Partition> {
        let mut rest = self.parts.clone();
        for p in &sub.parts {
            let pos = rest.iter().position(|q| q == p)?;
            rest.remove(pos);
        }
        Some(Partition::new(rest))
    }

    /// The order on partitions of a fixed size: `λ > μ` when the first
    /// differing column of the conjugates is longer in `λ`.
    pub fn compare(&self, other: &Partition) -> Result<Ordering> {
        if self.size != other.size {
            return Err(Error::SizeMismatch(self.size, other.size));
        }
        Ok(self.column_order(other))
    }

    // Conjugate-lexicographic comparison without the size check.
    pub(crate) fn column_order(&self, other: &Partition) -> Ordering {
        let width = self.part(1).max(other.part(1));
        for i in 1..=width {
            let a = self.parts.iter().take_while(|&&p| p >= i).count();
            let b = other.parts.iter().take_while(|&&p| p >= i).count();
            match a.cmp(&b) {
                Ordering::Equal => continue,
                ord => return ord,
            }
        }
        Ordering::Equal
    }

    /// `j ↦ m_j(λ)`, the number of parts equal to `j`.
    pub fn multiplicities(&self) -> BTreeMap<usize, usize> {
        let mut m = BTreeMap::new();
        for &p in &self.parts {
            *m.entry(p).or_insert(0) += 1;
        }
        m
    }

    /// `z_λ = ∏ j^{m_j} m_j!`, the order of the centralizer of a permutation of
    /// cycle type `λ`.
    pub fn centralizer_order(&self) -> BigUint {
        let mut z = BigUint::one();
        for (j, m) in self.multiplicities() {
            z *= BigUint::from(j).pow(m as u32) * factorial(m);
        }
        z
    }

    /// Dimension of the irreducible representation `V_λ` by the hook-length
    /// formula.
    pub fn irrep_dimension(&self) -> Result<BigUint> {
        if self.is_empty() {
            return Err(Error::invalid("irrep_dimension of the empty partition"));
        }
        let conj = self.conjugate();
        let mut hooks = BigUint::one();
        for (i, &row) in self.parts.iter().enumerate() {
            for j in 0..row {
                let arm = row - j - 1;
                let leg = conj.parts[j] - i - 1;
                hooks *= BigUint::from(arm + leg + 1);
            }
        }
        Ok(factorial(self.size) / hooks)
    }
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.size
            .cmp(&other.size)
            .then_with(|| self.parts.cmp(&other.parts))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str(")")
    }
}

impl From<&[usize]> for Partition {
    fn from(parts: &[usize]) -> Self {
        Partition::new(parts.to_vec())
    }
}

impl<const N: usize> From<[usize; N]> for Partition {
    fn from(parts: [usize; N]) -> Self {
        Partition::new(parts.to_vec())
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.parts.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let parts = Vec::<usize>::deserialize(deserializer)?;
        Partition::from_parts(&parts).map_err(serde::de::Error::custom)
    }
}

/// All partitions of `n`, each once, sorted decreasing under
/// [`Partition::compare`]: `(1^n)` first, `(n)` last.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    generate(n, n, &mut current, &mut out);
    out.sort_by(|a, b| b.column_order(a));
    out
}

/// Shared, memoized copy of [`partitions_of`].
pub fn partitions_shared(n: usize) -> Arc<Vec<Partition>> {
    static CACHE: OnceLock<RwLock<Vec<Option<Arc<Vec<Partition>>>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| RwLock::new(Vec::new()));
    if let Some(Some(list)) = cache.read().unwrap().get(n) {
        return Arc::clone(list);
    }
    let list = Arc::new(partitions_of(n));
    let mut guard = cache.write().unwrap();
    if guard.len() <= n {
        guard.resize(n + 1, None);
    }
    guard[n] = Some(Arc::clone(&list));
    list
}

fn generate(remaining: usize, max: usize, current: &mut Vec<usize>, out: &mut Vec<Partition>) {
    if remaining == 0 {
        out.push(Partition::new(current.clone()));
        return;
    }
    for p in (1..=max.min(remaining)).rev() {
        current.push(p);
        generate(remaining - p, p, current, out);
        current.pop();
    }
}

pub fn factorial(n: usize) -> BigUint {
    (2..=n).fold(BigUint::one(), |acc, i| acc * BigUint::from(i))
}

pub fn binomial(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::from(0u32);
    }
    let k = k.min(n - k);
    (0..k).fold(BigUint::one(), |acc, i| acc * BigUint::from(n - i) / BigUint::from(i + 1))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::from(parts)
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(p(&[4, 2, 1]).conjugate(), p(&[3, 2, 1, 1]));
        assert_eq!(p(&[5]).conjugate(), Partition::column(5));
        assert_eq!(p(&[2, 2]).conjugate(), p(&[2, 2]));
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
    }

    #[test]
    fn union_and_sum() {
        assert_eq!(p(&[3, 1]).union(&p(&[2, 2])), p(&[3, 2, 2, 1]));
        assert_eq!(p(&[4, 1]).union(&Partition::empty()), p(&[4, 1]));
        assert_eq!(p(&[2]).union(&p(&[2])), p(&[2, 2]));
        assert_eq!(p(&[3, 1]).sum(&p(&[2, 2])), p(&[5, 3]));
        assert_eq!(p(&[2, 2, 2]).sum(&p(&[2, 1])), p(&[4, 3, 2]));
        assert_eq!(p(&[4, 1]).sum(&Partition::empty()), p(&[4, 1]));
    }

    #[test]
    fn compare_examples() {
        assert_eq!(p(&[2, 2]).compare(&p(&[3, 1])).unwrap(), Ordering::Greater);
        assert_eq!(
            Partition::column(4).compare(&Partition::row(4)).unwrap(),
            Ordering::Greater
        );
        assert_eq!(p(&[3, 1]).compare(&p(&[3, 1])).unwrap(), Ordering::Equal);
        assert!(matches!(
            p(&[3]).compare(&p(&[2])),
            Err(Error::SizeMismatch(3, 2))
        ));
    }

    #[test]
    fn partition_counts() {
        assert_eq!(partitions_of(0), vec![Partition::empty()]);
        assert_eq!(partitions_of(4).len(), 5);
        // p(n) from Euler's pentagonal recurrence
        let mut pn = vec![1i64];
        for n in 1..=12i64 {
            let mut total = 0;
            for k in 1.. {
                let g1 = k * (3 * k - 1) / 2;
                if g1 > n {
                    break;
                }
                let sign = if k % 2 == 1 { 1 } else { -1 };
                total += sign * pn[(n - g1) as usize];
                let g2 = k * (3 * k + 1) / 2;
                if g2 <= n {
                    total += sign * pn[(n - g2) as usize];
                }
            }
            pn.push(total);
        }
        for n in 0..=12 {
            assert_eq!(partitions_of(n).len() as i64, pn[n], "p({n})");
        }
        assert_eq!(partitions_of(8).len(), 22);
    }

    #[test]
    fn partitions_are_distinct_and_ordered() {
        let parts = partitions_of(7);
        assert_eq!(parts.first().unwrap(), &Partition::column(7));
        assert_eq!(parts.last().unwrap(), &Partition::row(7));
        for w in parts.windows(2) {
            assert_eq!(w[0].compare(&w[1]).unwrap(), Ordering::Greater);
        }
    }

    #[test]
    fn compare_is_total_order() {
        for n in 0..=10 {
            let parts = partitions_of(n);
            for a in &parts {
                for b in &parts {
                    let ab = a.compare(b).unwrap();
                    assert_eq!(ab, b.compare(a).unwrap().reverse());
                    assert_eq!(ab == Ordering::Equal, a == b);
                    for c in &parts {
                        if ab == Ordering::Greater && b.compare(c).unwrap() == Ordering::Greater {
                            assert_eq!(a.compare(c).unwrap(), Ordering::Greater);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn union_is_conjugate_of_sum_of_conjugates() {
        for n in 0..=7 {
            for a in partitions_of(n) {
                for b in partitions_of(n) {
                    let via_sum = a.conjugate().sum(&b.conjugate()).conjugate();
                    assert_eq!(a.union(&b), via_sum);
                }
            }
        }
    }

    #[test]
    fn centralizer_orders() {
        assert_eq!(p(&[2, 1]).centralizer_order(), BigUint::from(2u32));
        assert_eq!(p(&[1, 1, 1]).centralizer_order(), BigUint::from(6u32));
        assert_eq!(p(&[3]).centralizer_order(), BigUint::from(3u32));
        for n in 0..=10 {
            let total: BigUint = partitions_of(n)
                .iter()
                .map(|l| factorial(n) / l.centralizer_order())
                .sum();
            assert_eq!(total, factorial(n));
        }
    }

    #[test]
    fn hook_dimensions() {
        assert_eq!(p(&[6]).irrep_dimension().unwrap(), BigUint::from(1u32));
        assert_eq!(p(&[2, 1]).irrep_dimension().unwrap(), BigUint::from(2u32));
        assert!(Partition::empty().irrep_dimension().is_err());
        for n in 1..=10 {
            let total: BigUint = partitions_of(n)
                .iter()
                .map(|l| l.irrep_dimension().unwrap().pow(2))
                .sum();
            assert_eq!(total, factorial(n));
        }
    }

    #[test]
    fn hook_dimension_by_brute_force() {
        // count standard Young tableaux of shape (4,2,1) by removing corners
        fn syt(shape: Vec<usize>) -> u64 {
            if shape.iter().all(|&r| r == 0) {
                return 1;
            }
            let mut total = 0;
            for i in 0..shape.len() {
                let next = shape.get(i + 1).copied().unwrap_or(0);
                if shape[i] > next {
                    let mut s = shape.clone();
                    s[i] -= 1;
                    total += syt(s);
                }
            }
            total
        }
        assert_eq!(syt(vec![4, 2, 1]), 35);
        assert_eq!(p(&[4, 2, 1]).irrep_dimension().unwrap(), BigUint::from(35u32));
    }

    #[test]
    fn multiplicity_vectors() {
        let m = p(&[2, 2, 1]).multiplicities();
        assert_eq!(m, BTreeMap::from([(1, 1), (2, 2)]));
        assert_eq!(p(&[5]).multiplicities(), BTreeMap::from([(5, 1)]));
        assert!(Partition::empty().multiplicities().is_empty());
    }

    #[test]
    fn from_parts_validates() {
        assert!(Partition::from_parts(&[1, 2]).is_err());
        assert!(Partition::from_parts(&[2, 0]).is_err());
        assert_eq!(Partition::from_parts(&[3, 3, 1]).unwrap().size(), 7);
    }

    #[test]
    fn json_form() {
        let s = serde_json::to_string(&p(&[4, 2, 1])).unwrap();
        assert_eq!(s, "[4,2,1]");
        assert_eq!(serde_json::to_string(&Partition::empty()).unwrap(), "[]");
        let back: Partition = serde_json::from_str("[4,2,1]").unwrap();
        assert_eq!(back, p(&[4, 2, 1]));
        assert!(serde_json::from_str::<Partition>("[1,4]").is_err());
    }

    #[test]
    fn remove_submultiset() {
        assert_eq!(p(&[3, 2, 1, 1]).remove(&p(&[1, 1])), Some(p(&[3, 2])));
        assert_eq!(p(&[3, 2]).remove(&p(&[1])), None);
    }
}
