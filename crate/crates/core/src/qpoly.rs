//! Univariate polynomials in `q` over exact rationals.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::de::{MapAccess, Visitor};
use serde::ser::SerializeMap;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// Dense coefficient vector indexed by exponent. The last stored
/// coefficient is never zero, so the zero polynomial is the empty vector.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct QPoly {
    coeffs: Vec<BigRational>,
}

impl QPoly {
    pub fn zero() -> Self {
        QPoly::default()
    }

    pub fn one() -> Self {
        QPoly::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        QPoly::from_coeffs(vec![c])
    }

    pub fn monomial(c: BigRational, exp: usize) -> Self {
        let mut coeffs = vec![BigRational::zero(); exp + 1];
        coeffs[exp] = c;
        QPoly::from_coeffs(coeffs)
    }

    /// `q^exp`.
    pub fn q_pow(exp: usize) -> Self {
        QPoly::monomial(BigRational::one(), exp)
    }

    pub fn from_coeffs(coeffs: Vec<BigRational>) -> Self {
        let mut p = QPoly { coeffs };
        p.trim();
        p
    }

    /// Integer coefficients, lowest degree first.
    pub fn from_ints(coeffs: &[i64]) -> Self {
        QPoly::from_coeffs(coeffs.iter().map(|&c| BigRational::from_integer(c.into())).collect())
    }

    /// `1 + q + … + q^top`.
    pub fn geometric(top: usize) -> Self {
        QPoly::from_ints(&vec![1; top + 1])
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, exp: usize) -> BigRational {
        self.coeffs.get(exp).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    /// Nonzero `(exponent, coefficient)` pairs in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (usize, &BigRational)> {
        self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero())
    }

    pub fn scale(&self, c: &BigRational) -> QPoly {
        if c.is_zero() {
            return QPoly::zero();
        }
        QPoly {
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    /// `f(q) ↦ f(q^n)`.
    pub fn substitute_power(&self, n: usize) -> QPoly {
        assert!(n > 0, "substitute_power by zero");
        if self.is_zero() {
            return QPoly::zero();
        }
        let mut coeffs = vec![BigRational::zero(); (self.coeffs.len() - 1) * n + 1];
        for (i, c) in self.terms() {
            coeffs[i * n] = c.clone();
        }
        QPoly { coeffs }
    }

    pub fn eval(&self, q: &BigRational) -> BigRational {
        self.coeffs
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| acc * q + c)
    }

    /// `q^d f(1/q)`; `None` if `d` is below the degree.
    pub fn reflect(&self, d: usize) -> Option<QPoly> {
        if self.degree().is_some_and(|deg| deg > d) {
            return None;
        }
        let mut coeffs = vec![BigRational::zero(); d + 1];
        for (i, c) in self.terms() {
            coeffs[d - i] = c.clone();
        }
        Some(QPoly::from_coeffs(coeffs))
    }

    /// Quotient and remainder of division by a nonzero polynomial.
    pub fn div_rem(&self, divisor: &QPoly) -> (QPoly, QPoly) {
        let dd = divisor.degree().expect("division by the zero polynomial");
        let lead = &divisor.coeffs[dd];
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (QPoly::zero(), self.clone());
        }
        let mut quot = vec![BigRational::zero(); rem.len() - dd];
        for i in (0..quot.len()).rev() {
            let c = &rem[i + dd] / lead;
            if c.is_zero() {
                continue;
            }
            for (j, d) in divisor.coeffs.iter().enumerate() {
                rem[i + j] -= &c * d;
            }
            quot[i] = c;
        }
        rem.truncate(dd);
        (QPoly::from_coeffs(quot), QPoly::from_coeffs(rem))
    }

    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }

    /// True when every coefficient is a non-negative integer.
    pub fn is_effective(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer() && !c.is_negative())
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// Integer coefficients, or `None` if some coefficient is fractional.
    pub fn to_integers(&self) -> Option<Vec<BigInt>> {
        self.coeffs
            .iter()
            .map(|c| c.is_integer().then(|| c.to_integer()))
            .collect()
    }

    /// Renders as `q^4+2q^3+q+1` (descending powers, no spaces).
    pub fn to_latex(&self) -> String {
        self.render(false)
    }

    fn render(&self, spaced: bool) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, c) in self.terms().collect::<Vec<_>>().into_iter().rev() {
            let negative = c.is_negative();
            let abs = c.abs();
            if out.is_empty() {
                if negative {
                    out.push('-');
                }
            } else if spaced {
                out.push_str(if negative { " - " } else { " + " });
            } else {
                out.push(if negative { '-' } else { '+' });
            }
            let unit = abs.is_one();
            if !unit || i == 0 {
                out.push_str(&format_rational(&abs));
                if i > 0 && spaced {
                    out.push('*');
                }
            }
            match i {
                0 => {}
                1 => out.push('q'),
                _ => {
                    out.push_str("q^");
                    out.push_str(&i.to_string());
                }
            }
        }
        out
    }
}

/// `"n"` for integers, `"n/d"` in lowest terms otherwise.
pub fn format_rational(c: &BigRational) -> String {
    if c.is_integer() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

pub fn parse_rational(s: &str) -> Option<BigRational> {
    match s.split_once('/') {
        None => s.trim().parse::<BigInt>().ok().map(BigRational::from_integer),
        Some((n, d)) => {
            let n = n.trim().parse::<BigInt>().ok()?;
            let d = d.trim().parse::<BigInt>().ok()?;
            if d.is_zero() {
                return None;
            }
            Some(BigRational::new(n, d))
        }
    }
}

impl fmt::Display for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(true))
    }
}

impl fmt::Debug for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QPoly({self})")
    }
}

impl From<i64> for QPoly {
    fn from(c: i64) -> Self {
        QPoly::constant(BigRational::from_integer(c.into()))
    }
}

impl From<BigRational> for QPoly {
    fn from(c: BigRational) -> Self {
        QPoly::constant(c)
    }
}

impl AddAssign<&QPoly> for QPoly {
    fn add_assign(&mut self, rhs: &QPoly) {
        if self.coeffs.len() < rhs.coeffs.len() {
            self.coeffs.resize(rhs.coeffs.len(), BigRational::zero());
        }
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a += b;
        }
        self.trim();
    }
}

impl SubAssign<&QPoly> for QPoly {
    fn sub_assign(&mut self, rhs: &QPoly) {
        if self.coeffs.len() < rhs.coeffs.len() {
            self.coeffs.resize(rhs.coeffs.len(), BigRational::zero());
        }
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a -= b;
        }
        self.trim();
    }
}

impl Add for &QPoly {
    type Output = QPoly;
    fn add(self, rhs: &QPoly) -> QPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub for &QPoly {
    type Output = QPoly;
    fn sub(self, rhs: &QPoly) -> QPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Neg for &QPoly {
    type Output = QPoly;
    fn neg(self) -> QPoly {
        QPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &QPoly {
    type Output = QPoly;
    fn mul(self, rhs: &QPoly) -> QPoly {
        if self.is_zero() || rhs.is_zero() {
            return QPoly::zero();
        }
        let mut coeffs = vec![BigRational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.terms() {
            for (j, b) in rhs.terms() {
                coeffs[i + j] += a * b;
            }
        }
        QPoly::from_coeffs(coeffs)
    }
}

impl Serialize for QPoly {
    /// A JSON object from exponent strings to rational strings, in increasing
    /// numeric exponent order, zero coefficients omitted.
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let terms: Vec<_> = self.terms().collect();
        let mut map = serializer.serialize_map(Some(terms.len()))?;
        for (i, c) in terms {
            map.serialize_entry(&i.to_string(), &format_rational(c))?;
        }
        map.end()
    }
}

impl<'de> Deserialize<'de> for QPoly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        struct QPolyVisitor;

        impl<'de> Visitor<'de> for QPolyVisitor {
            type Value = QPoly;

            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("a map from exponents to rational strings")
            }

            fn visit_map<A: MapAccess<'de>>(self, mut access: A) -> Result<QPoly, A::Error> {
                let mut coeffs = Vec::new();
                while let Some((k, v)) = access.next_entry::<String, String>()? {
                    let exp: usize = k
                        .parse()
                        .map_err(|_| serde::de::Error::custom(format!("bad exponent {k:?}")))?;
                    let c = parse_rational(&v)
                        .ok_or_else(|| serde::de::Error::custom(format!("bad rational {v:?}")))?;
                    if coeffs.len() <= exp {
                        coeffs.resize(exp + 1, BigRational::zero());
                    }
                    coeffs[exp] += c;
                }
                Ok(QPoly::from_coeffs(coeffs))
            }
        }

        deserializer.deserialize_map(QPolyVisitor)
    }
}
