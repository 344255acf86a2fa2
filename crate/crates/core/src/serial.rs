//! Canonical JSON forms.
//!
//! ```json
//! {"basis":"schur","degree":5,"terms":[{"part":[4,1],"coeff":{"1":"1"}}, …]}
//! {"basis":"schur","bidegree":[1,4],"terms":[{"x":[1],"y":[4],"coeff":{"0":"1"}}, …]}
//! ```
//!
//! Terms follow `sorted_terms` order, so equal values always serialize to the
//! same bytes.

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::bigraded::BiSymFunc;
use crate::partition::Partition;
use crate::qpoly::QPoly;
use crate::symfunc::{Basis, SymFunc};

#[derive(Serialize, Deserialize)]
struct Term {
    part: Partition,
    coeff: QPoly,
}

#[derive(Serialize, Deserialize)]
struct SymFuncRepr {
    basis: Basis,
    degree: Option<usize>,
    terms: Vec<Term>,
}

#[derive(Serialize, Deserialize)]
struct BiTerm {
    x: Partition,
    y: Partition,
    coeff: QPoly,
}

#[derive(Serialize, Deserialize)]
struct BiSymFuncRepr {
    basis: Basis,
    bidegree: Option<[usize; 2]>,
    terms: Vec<BiTerm>,
}

impl Serialize for SymFunc {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        SymFuncRepr {
            basis: self.basis(),
            degree: self.degree(),
            terms: self
                .sorted_terms()
                .into_iter()
                .map(|(part, coeff)| Term {
                    part: part.clone(),
                    coeff: coeff.clone(),
                })
                .collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for SymFunc {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let repr = SymFuncRepr::deserialize(deserializer)?;
        let f = SymFunc::from_terms(repr.basis, repr.terms.into_iter().map(|t| (t.part, t.coeff)));
        if repr.degree.is_some() && repr.degree != f.degree() {
            return Err(serde::de::Error::custom("declared degree does not match terms"));
        }
        Ok(f)
    }
}

impl Serialize for BiSymFunc {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        BiSymFuncRepr {
            basis: self.basis(),
            bidegree: self.bidegree().map(|(a, b)| [a, b]),
            terms: self
                .sorted_terms()
                .into_iter()
                .map(|((x, y), coeff)| BiTerm {
                    x: x.clone(),
                    y: y.clone(),
                    coeff: coeff.clone(),
                })
                .collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for BiSymFunc {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let repr = BiSymFuncRepr::deserialize(deserializer)?;
        let f = BiSymFunc::from_terms(
            repr.basis,
            repr.terms.into_iter().map(|t| ((t.x, t.y), t.coeff)),
        );
        if repr.bidegree.is_some() && repr.bidegree != f.bidegree().map(|(a, b)| [a, b]) {
            return Err(serde::de::Error::custom("declared bidegree does not match terms"));
        }
        Ok(f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn symfunc_layout() {
        let f = &SymFunc::s([7]).scale(&QPoly::from_ints(&[1, 2, 4, 2, 1]))
            + &SymFunc::s([4, 2, 1]).scale(&QPoly::q_pow(2));
        let s = serde_json::to_string(&f).unwrap();
        assert_eq!(
            s,
            r#"{"basis":"schur","degree":7,"terms":[{"part":[4,2,1],"coeff":{"2":"1"}},{"part":[7],"coeff":{"0":"1","1":"2","2":"4","3":"2","4":"1"}}]}"#
        );
    }

    #[test]
    fn bisymfunc_layout() {
        let f = BiSymFunc::schur([1], [4]).scale(&QPoly::from_ints(&[1, 1, 1]));
        let s = serde_json::to_string(&f).unwrap();
        assert_eq!(
            s,
            r#"{"basis":"schur","bidegree":[1,4],"terms":[{"x":[1],"y":[4],"coeff":{"0":"1","1":"1","2":"1"}}]}"#
        );
        let back: BiSymFunc = serde_json::from_str(&s).unwrap();
        assert_eq!(back, f);
    }

    #[test]
    fn rejects_bad_degree() {
        let s = r#"{"basis":"schur","degree":3,"terms":[{"part":[2],"coeff":{"0":"1"}}]}"#;
        assert!(serde_json::from_str::<SymFunc>(s).is_err());
    }

    fn arb_symfunc() -> impl Strategy<Value = SymFunc> {
        let parts = crate::partition::partitions_of(5);
        prop::collection::vec((0..parts.len(), -5i64..5, -5i64..5, 1i64..4), 0..6).prop_map(
            move |terms| {
                SymFunc::from_terms(
                    Basis::PowerSum,
                    terms.into_iter().map(|(i, a, b, d)| {
                        let c = QPoly::from_coeffs(vec![
                            num_rational::BigRational::new(a.into(), d.into()),
                            num_rational::BigRational::new(b.into(), 1.into()),
                        ]);
                        (parts[i].clone(), c)
                    }),
                )
            },
        )
    }

    proptest! {
        #[test]
        fn json_round_trip(f in arb_symfunc()) {
            let s = serde_json::to_string(&f).unwrap();
            let back: SymFunc = serde_json::from_str(&s).unwrap();
            prop_assert_eq!(&back, &f);
            prop_assert_eq!(serde_json::to_string(&back).unwrap(), s);
        }
    }
}
