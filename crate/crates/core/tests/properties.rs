use std::cmp::Ordering;

use equichar::bigraded::{restrict_full, BiSymFunc};
use equichar::length::{length, w};
use equichar::oracle::expand;
use equichar::partition::{binomial, partitions_of};
use equichar::{Basis, Engine, Partition, QPoly, SymFunc};
use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;
use std::sync::OnceLock;

fn engine() -> &'static Engine {
    static ENGINE: OnceLock<Engine> = OnceLock::new();
    ENGINE.get_or_init(Engine::new)
}

fn arb_partition(max: usize) -> impl Strategy<Value = Partition> {
    (0..=max).prop_flat_map(|n| {
        let parts = partitions_of(n);
        (0..parts.len()).prop_map(move |i| parts[i].clone())
    })
}

fn arb_partition_of(n: usize) -> impl Strategy<Value = Partition> {
    let parts = partitions_of(n);
    (0..parts.len()).prop_map(move |i| parts[i].clone())
}

fn arb_schur(degree: usize) -> impl Strategy<Value = SymFunc> {
    prop::collection::vec((arb_partition_of(degree), -3i64..=3), 1..=3).prop_map(|terms| {
        let mut f = SymFunc::zero(Basis::Schur);
        for (lambda, c) in terms {
            f.add_term(&lambda, &QPoly::from(c));
        }
        f
    })
}

fn arb_positive_schur(degree: usize) -> impl Strategy<Value = SymFunc> {
    prop::collection::vec((arb_partition_of(degree), 1i64..=3), 1..=3).prop_map(|terms| {
        let mut f = SymFunc::zero(Basis::Schur);
        for (lambda, c) in terms {
            f.add_term(&lambda, &QPoly::from(c));
        }
        f
    })
}

fn same(a: &SymFunc, b: &SymFunc) -> bool {
    a.to_powersum() == b.to_powersum()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn conjugate_is_an_involution(lambda in arb_partition(12)) {
        let c = lambda.conjugate();
        prop_assert_eq!(c.size(), lambda.size());
        prop_assert_eq!(c.conjugate(), lambda);
    }

    #[test]
    fn union_is_conjugate_of_sum(
        (lambda, mu) in (0usize..=8).prop_flat_map(|n| (arb_partition_of(n), arb_partition_of(n)))
    ) {
        let via_sum = lambda.conjugate().sum(&mu.conjugate()).conjugate();
        prop_assert_eq!(lambda.union(&mu), via_sum);
    }

    #[test]
    fn compare_is_antisymmetric_and_transitive(
        (a, b, c) in (1usize..=8).prop_flat_map(|n| (arb_partition_of(n), arb_partition_of(n), arb_partition_of(n)))
    ) {
        let ab = a.compare(&b).unwrap();
        prop_assert_eq!(ab.reverse(), b.compare(&a).unwrap());
        prop_assert_eq!(ab == Ordering::Equal, a == b);
        let bc = b.compare(&c).unwrap();
        if ab != Ordering::Greater && bc != Ordering::Greater {
            prop_assert_ne!(a.compare(&c).unwrap(), Ordering::Greater);
        }
    }

    #[test]
    fn schur_powersum_round_trip(f in (0usize..=8).prop_flat_map(arb_schur)) {
        prop_assert_eq!(f.to_powersum().to_schur(), f.to_schur());
    }

    #[test]
    fn plethysm_is_multiplicative(
        f in (1usize..=2).prop_flat_map(arb_schur),
        g in (1usize..=2).prop_flat_map(arb_schur),
        h in (1usize..=2).prop_flat_map(arb_positive_schur),
    ) {
        let lhs = f.multiply(&g).plethysm(&h);
        let rhs = f.plethysm(&h).multiply(&g.plethysm(&h));
        prop_assert!(same(&lhs, &rhs));
    }

    #[test]
    fn power_sum_plethysm_composes(
        a in 1usize..=3,
        b in 1usize..=3,
        g in (1usize..=3).prop_flat_map(arb_schur),
    ) {
        let pa = SymFunc::p(Partition::row(a));
        let pb = SymFunc::p(Partition::row(b));
        let pab = SymFunc::p(Partition::row(a * b));
        prop_assert!(same(&pa.plethysm(&pb.plethysm(&g)), &pab.plethysm(&g)));
    }

    #[test]
    fn kronecker_commutes_and_associates(
        (f, g, h) in (0usize..=5).prop_flat_map(|n| (arb_schur(n), arb_schur(n), arb_schur(n)))
    ) {
        let fg = f.kronecker(&g).unwrap();
        prop_assert!(same(&fg, &g.kronecker(&f).unwrap()));
        let left = fg.kronecker(&h).unwrap();
        let right = f.kronecker(&g.kronecker(&h).unwrap()).unwrap();
        prop_assert!(same(&left, &right));
    }

    #[test]
    fn sign_kronecker_conjugates(lambda in (1usize..=7).prop_flat_map(arb_partition_of)) {
        let sign = SymFunc::s(Partition::column(lambda.size()));
        let got = sign.kronecker(&SymFunc::s(lambda.clone())).unwrap();
        prop_assert!(same(&got, &SymFunc::s(lambda.conjugate())));
    }

    #[test]
    fn multiply_matches_monomial_expansion(
        f in (0usize..=4).prop_flat_map(arb_schur),
        g in (0usize..=4).prop_flat_map(arb_schur),
    ) {
        let n = f.degree().unwrap_or(0) + g.degree().unwrap_or(0);
        let lhs = expand(&f.multiply(&g), n).unwrap();
        let rhs = expand(&f, n).unwrap().mul(&expand(&g, n).unwrap());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn restriction_scales_dimension_by_binomial(
        (f, k) in (1usize..=7).prop_flat_map(|n| (arb_positive_schur(n), 0..=n))
    ) {
        let n = f.degree().unwrap();
        let induced = restrict_full(&f, k).unwrap().induce_to_full();
        let factor = BigRational::from_integer(BigInt::from(binomial(n, k)));
        prop_assert_eq!(induced.dimension().unwrap(), f.dimension().unwrap().scale(&factor));
    }

    #[test]
    fn restriction_mirrors_under_swap(
        (f, k) in (1usize..=7).prop_flat_map(|n| (arb_positive_schur(n), 0..=n))
    ) {
        let n = f.degree().unwrap();
        let a = restrict_full(&f, k).unwrap().swap().to_powersum();
        let b = restrict_full(&f, n - k).unwrap().to_powersum();
        prop_assert_eq!(a, b);
    }

    #[test]
    fn leading_constituent_of_product_is_union(
        f in (1usize..=4).prop_flat_map(arb_positive_schur),
        g in (1usize..=4).prop_flat_map(arb_positive_schur),
    ) {
        let got = w(&f.multiply(&g)).unwrap();
        prop_assert_eq!(got, w(&f).unwrap().union(&w(&g).unwrap()));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn characters_are_effective_and_palindromic(
        (n, k, l) in (3usize..=8).prop_flat_map(|n| (Just(n), 0..=n, 1usize..=n))
    ) {
        let e = engine().e_schur(n, k, l).unwrap();
        prop_assert!(e.is_effective());
        prop_assert!(e.is_palindromic(n - 3));
        let point = BiSymFunc::schur(Partition::row(k), Partition::row(n - k));
        prop_assert_eq!(e.q_coefficient(0), point.clone());
        prop_assert_eq!(e.q_coefficient(n - 3), point);
    }

    #[test]
    fn restriction_of_lightest_weight_is_consistent(
        (n, k) in (3usize..=9).prop_flat_map(|n| (Just(n), 0..=n))
    ) {
        let full = engine().full_character(n).unwrap();
        let restricted = restrict_full(&full, k).unwrap();
        let direct = engine().e(n, k, 1).unwrap();
        prop_assert_eq!(restricted.to_powersum(), direct.to_powersum());
    }

    #[test]
    fn lengths_are_symmetric(n in 3usize..=10, i in 0usize..8) {
        prop_assume!(i + 3 <= n);
        let full = engine().full_character(n).unwrap();
        let a = length(&full.q_coefficient(i)).unwrap();
        let b = length(&full.q_coefficient(n - 3 - i)).unwrap();
        prop_assert_eq!(a, b);
    }
}
