mod common;

use num_bigint::BigInt;
use proptest::prelude::*;

use tangent::numtheory::{
    divisors, lyndon_count, mobius, mu, necklace_count, one, phi, pow2, totient, DivisorFunction, PeriodTable,
};
use tangent::words::{enumerate_admissible, FamilyKind, ForbiddenFamily};

#[test]
fn mobius_sums_vanish() {
    for n in 1..=64u64 {
        let s: i64 = divisors(n).unwrap().iter().map(|&d| mobius(d).unwrap()).sum();
        assert_eq!(s, (n == 1) as i64, "n = {n}");
    }
}

#[test]
fn totient_sums_to_identity() {
    for n in 1..=64u64 {
        let s: u64 = divisors(n).unwrap().iter().map(|&d| totient(d).unwrap()).sum();
        assert_eq!(s, n);
    }
}

#[test]
fn lyndon_counts_partition_all_words() {
    for n in 1..=40u64 {
        let total: BigInt = divisors(n)
            .unwrap()
            .iter()
            .map(|&q| lyndon_count(q).unwrap() * BigInt::from(q))
            .sum();
        assert_eq!(total, pow2(n), "n = {n}");
    }
}

#[test]
fn counts_agree_with_enumeration() {
    let free = ForbiddenFamily::new(FamilyKind::Positive, 0).unwrap();
    for n in 1..=14usize {
        let c = enumerate_admissible(n, free).unwrap();
        assert_eq!(BigInt::from(c.necklace_count()), necklace_count(n as u64).unwrap());
        // Aperiodic words are the primitive necklaces times their length.
        let aperiodic = c.primitive_with_period(n);
        assert_eq!(BigInt::from(aperiodic), lyndon_count(n as u64).unwrap() * BigInt::from(n));
    }
}

#[test]
fn burnside_matches_totient_form() {
    for n in 1..=40u64 {
        let sum: BigInt = divisors(n)
            .unwrap()
            .iter()
            .map(|&q| phi(n / q) * pow2(q))
            .sum();
        assert_eq!(sum / BigInt::from(n), necklace_count(n).unwrap());
    }
}

fn divisor_function(n: u64, values: &[i64]) -> DivisorFunction {
    let divs = divisors(n).unwrap();
    DivisorFunction::from_fn(n, |p| {
        let i = divs.iter().position(|&d| d == p).unwrap();
        BigInt::from(values[i % values.len()])
    })
    .unwrap()
}

proptest! {
    #![proptest_config(common::config(256))]

    #[test]
    fn mobius_inversion_roundtrip(n in 1u64..=48, values in prop::collection::vec(-1000i64..1000, 1..12)) {
        let f = divisor_function(n, &values);
        prop_assert_eq!(f.convolve(one).convolve(mu), f.clone());
        prop_assert_eq!(f.convolve(mu).convolve(one), f);
    }

    #[test]
    fn period_table_pipeline(n in 1u64..=48, weights in prop::collection::vec(0i64..20, 1..12)) {
        // X(p) = Σ_{q|p} q·Ã(q) for arbitrary attractor counts Ã.
        let divs = divisors(n).unwrap();
        let at = |q: u64| weights[divs.iter().position(|&d| d == q).unwrap() % weights.len()];
        let x = DivisorFunction::from_fn(n, |p| {
            divisors(p).unwrap().iter().map(|&q| BigInt::from(q as i64 * at(q))).sum()
        })
        .unwrap();
        let t = PeriodTable::from_x(x).unwrap();
        for &p in &divs {
            prop_assert_eq!(t.a_prim_at(p), &BigInt::from(at(p)));
            let a: i64 = divisors(p).unwrap().iter().map(|&q| at(q)).sum();
            prop_assert_eq!(t.a_at(p), &BigInt::from(a));
        }
    }
}
