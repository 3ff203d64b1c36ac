mod common;

use num_integer::Integer;
use proptest::prelude::*;

use tangent::counting::is_excluded_pair;
use tangent::injection::{alpha, beta, Injection, InjectionParams};
use tangent::words::{decompose, enumerate_admissible, is_admissible, FamilyKind, ForbiddenFamily};

fn unit() -> ForbiddenFamily {
    ForbiddenFamily::new(FamilyKind::NegBad, 1).unwrap()
}

fn valid_pair() -> impl Strategy<Value = (usize, usize)> {
    (5usize..=16)
        .prop_flat_map(|n| (Just(n), 1..n))
        .prop_filter("excluded (Δ, K)", |&(n, d)| {
            let delta = n.gcd(&d);
            !is_excluded_pair(delta as u64, (n / delta) as u64)
        })
}

#[test]
fn excluded_pairs_have_no_parameters() {
    for n in 2..=24usize {
        for d in 1..n {
            let delta = n.gcd(&d);
            let excluded = is_excluded_pair(delta as u64, (n / delta) as u64);
            assert_eq!(InjectionParams::new(n, d).is_err(), excluded, "n={n} d={d}");
        }
    }
    assert!(InjectionParams::new(8, 0).is_err());
    assert!(InjectionParams::new(8, 8).is_err());
}

/// Only `Δ` matters: strides with the same gcd give the same images.
#[test]
fn images_depend_on_delta_only() {
    for (n, d1, d2) in [(14, 2, 6), (15, 3, 12), (16, 2, 6), (18, 3, 15)] {
        let a = Injection::new(InjectionParams::new(n, d1).unwrap()).unwrap();
        let b = Injection::new(InjectionParams::new(n, d2).unwrap()).unwrap();
        assert_eq!(a.sources(), b.sources());
        for s in a.sources() {
            assert_eq!(a.gamma(&s.list).unwrap(), b.gamma(&s.list).unwrap());
        }
    }
}

proptest! {
    #![proptest_config(common::config(64))]

    /// Decoding any primitive admissible target gives nothing or a source that maps back onto it.
    #[test]
    fn decode_is_none_or_a_verified_preimage((n, d) in valid_pair(), pick: prop::sample::Index, q in 0i64..16) {
        let params = InjectionParams::new(n, d).unwrap();
        let inj = Injection::new(params).unwrap();
        let fam = ForbiddenFamily::new(FamilyKind::NegBad, params.delta).unwrap();
        let census = enumerate_admissible(n, fam).unwrap();
        let targets: Vec<_> = census.primitive_necklaces().collect();
        prop_assume!(!targets.is_empty());
        let w = targets[pick.index(targets.len())].canonical.rotate(q);
        let target = decompose(&w, params.delta).unwrap();
        match inj.decode(&target).unwrap() {
            None => {}
            Some(src) => {
                let image = inj.gamma(&src.list).unwrap();
                let rep = decompose(&tangent::words::compose(&image), params.delta).unwrap();
                prop_assert_eq!(
                    tangent::words::compose(&rep).canonical_rotation(),
                    w.canonical_rotation()
                );
                prop_assert!(inj.sources().contains(&src));
            }
        }
    }

    /// Elongation gives a primitive admissible word, follows rotations of the
    /// least rotation by fewer than `K_p` letters, and is undone by `β`.
    #[test]
    fn elongation_is_equivariant_and_invertible(kp in 2usize..=8, r in 2usize..=3, pick: prop::sample::Index, q in 0i64..8) {
        let k = kp * r;
        prop_assume!(k != 4 && k != 6);
        let census = enumerate_admissible(kp, unit()).unwrap();
        let words: Vec<_> = census.primitive_necklaces().collect();
        prop_assume!(!words.is_empty());
        let u = words[pick.index(words.len())].canonical;
        let w = alpha(k, &u).unwrap();
        prop_assert_eq!(w.len(), k);
        prop_assert!(w.is_primitive());
        prop_assert!(is_admissible(&w, unit()));
        let q = q % kp as i64;
        prop_assert_eq!(alpha(k, &u.rotate(q)).unwrap(), w.rotate(q));
        prop_assert!(beta(k, &w).contains(&u));
    }
}
