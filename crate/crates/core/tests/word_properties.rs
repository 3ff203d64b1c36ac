mod common;

use num_integer::Integer;
use proptest::prelude::*;

use tangent::words::{
    compose, decompose, enumerate_admissible, is_admissible, representative_list, CyclicWord, FamilyKind,
    ForbiddenFamily, InterleavingList,
};

const CONSTRAINED: [FamilyKind; 3] = [FamilyKind::NegBac, FamilyKind::MixedBad, FamilyKind::NegBad];

fn fam(kind: FamilyKind, d: usize) -> ForbiddenFamily {
    ForbiddenFamily::new(kind, d).unwrap()
}

fn all_words(n: usize) -> impl Iterator<Item = CyclicWord> {
    (0..1u64 << n).map(move |b| CyclicWord::new(n, b).unwrap())
}

#[test]
fn cardinal_chain() {
    for n in 1..=16usize {
        for d in 1..n {
            for kind in CONSTRAINED {
                let c = enumerate_admissible(n, fam(kind, d)).unwrap();
                let by_period: u64 = c.primitive_by_period.values().sum();
                assert_eq!(c.total(), by_period);
                for (&p, &w) in &c.primitive_by_period {
                    let necklaces = c.necklaces.iter().filter(|x| x.size == p).count() as u64;
                    assert_eq!(w, p as u64 * necklaces, "{} n={n} d={d} p={p}", kind.name());
                }
            }
        }
    }
}

#[test]
fn distance_symmetry_and_reduction() {
    for n in 2..=14usize {
        for kind in CONSTRAINED {
            let totals: Vec<u64> = (1..n)
                .map(|d| enumerate_admissible(n, fam(kind, d)).unwrap().total())
                .collect();
            for d in 1..n {
                assert_eq!(totals[d - 1], totals[n - d - 1], "symmetry {} n={n} d={d}", kind.name());
                let delta = n.gcd(&d);
                if delta < n {
                    assert_eq!(totals[d - 1], totals[delta - 1], "reduction {} n={n} d={d}", kind.name());
                }
            }
        }
    }
}

/// For a word of primitive period `p`, `K_p = p / gcd(p, Δ)` is the lcm of
/// the sub-word periods, and sub-words `Δ_p` apart are rotations of each other.
#[test]
fn sub_word_periods_and_conjugacy() {
    for n in 2..=14usize {
        for delta in (1..n).filter(|d| n % d == 0) {
            for kind in CONSTRAINED {
                let f = fam(kind, delta);
                for w in all_words(n).filter(|w| is_admissible(w, f)) {
                    let p = w.primitive_period();
                    let dp = p.gcd(&delta);
                    let l = decompose(&w, delta).unwrap();
                    let lcm = l
                        .words()
                        .iter()
                        .fold(1, |acc, x| num_integer::lcm(acc, x.primitive_period()));
                    assert_eq!(lcm, p / dp, "{w} Δ={delta}");
                    for j in 0..delta {
                        let a = l.word(j).canonical_rotation();
                        let b = l.word((j + dp) % delta).canonical_rotation();
                        assert_eq!(a, b, "{w} Δ={delta} j={j}");
                    }
                }
            }
        }
    }
}

#[test]
fn empty_primitive_sets() {
    let primitive = |n, d| {
        enumerate_admissible(n, fam(FamilyKind::NegBad, d))
            .unwrap()
            .primitive_necklace_count()
    };
    assert_eq!(primitive(4, 1), 0);
    assert_eq!(primitive(6, 1), 0);
    for delta in 1..=5 {
        assert_eq!(primitive(4 * delta, delta), 0, "Δ = {delta}");
    }
    // A word of length d admissible at distance d would need w_0 ≠ w_0.
    for d in 1..=12 {
        assert_eq!(enumerate_admissible(d, fam(FamilyKind::NegBac, d)).unwrap().total(), 0);
        assert_eq!(enumerate_admissible(d, fam(FamilyKind::NegBad, d)).unwrap().total(), 0);
    }
}

fn word_strategy() -> impl Strategy<Value = CyclicWord> {
    (1usize..=14).prop_flat_map(|n| (Just(n), 0..1u64 << n)).prop_map(|(n, b)| CyclicWord::new(n, b).unwrap())
}

proptest! {
    #![proptest_config(common::config(256))]

    /// `decompose(ρ^q(w))`, `q = mΔ + δ`: `ρ^m(L(j-δ))` for `j ≥ δ`, else `ρ^(m+1)(L(j-δ+Δ))`.
    #[test]
    fn rotation_shifts_and_rotates_sub_words(w in word_strategy(), d in 1usize..=14) {
        let n = w.len();
        let delta = n.gcd(&d);
        let l = decompose(&w, delta).unwrap();
        for q in 0..n {
            let (m, shift) = (q / delta, q % delta);
            let rotated = decompose(&w.rotate(q as i64), delta).unwrap();
            for j in 0..delta {
                let expected = if j >= shift {
                    l.word(j - shift).rotate(m as i64)
                } else {
                    l.word(j + delta - shift).rotate(m as i64 + 1)
                };
                prop_assert_eq!(rotated.word(j), expected);
            }
        }
    }

    #[test]
    fn compose_inverts_decompose(w in word_strategy(), d in 1usize..=30) {
        let l = decompose(&w, d).unwrap();
        prop_assert_eq!(compose(&l), w);
        let again = InterleavingList::new(l.words().to_vec(), d).unwrap();
        prop_assert_eq!(decompose(&compose(&again), d).unwrap(), l);
    }

    #[test]
    fn representative_list_is_rotation_invariant(w in word_strategy(), d in 1usize..=14, q in 0i64..14) {
        let r = representative_list(&w, d).unwrap();
        prop_assert_eq!(representative_list(&w.rotate(q), d).unwrap(), r.clone());
        prop_assert!(r.is_representative_shaped());
        prop_assert_eq!(compose(&r).canonical_rotation(), w.canonical_rotation());
    }

    #[test]
    fn admissibility_is_rotation_invariant(w in word_strategy(), d in 1usize..=20, q in 0i64..14) {
        for kind in CONSTRAINED {
            prop_assert_eq!(is_admissible(&w, fam(kind, d)), is_admissible(&w.rotate(q), fam(kind, d)));
        }
    }
}
