//! Independent brute-force oracle for S(n,r): sum the definition over
//! the explicit product denominator (r)(r+1)...(n+r), no lcm tricks,
//! reduce once at the end. Must agree with every evaluator exactly.

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use binsum_core::{s_direct, s_lemma, s_small_n_form, Rational};

/// Naive evaluation straight off the definition.
fn brute_force_s(n: u64, r: u64) -> Rational {
    // common denominator: product of every k+r, no reduction on the way
    let mut lcd = BigUint::one();
    for k in 0..=n {
        lcd *= k + r;
    }
    let mut numer = BigUint::zero();
    for k in 0..=n {
        // C(n,k) by factorial quotient, deliberately unoptimized
        let fact = |m: u64| (1..=m).fold(BigUint::one(), |acc, x| acc * x);
        let binom = fact(n) / (fact(k) * fact(n - k));
        numer += binom * r * (&lcd / (k + r));
    }
    Rational::new(BigInt::from(numer), BigInt::from(lcd)).unwrap()
}

#[test]
fn brute_force_matches_hand_values() {
    let rat = |s: &str| s.parse::<Rational>().unwrap();
    assert_eq!(brute_force_s(1, 1), rat("3/2"));
    assert_eq!(brute_force_s(2, 2), rat("17/6"));
    assert_eq!(brute_force_s(2, 3), rat("31/10"));
    assert_eq!(brute_force_s(3, 3), rat("111/20"));
    assert_eq!(brute_force_s(3, 5), rat("351/56"));
    assert_eq!(brute_force_s(2, 7), rat("127/36"));
}

#[test]
fn all_evaluators_match_brute_force() {
    for n in 1..=25u64 {
        for r in 1..=25u64 {
            let expected = brute_force_s(n, r);
            assert_eq!(s_direct(n, r).unwrap().value, expected, "direct ({n},{r})");
            assert_eq!(s_lemma(n, r).unwrap().value, expected, "lemma ({n},{r})");
            assert_eq!(
                s_small_n_form(n, r).unwrap().value,
                expected,
                "small-n ({n},{r})"
            );
        }
    }
}

#[test]
fn fallback_pair_8_7_frozen_value() {
    // the open-region pair exercised by the dispatcher tests;
    // denominator 1287 = 3^2 * 11 * 13, so the fallback witness is 3
    let v = brute_force_s(8, 7);
    assert_eq!(v, "213299/1287".parse().unwrap());
    assert_eq!(s_direct(8, 7).unwrap().value, v);
    match binsum_core::certify(8, 7).unwrap() {
        binsum_core::Certified::Proof(c) => {
            assert_eq!(c.witness_prime, 3u32.into());
            assert_eq!(c.claimed_bound, -2);
            assert!(c.verified);
        }
        other => panic!("expected fallback proof, got {other:?}"),
    }
}
