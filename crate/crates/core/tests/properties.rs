use std::cmp::Ordering;

use num_bigint::BigUint;
use num_integer::Integer;
use perfectnum_core::divisor::{sigma_prime_power, DivisorProfile};
use perfectnum_core::eulerian::records::{candidates, CandidateFilter, EnumerationConfig};
use perfectnum_core::{cmp_ratio_vs_root, factorize, is_prime, sigma, spf_sieve, ExactRatio, Factorizer, Natural};
use proptest::prelude::*;

fn divisor_sum(x: u64) -> u64 {
    let mut total = 0;
    let mut d = 1;
    while d * d <= x {
        if x.is_multiple_of(d) {
            total += d;
            if d * d != x {
                total += x / d;
            }
        }
        d += 1;
    }
    total
}

fn sig(x: u64) -> Natural {
    sigma(&factorize(&x.into()).unwrap())
}

#[test]
fn factorization_reconstructs_against_spf_table() {
    let table = spf_sieve(100_000).unwrap();
    for x in 2..=100_000u64 {
        let f = factorize(&x.into()).unwrap();
        assert_eq!(f.value(), Natural::from(x));
        let got: Vec<(u64, u32)> = f.factors().iter().map(|(p, e)| (u64::try_from(p).unwrap(), *e)).collect();
        let want: Vec<(u64, u32)> = table.factor(x).into_iter().map(|(p, e)| (p as u64, e)).collect();
        assert_eq!(got, want, "x = {x}");
        assert!(f.factors().iter().all(|(p, _)| is_prime(p)));
    }
}

#[test]
fn sigma_matches_divisor_enumeration() {
    for x in 1..=100_000u64 {
        assert_eq!(sig(x), Natural::from(divisor_sum(x)), "x = {x}");
    }
}

#[test]
fn is_prime_agrees_with_sieve_below_ten_million() {
    let table = spf_sieve(10_000_000).unwrap();
    for x in 0..=10_000_000u64 {
        assert_eq!(is_prime(&x.into()), table.is_prime(x), "x = {x}");
    }
}

#[test]
fn prime_powers_are_deficient_and_abundancy_grows_with_exponent() {
    let table = spf_sieve(1_000_000).unwrap();
    let f = Factorizer::default();
    for &p in table.primes() {
        let p = p as u64;
        let mut pa = p;
        let mut prev: Option<ExactRatio> = None;
        while pa <= 1_000_000 {
            let profile = DivisorProfile::compute(&f, &pa.into()).unwrap();
            assert!(profile.is_deficient(), "{pa}");
            if let Some(prev) = &prev {
                assert!(*prev < profile.abundancy);
            }
            prev = Some(profile.abundancy);
            pa *= p;
        }
    }
}

#[test]
fn closed_form_sigma_of_prime_power() {
    assert_eq!(sigma_prime_power(&Natural::from(2u32), 4), Natural::from(31u32));
    assert_eq!(sigma_prime_power(&Natural::from(13u32), 1), Natural::from(14u32));
}

#[test]
fn constructive_candidates_have_unique_values() {
    let cfg = EnumerationConfig {
        filter: CandidateFilter::All,
        ..EnumerationConfig::default()
    };
    let all = candidates(10_000_000, &cfg).unwrap();
    let mut values: Vec<u64> = all.iter().map(|c| c.value).collect();
    values.sort_unstable();
    let before = values.len();
    values.dedup();
    assert_eq!(before, values.len());
}

fn ratio() -> impl Strategy<Value = ExactRatio> {
    (0u64..5000, 1u64..5000).prop_map(|(a, b)| ExactRatio::from_u64s(a, b))
}

fn positive_ratio() -> impl Strategy<Value = ExactRatio> {
    (1u64..5000, 1u64..5000).prop_map(|(a, b)| ExactRatio::from_u64s(a, b))
}

fn is_perfect_power(r: &ExactRatio, degree: u32) -> bool {
    let root = |x: &Natural| {
        let t = x.nth_root(degree);
        num_traits::pow(t.clone(), degree as usize) == *x
    };
    root(r.numer()) && root(r.denom())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn ratio_order_is_total(a in ratio(), b in ratio(), c in ratio()) {
        let ab = a.cmp(&b);
        prop_assert_eq!(ab, b.cmp(&a).reverse());
        prop_assert_eq!(ab == Ordering::Equal, a == b);
        if a <= b && b <= c {
            prop_assert!(a <= c);
        }
        let cross = (a.numer() * b.denom()).cmp(&(b.numer() * a.denom()));
        prop_assert_eq!(ab, cross);
    }

    #[test]
    fn root_comparison_matches_sign_of_power_difference(r in positive_ratio(), c in positive_ratio(), m in 1u32..5) {
        let lhs = r.pow(m);
        prop_assert_eq!(cmp_ratio_vs_root(&r, &c, m), lhs.cmp(&c));
        if m >= 2 && !is_perfect_power(&c, m) {
            prop_assert_ne!(cmp_ratio_vs_root(&r, &c, m), Ordering::Equal);
        }
    }

    #[test]
    fn parse_display_round_trip(a in any::<u128>(), b in 1u128..) {
        let r = ExactRatio::new(BigUint::from(a), BigUint::from(b)).unwrap();
        let back: ExactRatio = r.to_string().parse().unwrap();
        prop_assert_eq!(&back, &r);
        prop_assert!(r.numer().gcd(r.denom()) == BigUint::from(1u32) || r.is_zero());
    }

    #[test]
    fn sigma_is_multiplicative(a in 1u64..1_000_000, b in 1u64..1_000_000) {
        prop_assume!(a.gcd(&b) == 1);
        prop_assert_eq!(sig(a * b), sig(a) * sig(b));
    }

    #[test]
    fn abundancy_exceeds_one(x in 2u64..10_000_000) {
        let i = perfectnum_core::abundancy(&x.into()).unwrap();
        prop_assert!(i > ExactRatio::from_integer(1u32));
    }
}
