use perfectnum_core::euclidean::{
    build_euclidean, check_e4, check_lemma1, check_lemma3, euclid_report, lucas_lehmer, lucas_lehmer_with,
    mersenne_exponents, Reduction,
};
use perfectnum_core::natural::{mersenne, pow2};
use perfectnum_core::{is_prime, sigma, ExactRatio, Verdict};

const EXPONENTS_TO_607: [u64; 14] = [2, 3, 5, 7, 13, 17, 19, 31, 61, 89, 107, 127, 521, 607];

fn trial_is_prime(x: u64) -> bool {
    x >= 2 && (2..).take_while(|d| d * d <= x).all(|d| !x.is_multiple_of(d))
}

#[test]
fn exponents_up_to_607() {
    assert_eq!(mersenne_exponents(607), EXPONENTS_TO_607);
}

#[test]
fn every_generated_form_satisfies_the_identities() {
    let one = ExactRatio::from_integer(1u32);
    let two = ExactRatio::from_integer(2u32);
    for p in mersenne_exponents(607) {
        let form = build_euclidean(p).unwrap();
        assert_eq!(sigma(&form.factorization()), &form.value * 2u32, "p = {p}");
        assert_eq!(check_lemma1(&form), (one.clone(), two.clone()));
        assert_eq!(check_e4(&form), [one.clone(), two.clone()]);
        if p >= 3 {
            let (first, second) = check_lemma3(&form).unwrap();
            assert_eq!(first, ExactRatio::from_integer(pow2(p.div_ceil(2))));
            assert!(second < one);
        }
        let report = euclid_report(&form);
        assert!(!report.has_violation());
        let e7 = report.e7.as_ref();
        assert_eq!(e7.is_some(), p >= 3);
        assert_eq!(e7.is_some_and(|c| c.attains_upper_bound), p == 3, "p = {p}");
        if p >= 3 {
            assert!(report.checks().iter().all(|(_, c)| c.verdict == Verdict::Pass));
        }
    }
}

#[test]
fn lucas_lehmer_agrees_with_direct_primality() {
    for p in (2..=61u64).filter(|&p| trial_is_prime(p)) {
        let direct = if p <= 31 { trial_is_prime((1 << p) - 1) } else { is_prime(&mersenne(p)) };
        assert_eq!(lucas_lehmer(p).unwrap(), direct, "p = {p}");
        assert_eq!(lucas_lehmer_with(p, Reduction::Division).unwrap(), direct, "p = {p}");
    }
}

#[test]
fn lucas_lehmer_cross_checked_by_miller_rabin_to_127() {
    for p in (3..=127u64).filter(|&p| trial_is_prime(p)) {
        assert_eq!(lucas_lehmer(p).unwrap(), is_prime(&mersenne(p)), "p = {p}");
    }
}
