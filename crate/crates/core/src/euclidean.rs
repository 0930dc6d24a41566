//! Even perfect numbers `M = (2^p - 1) * 2^(p - 1)` and the exact identities
//! they satisfy.
//!
//! With the relabelling `Q = 2^p - 1`, `K = 1`, `nbar^2 = 2^(p - 1)` the
//! even form mirrors the odd shape `q^k * n^2`, and every check below is an
//! identity or inequality between exact rationals built from `Q` and `nbar`.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;

use num_integer::Integer;
use num_traits::{One, Zero};

use crate::divisor::sigma;
use crate::error::{Error, Result};
use crate::factor::Factorization;
use crate::natural::{mersenne, pow2, valuation, Natural};
use crate::primality::is_prime_u64;
use crate::ratio::{cmp_ratio_vs_root, ExactRatio};
use crate::verdict::Check;

/// How the Lucas–Lehmer residue is reduced modulo `2^p - 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Reduction {
    /// Full big-integer division.
    Division,
    /// `x mod (2^p - 1) = (x & (2^p - 1)) + (x >> p)`, folded until small.
    ShiftFold,
}

fn reduce(x: Natural, p: u64, modulus: &Natural, how: Reduction) -> Natural {
    match how {
        Reduction::Division => x % modulus,
        Reduction::ShiftFold => {
            let mut x = x;
            while x.bits() > p {
                x = (&x & modulus) + (&x >> p);
            }
            if x == *modulus {
                Natural::zero()
            } else {
                x
            }
        }
    }
}

/// Final residue `s_(p-2)` of `s_0 = 4, s <- s^2 - 2 (mod 2^p - 1)`.
///
/// `p` must be an odd prime.
pub fn lucas_lehmer_residue(p: u64, how: Reduction) -> Result<Natural> {
    if p < 3 || !is_prime_u64(p) {
        return Err(Error::InvalidInput(format!("Lucas-Lehmer needs an odd prime exponent, got {p}")));
    }
    let m = mersenne(p);
    let mut s = Natural::from(4u32);
    for _ in 0..p - 2 {
        // s^2 + (m - 2) keeps the subtraction non-negative when s < 2.
        s = reduce(&s * &s + &m - 2u32, p, &m, how);
    }
    Ok(s)
}

/// True iff `2^p - 1` is prime. `p = 2` is accepted and answers true.
pub fn lucas_lehmer(p: u64) -> Result<bool> {
    lucas_lehmer_with(p, Reduction::ShiftFold)
}

pub fn lucas_lehmer_with(p: u64, how: Reduction) -> Result<bool> {
    if p == 2 {
        return Ok(true);
    }
    Ok(lucas_lehmer_residue(p, how)?.is_zero())
}

/// Primes `p <= max_p` with `2^p - 1` prime, ascending.
pub fn mersenne_exponents(max_p: u64) -> Vec<u64> {
    (2..=max_p)
        .filter(|&p| is_prime_u64(p))
        .filter(|&p| lucas_lehmer(p).expect("p is prime"))
        .collect()
}

/// `M = (2^p - 1) * 2^(p - 1)` with both factors kept.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EuclideanForm {
    pub p: u64,
    /// `Q = M_p = 2^p - 1`.
    pub mersenne: Natural,
    /// `nbar^2 = 2^(p - 1)`.
    pub half: Natural,
    pub value: Natural,
}

pub fn build_euclidean(p: u64) -> Result<EuclideanForm> {
    if !is_prime_u64(p) {
        return Err(Error::InvalidInput(format!("exponent {p} is not prime")));
    }
    if !lucas_lehmer(p)? {
        return Err(Error::InvalidInput(format!("2^{p} - 1 is not prime")));
    }
    let mersenne = mersenne(p);
    let half = pow2(p - 1);
    let value = &mersenne * &half;
    let form = EuclideanForm {
        p,
        mersenne,
        half,
        value,
    };
    if sigma(&form.factorization()) != &form.value * 2u32 {
        return Err(Error::InvalidInput(format!("sigma(M) != 2M for p = {p}")));
    }
    Ok(form)
}

impl EuclideanForm {
    /// `2^(p-1) * M_p`; the Mersenne factor is certified by Lucas–Lehmer.
    pub fn factorization(&self) -> Factorization {
        Factorization::from_sorted_unchecked(
            vec![(Natural::from(2u32), (self.p - 1) as u32), (self.mersenne.clone(), 1)],
            false,
        )
    }

    /// `nbar = 2^((p - 1) / 2)`; only defined for odd `p`.
    pub fn nbar(&self) -> Option<Natural> {
        (self.p % 2 == 1).then(|| pow2((self.p - 1) / 2))
    }

    fn ratio(a: Natural, b: &Natural) -> ExactRatio {
        ExactRatio::new(a, b.clone()).expect("positive denominator")
    }
}

/// `[r1, r2]` with `r_i = p_i^a_i * sigma(p_i^a_i) / M` for the components
/// `2^(p-1)` and `2^p - 1`, in that order. Always `[1, 2]`.
pub fn check_e4(form: &EuclideanForm) -> Vec<ExactRatio> {
    let sigma_half = &form.half * 2u32 - 1u32;
    let sigma_mersenne = &form.mersenne + 1u32;
    vec![
        EuclideanForm::ratio(&form.half * sigma_half, &form.value),
        EuclideanForm::ratio(&form.mersenne * sigma_mersenne, &form.value),
    ]
}

/// `(sigma(nbar^2) / Q, sigma(Q) / nbar^2)`; always `(1, 2)`.
pub fn check_lemma1(form: &EuclideanForm) -> (ExactRatio, ExactRatio) {
    let sigma_half = &form.half * 2u32 - 1u32;
    let sigma_q = &form.mersenne + 1u32;
    (
        EuclideanForm::ratio(sigma_half, &form.mersenne),
        EuclideanForm::ratio(sigma_q, &form.half),
    )
}

/// `(sigma(Q) / nbar, sigma(nbar) / Q)` for odd `p`; the first equals
/// `2^((p+1)/2) >= 4` and the second is below 1.
pub fn check_lemma3(form: &EuclideanForm) -> Result<(ExactRatio, ExactRatio)> {
    let nbar = form
        .nbar()
        .filter(|_| form.p >= 3)
        .ok_or_else(|| Error::InvalidInput("nbar = 2^((p-1)/2) needs p >= 3 (M = 6 is squarefree)".into()))?;
    let sigma_q = &form.mersenne + 1u32;
    let sigma_nbar = &nbar * 2u32 - 1u32;
    Ok((
        EuclideanForm::ratio(sigma_q, &nbar),
        EuclideanForm::ratio(sigma_nbar, &form.mersenne),
    ))
}

/// The four quantities of the E-7 chain for `p >= 3`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct E7Chain {
    /// `I(M_p)`, in `(1, 8/7]`.
    pub abundancy_mersenne: ExactRatio,
    /// `2 / I(M_p)`.
    pub two_over_abundancy: ExactRatio,
    /// `I((M_p + 1) / 2) = I(2^(p-1))`, in `[7/4, 2)`.
    pub abundancy_half: ExactRatio,
    /// `I(sqrt((M_p + 1) / 2)) = I(nbar)`, in `(sqrt(7/4), 2)`.
    pub abundancy_nbar: ExactRatio,
    pub attains_upper_bound: bool,
    pub check: Check,
}

fn e7_chain(form: &EuclideanForm) -> Option<E7Chain> {
    let nbar = form.nbar().filter(|_| form.p >= 3)?;
    let one = ExactRatio::from_integer(1u32);
    let two = ExactRatio::from_integer(2u32);
    let eight_sevenths = ExactRatio::from_u64s(8, 7);
    let seven_fourths = ExactRatio::from_u64s(7, 4);

    let abundancy_mersenne = EuclideanForm::ratio(&form.mersenne + 1u32, &form.mersenne);
    let two_over_abundancy = &two / &abundancy_mersenne;
    let abundancy_half = EuclideanForm::ratio(&form.half * 2u32 - 1u32, &form.half);
    let abundancy_nbar = EuclideanForm::ratio(&nbar * 2u32 - 1u32, &nbar);

    let ok = one < abundancy_mersenne
        && abundancy_mersenne <= eight_sevenths
        && seven_fourths <= two_over_abundancy
        && two_over_abundancy == abundancy_half
        && abundancy_half < two
        && cmp_ratio_vs_root(&eight_sevenths, &seven_fourths, 2) == Ordering::Less
        && cmp_ratio_vs_root(&abundancy_nbar, &seven_fourths, 2) == Ordering::Greater
        && abundancy_nbar < two;

    Some(E7Chain {
        attains_upper_bound: abundancy_mersenne == eight_sevenths,
        abundancy_mersenne,
        two_over_abundancy,
        abundancy_half,
        abundancy_nbar,
        check: Check::asserted(ok),
    })
}

/// Every Euclid-side item evaluated on one form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EuclidReport {
    pub form: EuclideanForm,
    /// `sigma(M) = 2M`.
    pub perfect: Check,
    /// `M_p = 3 (mod 4)`.
    pub e2_mod4: Check,
    /// `nu_{M_p}(M) = 1`.
    pub e3_exponent_one: Check,
    pub e4_values: Vec<ExactRatio>,
    pub e4: Check,
    /// `None` for `p = 2`.
    pub e7: Option<E7Chain>,
    pub e7_check: Check,
    /// `omega(M) = 2`.
    pub e8_omega: Check,
    /// `gcd(2^p - 1, 2^(p-1)) = 1`.
    pub e9_gcd: Check,
    pub lemma1: (ExactRatio, ExactRatio),
    pub lemma1_check: Check,
    /// `None` for `p = 2`.
    pub lemma3: Option<(ExactRatio, ExactRatio)>,
    pub lemma3_check: Check,
    /// `nbar^2 < Q^K`, i.e. `2^(p-1) < 2^p - 1`.
    pub remark2: Check,
}

impl EuclidReport {
    /// `(label, check)` for every item, in table order.
    pub fn checks(&self) -> [(&'static str, Check); 10] {
        [
            ("perfect", self.perfect),
            ("e2_mod4", self.e2_mod4),
            ("e3_exponent_one", self.e3_exponent_one),
            ("e4", self.e4),
            ("e7", self.e7_check),
            ("e8_omega", self.e8_omega),
            ("e9_gcd", self.e9_gcd),
            ("lemma1", self.lemma1_check),
            ("lemma3", self.lemma3_check),
            ("remark2", self.remark2),
        ]
    }

    pub fn has_violation(&self) -> bool {
        self.checks().iter().any(|(_, c)| c.is_violation())
    }
}

pub fn euclid_report(form: &EuclideanForm) -> EuclidReport {
    let one = ExactRatio::from_integer(1u32);
    let two = ExactRatio::from_integer(2u32);
    let factorization = form.factorization();

    let perfect = Check::asserted(sigma(&factorization) == &form.value * 2u32);
    let e2_mod4 = Check::asserted((&form.mersenne % 4u32) == Natural::from(3u32));
    let e3_exponent_one = Check::asserted(valuation(&form.value, &form.mersenne) == 1);

    let e4_values = check_e4(form);
    let e4 = Check::asserted(e4_values == [one.clone(), two.clone()]);

    let e7 = e7_chain(form);
    let e7_check = e7.as_ref().map_or_else(Check::not_applicable, |c| c.check);

    let e8_omega = Check::asserted(factorization.omega() == 2);
    let e9_gcd = Check::asserted(form.mersenne.gcd(&form.half).is_one());

    let lemma1 = check_lemma1(form);
    let lemma1_check = Check::asserted(lemma1.0 == one && lemma1.1 == two);

    let lemma3 = check_lemma3(form).ok();
    let lemma3_check = match &lemma3 {
        None => Check::not_applicable(),
        Some((first, second)) => {
            let closed_form = ExactRatio::from_integer(pow2(form.p.div_ceil(2)));
            Check::asserted(
                *first == closed_form && *first >= ExactRatio::from_integer(4u32) && *second < one,
            )
        }
    };

    let remark2 = Check::asserted(form.half < form.mersenne);

    EuclidReport {
        form: form.clone(),
        perfect,
        e2_mod4,
        e3_exponent_one,
        e4_values,
        e4,
        e7,
        e7_check,
        e8_omega,
        e9_gcd,
        lemma1,
        lemma1_check,
        lemma3,
        lemma3_check,
        remark2,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::verdict::Verdict;
    use alloc::string::{String, ToString};

    fn strs(v: &[ExactRatio]) -> Vec<String> {
        v.iter().map(|r| r.to_string()).collect()
    }

    #[test]
    fn lucas_lehmer_points() {
        assert_eq!(lucas_lehmer(3), Ok(true));
        assert_eq!(lucas_lehmer(11), Ok(false));
        assert_eq!(lucas_lehmer(61), Ok(true));
        assert_eq!(lucas_lehmer(2), Ok(true));
        assert!(matches!(lucas_lehmer(9), Err(Error::InvalidInput(_))));
        assert!(matches!(lucas_lehmer(1), Err(Error::InvalidInput(_))));
    }

    #[test]
    fn shift_fold_is_bit_identical() {
        for p in [3u64, 5, 7, 11, 13, 23, 29, 31, 61, 67, 89, 101, 127, 257] {
            assert_eq!(
                lucas_lehmer_residue(p, Reduction::Division).unwrap(),
                lucas_lehmer_residue(p, Reduction::ShiftFold).unwrap(),
                "p = {p}"
            );
        }
    }

    #[test]
    fn exponent_lists() {
        assert_eq!(mersenne_exponents(10), [2, 3, 5, 7]);
        assert_eq!(mersenne_exponents(127), [2, 3, 5, 7, 13, 17, 19, 31, 61, 89, 107, 127]);
        assert!(mersenne_exponents(1).is_empty());
    }

    #[test]
    fn build_points() {
        assert_eq!(build_euclidean(2).unwrap().value, Natural::from(6u32));
        assert_eq!(build_euclidean(3).unwrap().value, Natural::from(28u32));
        assert_eq!(build_euclidean(5).unwrap().value, Natural::from(496u32));
        assert!(build_euclidean(11).is_err());
        assert!(build_euclidean(4).is_err());
    }

    #[test]
    fn e4_and_lemmas() {
        for p in [2, 3, 5] {
            assert_eq!(strs(&check_e4(&build_euclidean(p).unwrap())), ["1", "2"]);
        }
        for p in [2, 5, 13] {
            let (a, b) = check_lemma1(&build_euclidean(p).unwrap());
            assert_eq!((a.to_string(), b.to_string()), ("1".into(), "2".into()));
        }
        let (a, b) = check_lemma3(&build_euclidean(3).unwrap()).unwrap();
        assert_eq!((a.to_string(), b.to_string()), ("4".into(), "3/7".into()));
        let (a, b) = check_lemma3(&build_euclidean(5).unwrap()).unwrap();
        assert_eq!((a.to_string(), b.to_string()), ("8".into(), "7/31".into()));
        assert!(matches!(check_lemma3(&build_euclidean(2).unwrap()), Err(Error::InvalidInput(_))));
    }

    #[test]
    fn reports() {
        let r = euclid_report(&build_euclidean(3).unwrap());
        assert!(r.checks().iter().all(|(_, c)| c.verdict == Verdict::Pass));
        let e7 = r.e7.unwrap();
        assert!(e7.attains_upper_bound);
        assert_eq!(e7.abundancy_mersenne.to_string(), "8/7");
        assert_eq!(e7.abundancy_half.to_string(), "7/4");
        assert_eq!(e7.abundancy_nbar.to_string(), "3/2");

        let r = euclid_report(&build_euclidean(2).unwrap());
        for (name, c) in r.checks() {
            let expect = if name == "e7" || name == "lemma3" { Verdict::NotApplicable } else { Verdict::Pass };
            assert_eq!(c.verdict, expect, "{name}");
        }
        assert!(!r.has_violation());

        let r = euclid_report(&build_euclidean(13).unwrap());
        assert!(r.checks().iter().all(|(_, c)| c.verdict == Verdict::Pass));
        assert!(!r.e7.unwrap().attains_upper_bound);
    }
}
