//! Independent reference computations for the `oracle` verification
//! suite: plain trial division, divisor enumeration, and an exhaustive scan
//! of odd numbers for closeness records.

use perfectnum_core::euclidean::lucas_lehmer;
use perfectnum_core::eulerian::{eulerian_decompose_with, RecordTerm};
use perfectnum_core::{is_prime, natural, sigma, spf_sieve, Factorizer, Natural, Result};

/// Values handled by the oracles all fit a machine word.
fn word(x: &Natural) -> u64 {
    u64::try_from(x).expect("value fits u64")
}

/// `sigma(x)` by summing divisor pairs up to `sqrt x`.
pub fn divisor_sum(x: u64) -> u64 {
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

/// `sigma(x)` from a trial-division factorization.
pub fn trial_sigma(mut x: u64) -> u64 {
    let mut total = 1u64;
    let mut d = 2u64;
    while d * d <= x {
        if x.is_multiple_of(d) {
            let mut term = 1;
            let mut pk = 1;
            while x.is_multiple_of(d) {
                x /= d;
                pk *= d;
                term += pk;
            }
            total *= term;
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if x > 1 {
        total *= x + 1;
    }
    total
}

pub fn trial_is_prime(x: u64) -> bool {
    x >= 2 && (2..).take_while(|d| d * d <= x).all(|d| !x.is_multiple_of(d))
}

/// Scans every odd `x <= limit`, keeps those with an Eulerian decomposition
/// and `n > 1`, and returns `(value, |sigma(x) - 2x|)` for each strict
/// record of `|sigma(x) - 2x| / x`.
pub fn brute_force_records(limit: u64, factorizer: &Factorizer) -> Result<Vec<(u64, u64)>> {
    let mut records: Vec<(u64, u64)> = Vec::new();
    let mut x = 1;
    while x <= limit {
        let d = eulerian_decompose_with(factorizer, &Natural::from(x))?;
        if d.is_some_and(|d| d.n > Natural::from(1u32)) {
            let dev = trial_sigma(x).abs_diff(2 * x);
            let better = records
                .last()
                .is_none_or(|&(v, e)| (dev as u128) * (v as u128) < (e as u128) * (x as u128));
            if better {
                records.push((x, dev));
            }
        }
        x += 2;
    }
    Ok(records)
}

/// `(value, deviation)` pairs of enumerated terms, for comparison with
/// [`brute_force_records`].
pub fn term_pairs(terms: &[RecordTerm]) -> Vec<(u64, u64)> {
    terms
        .iter()
        .map(|t| {
            let v = word(&t.decomposition.value);
            let c = &t.closeness;
            // closeness = dev / v in lowest terms
            let dev = word(c.numer()) * (v / word(c.denom()));
            (v, dev)
        })
        .collect()
}

/// Primes `p <= max_p` where Lucas–Lehmer disagrees with a direct
/// primality test of `2^p - 1` (trial division up to 2^31, Miller–Rabin
/// beyond).
pub fn lucas_lehmer_mismatches(max_p: u64) -> Vec<u64> {
    (2..=max_p)
        .filter(|&p| trial_is_prime(p))
        .filter(|&p| {
            let ll = lucas_lehmer(p).expect("prime exponent");
            let direct = if p <= 31 {
                trial_is_prime((1u64 << p) - 1)
            } else {
                is_prime(&natural::mersenne(p))
            };
            ll != direct
        })
        .collect()
}

/// Values `x <= limit` where `sigma` from the factorization differs from
/// divisor enumeration.
pub fn sigma_mismatches(limit: u64, factorizer: &Factorizer) -> Result<Vec<u64>> {
    let mut bad = Vec::new();
    for x in 1..=limit {
        let f = factorizer.factorize(&Natural::from(x))?;
        if word(&sigma(&f)) != divisor_sum(x) {
            bad.push(x);
        }
    }
    Ok(bad)
}

/// Values `2 <= x <= limit` whose factorization does not match the
/// smallest-prime-factor table, does not multiply back to `x`, or lists a
/// non-prime.
pub fn factorization_mismatches(limit: u64, factorizer: &Factorizer) -> Result<Vec<u64>> {
    let table = spf_sieve(limit.max(2))?;
    let mut bad = Vec::new();
    for x in 2..=limit {
        let f = factorizer.factorize(&Natural::from(x))?;
        let expect: Vec<(u64, u32)> = table.factor(x).into_iter().map(|(p, e)| (p as u64, e)).collect();
        let got: Vec<(u64, u32)> = f.factors().iter().map(|(p, e)| (word(p), *e)).collect();
        let primes_ok = f.factors().iter().all(|(p, _)| is_prime(p));
        if got != expect || f.value() != Natural::from(x) || !primes_ok {
            bad.push(x);
        }
    }
    Ok(bad)
}
