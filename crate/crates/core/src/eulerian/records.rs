//! Records of closeness to perfection among odd numbers `q^k * s^2`
//! (`s > 1`), generated constructively rather than by scanning every odd
//! number.
//!
//! Candidates are produced stratum by stratum over the square root `s`,
//! with `sigma(s^2)` read off a smallest-prime-factor table and the primes
//! `q = 1 (mod 4)` taken from one segmented sieve. The surviving candidates
//! are sorted by value and folded once, keeping each strict improvement of
//! `|sigma(x)/x - 2|`.
//!
//! All of this runs in machine words: `|sigma(x) - 2x|` and the cross
//! products used to compare closeness fit comfortably in `u128` for every
//! limit accepted here.

use alloc::format;
use alloc::vec::Vec;
use core::cmp::Ordering;

use crate::error::{Error, Result};
use crate::ratio::ExactRatio;
use crate::sieve::{for_each_prime_in, spf_sieve};

use super::EulerianDecomposition;

/// Smallest admissible value, `5 * 3^2`.
const FIRST_CANDIDATE: u64 = 45;

/// Which candidates survive to the sort-and-scan phase.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CandidateFilter {
    /// Keep every candidate.
    All,
    /// Drop candidates that cannot be records because the smallest
    /// candidate already lies below them and is at least as close to
    /// perfection. Output is identical to [`CandidateFilter::All`].
    Dominance,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EnumerationConfig {
    /// Upper bound on materialized candidates.
    pub max_candidates: usize,
    /// Upper bound on stored primes `q = 1 (mod 4)`.
    pub max_primes: usize,
    pub filter: CandidateFilter,
}

impl Default for EnumerationConfig {
    fn default() -> Self {
        Self {
            max_candidates: 1 << 25,
            max_primes: 1 << 26,
            filter: CandidateFilter::Dominance,
        }
    }
}

/// One `q^k * s^2` before record selection.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Candidate {
    pub value: u64,
    pub q: u32,
    pub k: u32,
    pub s: u32,
    /// `|sigma(value) - 2 value|`.
    pub deviation: u64,
}

impl Candidate {
    /// Compares `deviation / value` exactly.
    fn cmp_closeness(&self, other: &Self) -> Ordering {
        (self.deviation as u128 * other.value as u128).cmp(&(other.deviation as u128 * self.value as u128))
    }

    pub fn closeness(&self) -> ExactRatio {
        ExactRatio::from_u64s(self.deviation, self.value)
    }
}

/// A member of the record sequence.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RecordTerm {
    /// 1-based position in the sequence.
    pub index: usize,
    pub decomposition: EulerianDecomposition,
    /// `|I(value) - 2|`.
    pub closeness: ExactRatio,
}

fn sigma_square(factors: &[(u32, u32)]) -> u128 {
    factors.iter().fold(1u128, |acc, &(p, e)| {
        let p = p as u128;
        let mut term = 1u128;
        let mut pk = 1u128;
        for _ in 0..2 * e {
            pk *= p;
            term += pk;
        }
        acc * term
    })
}

fn primes_one_mod_four(bound: u64, max: usize) -> Result<Vec<u32>> {
    let mut out: Vec<u32> = Vec::new();
    let mut overflow = false;
    for_each_prime_in(5, bound, |p| {
        if p % 4 == 1 && !overflow {
            if out.len() == max || out.try_reserve(1).is_err() {
                overflow = true;
            } else {
                out.push(p as u32);
            }
        }
    });
    if overflow {
        return Err(Error::ResourceLimit(format!(
            "more than {max} primes = 1 (mod 4) below {bound}"
        )));
    }
    Ok(out)
}

/// Every `q^k * s^2 <= limit` (odd `s >= 3`, `gcd(q, s) = 1`), filtered as
/// configured, in generation order.
pub fn candidates(limit: u64, config: &EnumerationConfig) -> Result<Vec<Candidate>> {
    if limit < FIRST_CANDIDATE {
        return Ok(Vec::new());
    }
    let q_max = limit / 9;
    if q_max > u32::MAX as u64 {
        return Err(Error::ResourceLimit(format!("limit {limit} is beyond the 32-bit prime range")));
    }
    let s_max = (limit / 5).isqrt();
    let spf = spf_sieve(s_max.max(2))?;
    let primes = primes_one_mod_four(q_max, config.max_primes)?;

    let coprime = |q: u64, s: u64| q > s || !s.is_multiple_of(q);

    // The smallest candidate of all is the first record and the yardstick
    // for dominance pruning.
    let mut first: Option<Candidate> = None;
    let mut s = 3u64;
    while s <= s_max && first.is_none_or(|c| 5 * s * s < c.value) {
        if let Some(&q) = primes.iter().find(|&&q| coprime(q as u64, s)) {
            let value = q as u64 * s * s;
            if value <= limit && first.is_none_or(|c| value < c.value) {
                let sigma = (q as u128 + 1) * sigma_square(&spf.factor(s));
                first = Some(Candidate {
                    value,
                    q,
                    k: 1,
                    s: s as u32,
                    deviation: sigma.abs_diff(2 * value as u128) as u64,
                });
            }
        }
        s += 2;
    }
    let Some(first) = first else {
        return Ok(Vec::new());
    };
    let keep = |c: &Candidate| match config.filter {
        CandidateFilter::All => true,
        CandidateFilter::Dominance => c.value == first.value || c.cmp_closeness(&first) == Ordering::Less,
    };

    let mut out: Vec<Candidate> = Vec::new();
    for s in (3..=s_max).step_by(2) {
        let s2 = s * s;
        let sigma_s2 = sigma_square(&spf.factor(s));
        let bound = limit / s2;
        for &q32 in primes.iter().take_while(|&&q| q as u64 <= bound) {
            let q = q32 as u64;
            if !coprime(q, s) {
                continue;
            }
            let q4 = (q as u128).pow(4);
            let (mut qk, mut sigma_qk, mut k) = (q as u128, q as u128 + 1, 1u32);
            loop {
                let value = (qk * s2 as u128) as u64;
                let sigma = sigma_qk * sigma_s2;
                let c = Candidate {
                    value,
                    q: q32,
                    k,
                    s: s as u32,
                    deviation: sigma.abs_diff(2 * value as u128) as u64,
                };
                if keep(&c) {
                    if out.len() == config.max_candidates || out.try_reserve(1).is_err() {
                        return Err(Error::ResourceLimit(format!(
                            "more than {} candidates below {limit}",
                            config.max_candidates
                        )));
                    }
                    out.push(c);
                }
                // next exponent k + 4
                let next = match qk.checked_mul(q4) {
                    Some(next) if next <= bound as u128 => next,
                    _ => break,
                };
                let q = q as u128;
                sigma_qk += qk * q * (1 + q + q * q + q * q * q);
                qk = next;
                k += 4;
            }
        }
    }
    Ok(out)
}

/// Selects strict records from candidates sorted by value.
fn scan_records(mut cands: Vec<Candidate>) -> Vec<Candidate> {
    cands.sort_by_key(|c| c.value);
    let mut best: Option<Candidate> = None;
    let mut out = Vec::new();
    for c in cands {
        if best.is_none_or(|b| c.cmp_closeness(&b) == Ordering::Less) {
            best = Some(c);
            out.push(c);
        }
    }
    out
}

pub fn enumerate_a228059(limit: u64) -> Result<Vec<RecordTerm>> {
    enumerate_a228059_with(limit, &EnumerationConfig::default())
}

pub fn enumerate_a228059_with(limit: u64, config: &EnumerationConfig) -> Result<Vec<RecordTerm>> {
    let records = scan_records(candidates(limit, config)?);
    Ok(records
        .into_iter()
        .enumerate()
        .map(|(i, c)| RecordTerm {
            index: i + 1,
            decomposition: EulerianDecomposition {
                q: c.q.into(),
                k: c.k,
                n: c.s.into(),
                value: c.value.into(),
            },
            closeness: c.closeness(),
        })
        .collect())
}

/// True iff no odd `q^k * n^2 <= limit` (with `n > 1`) is perfect.
///
/// A perfect candidate would have closeness zero and so would necessarily
/// appear among the records.
pub fn verify_no_perfect(limit: u64) -> Result<bool> {
    verify_no_perfect_with(limit, &EnumerationConfig::default())
}

pub fn verify_no_perfect_with(limit: u64, config: &EnumerationConfig) -> Result<bool> {
    Ok(enumerate_a228059_with(limit, config)?
        .iter()
        .all(|t| !t.closeness.is_zero()))
}
