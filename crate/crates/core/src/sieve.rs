//! Prime sieves: a linear smallest-prime-factor table and a segmented
//! odd-only Eratosthenes sieve for long runs of primes.

use alloc::format;
use alloc::vec::Vec;

use crate::error::{Error, Result};

fn try_alloc<T: Clone>(len: usize, fill: T, what: &str) -> Result<Vec<T>> {
    let mut v = Vec::new();
    v.try_reserve_exact(len)
        .map_err(|_| Error::ResourceLimit(format!("cannot allocate {what} of {len} entries")))?;
    v.resize(len, fill);
    Ok(v)
}

/// `spf[m]` is the smallest prime factor of `m` for `2 <= m <= limit`.
#[derive(Clone, Debug)]
pub struct SmallestPrimeFactorTable {
    spf: Vec<u32>,
    primes: Vec<u32>,
}

/// Builds the table with the linear (Euler) sieve: every composite is
/// struck exactly once, by its smallest prime factor.
pub fn spf_sieve(limit: u64) -> Result<SmallestPrimeFactorTable> {
    if limit < 2 {
        return Err(Error::InvalidInput(format!("sieve limit must be at least 2, got {limit}")));
    }
    if limit >= u32::MAX as u64 {
        return Err(Error::ResourceLimit(format!("sieve limit {limit} exceeds the 32-bit table range")));
    }
    let n = limit as usize;
    let mut spf = try_alloc(n + 1, 0u32, "smallest-prime-factor table")?;
    let mut primes: Vec<u32> = Vec::new();
    for i in 2..=n {
        if spf[i] == 0 {
            spf[i] = i as u32;
            primes.push(i as u32);
        }
        let si = spf[i];
        for &p in &primes {
            let m = p as usize * i;
            if p > si || m > n {
                break;
            }
            spf[m] = p;
        }
    }
    Ok(SmallestPrimeFactorTable { spf, primes })
}

impl SmallestPrimeFactorTable {
    pub fn limit(&self) -> u64 {
        (self.spf.len() - 1) as u64
    }

    /// Smallest prime factor of `m`; `None` outside `2..=limit`.
    pub fn get(&self, m: u64) -> Option<u32> {
        if m < 2 {
            return None;
        }
        self.spf.get(m as usize).copied()
    }

    /// All primes up to the table limit, ascending.
    pub fn primes(&self) -> &[u32] {
        &self.primes
    }

    pub fn is_prime(&self, m: u64) -> bool {
        self.get(m) == Some(m as u32)
    }

    /// Prime factorization of `m` as ascending `(prime, exponent)` pairs,
    /// one table lookup per prime factor counted with multiplicity.
    ///
    /// # Panics
    /// If `m` exceeds the table limit.
    pub fn factor(&self, mut m: u64) -> Vec<(u32, u32)> {
        assert!(m <= self.limit(), "{m} is beyond the sieve limit {}", self.limit());
        let mut out: Vec<(u32, u32)> = Vec::new();
        while m > 1 {
            let p = self.spf[m as usize];
            m /= p as u64;
            match out.last_mut() {
                Some((q, e)) if *q == p => *e += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }
}

/// Primes up to `limit` by a plain odd-only sieve; for bases and small
/// trial-division tables.
pub fn primes_up_to(limit: u64) -> Vec<u32> {
    let mut out = Vec::new();
    if limit < 2 {
        return out;
    }
    out.push(2);
    let half = ((limit - 1) / 2) as usize; // index i represents 2i + 1
    let mut composite = alloc::vec![false; half + 1];
    let mut i = 1;
    while i <= half {
        if !composite[i] {
            let p = 2 * i + 1;
            out.push(p as u32);
            let mut j = (p * p - 1) / 2;
            while j <= half {
                composite[j] = true;
                j += p;
            }
        }
        i += 1;
    }
    out
}

const SEGMENT_ODDS: usize = 1 << 18;

/// Calls `emit` with every prime in `[lo, hi]`, ascending, using a
/// segmented odd-only sieve so the working set stays cache sized.
pub fn for_each_prime_in(lo: u64, hi: u64, mut emit: impl FnMut(u64)) {
    if hi < 2 || lo > hi {
        return;
    }
    if lo <= 2 {
        emit(2);
    }
    let base = primes_up_to(hi.isqrt());
    let first_odd = core::cmp::max(3, lo | 1);
    if first_odd > hi {
        return;
    }
    let mut mark = alloc::vec![false; SEGMENT_ODDS];
    let mut seg_lo = first_odd;
    while seg_lo <= hi {
        let span = core::cmp::min(SEGMENT_ODDS as u64, (hi - seg_lo) / 2 + 1) as usize;
        let seg_hi = seg_lo + 2 * (span as u64 - 1);
        mark[..span].fill(false);
        for &p in base.iter().skip(1) {
            let p = p as u64;
            let sq = p * p;
            if sq > seg_hi {
                break;
            }
            let mut start = if sq >= seg_lo { sq } else { seg_lo.div_ceil(p) * p };
            if start % 2 == 0 {
                start += p;
            }
            let mut j = ((start - seg_lo) / 2) as usize;
            while j < span {
                mark[j] = true;
                j += p as usize;
            }
        }
        for (j, &m) in mark[..span].iter().enumerate() {
            if !m {
                emit(seg_lo + 2 * j as u64);
            }
        }
        seg_lo = seg_hi + 2;
    }
}
