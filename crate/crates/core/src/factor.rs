//! Integer factorization: wheel trial division, then Pollard's rho with
//! Brent's cycle detection on whatever survives.
//!
//! The splitting constants come from a fixed-seed generator, and the final
//! list is sorted, so the output never depends on which split was found
//! first.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::natural::{exact_sqrt, Natural};
use crate::primality::{is_prime_u64, mul_mod, primality, Primality, SplitMix64};

const TRIAL_BOUND: u64 = 1 << 12;
const DEFAULT_EFFORT: u64 = 50_000_000;
const BATCH: u64 = 128;

/// Canonical prime factorization: primes strictly increasing, exponents
/// positive.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Factorization {
    factors: Vec<(Natural, u32)>,
    probabilistic: bool,
}

impl Factorization {
    /// The empty factorization of 1.
    pub fn one() -> Self {
        Self {
            factors: Vec::new(),
            probabilistic: false,
        }
    }

    /// Builds a factorization from pairs the caller already knows to be
    /// prime powers. Pairs are sorted and merged; zero exponents dropped.
    /// Every base is checked with [`primality`].
    pub fn from_prime_powers(pairs: impl IntoIterator<Item = (Natural, u32)>) -> Result<Self> {
        let mut factors: Vec<(Natural, u32)> = pairs.into_iter().filter(|(_, e)| *e > 0).collect();
        factors.sort();
        let mut merged: Vec<(Natural, u32)> = Vec::with_capacity(factors.len());
        let mut probabilistic = false;
        for (p, e) in factors {
            match merged.last_mut() {
                Some((q, f)) if *q == p => *f += e,
                _ => {
                    match primality(&p) {
                        Primality::Composite => {
                            return Err(Error::InvalidInput(format!("{p} is not prime")))
                        }
                        Primality::ProbablePrime => probabilistic = true,
                        Primality::Prime => {}
                    }
                    merged.push((p, e));
                }
            }
        }
        Ok(Self {
            factors: merged,
            probabilistic,
        })
    }

    pub(crate) fn from_sorted_unchecked(factors: Vec<(Natural, u32)>, probabilistic: bool) -> Self {
        debug_assert!(factors.windows(2).all(|w| w[0].0 < w[1].0));
        Self {
            factors,
            probabilistic,
        }
    }

    pub fn factors(&self) -> &[(Natural, u32)] {
        &self.factors
    }

    /// Number of distinct prime factors.
    pub fn omega(&self) -> usize {
        self.factors.len()
    }

    /// True when some listed prime was only certified probabilistically.
    pub fn is_probabilistic(&self) -> bool {
        self.probabilistic
    }

    /// Exponent of `p` (zero when absent).
    pub fn exponent_of(&self, p: &Natural) -> u32 {
        self.factors
            .binary_search_by(|(q, _)| q.cmp(p))
            .map(|i| self.factors[i].1)
            .unwrap_or(0)
    }

    /// The prime powers `p^e`, in prime order.
    pub fn prime_powers(&self) -> impl Iterator<Item = Natural> + '_ {
        self.factors.iter().map(|(p, e)| num_traits::pow(p.clone(), *e as usize))
    }

    /// Multiplies the factorization back out.
    pub fn value(&self) -> Natural {
        self.prime_powers().fold(Natural::one(), |acc, pe| acc * pe)
    }

    /// Factorization of `self * other`.
    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Vec::with_capacity(self.factors.len() + other.factors.len());
        let (mut i, mut j) = (0, 0);
        while i < self.factors.len() || j < other.factors.len() {
            let next = match (self.factors.get(i), other.factors.get(j)) {
                (Some(a), Some(b)) if a.0 == b.0 => {
                    i += 1;
                    j += 1;
                    (a.0.clone(), a.1 + b.1)
                }
                (Some(a), Some(b)) if a.0 < b.0 => {
                    i += 1;
                    a.clone()
                }
                (Some(a), None) => {
                    i += 1;
                    a.clone()
                }
                (_, Some(b)) => {
                    j += 1;
                    b.clone()
                }
                (None, None) => unreachable!(),
            };
            out.push(next);
        }
        Self::from_sorted_unchecked(out, self.probabilistic || other.probabilistic)
    }

    /// Every exponent multiplied by `k`.
    pub fn pow(&self, k: u32) -> Self {
        Self::from_sorted_unchecked(
            self.factors.iter().map(|(p, e)| (p.clone(), e * k)).collect(),
            self.probabilistic,
        )
    }
}

/// `3^2 * 5` style rendering; `1` for the empty product.
impl fmt::Display for Factorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return f.write_str("1");
        }
        for (i, (p, e)) in self.factors.iter().enumerate() {
            if i > 0 {
                f.write_str(" * ")?;
            }
            if *e == 1 {
                write!(f, "{p}")?;
            } else {
                write!(f, "{p}^{e}")?;
            }
        }
        Ok(())
    }
}

/// Factorization engine with a bound on Pollard-rho iterations.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Factorizer {
    effort_bound: u64,
}

impl Default for Factorizer {
    fn default() -> Self {
        Self {
            effort_bound: DEFAULT_EFFORT,
        }
    }
}

impl Factorizer {
    /// `effort_bound` caps the total number of rho iterations spent on one
    /// input; exceeding it yields [`Error::ResourceLimit`].
    pub fn with_effort_bound(effort_bound: u64) -> Self {
        Self { effort_bound }
    }

    pub fn effort_bound(&self) -> u64 {
        self.effort_bound
    }

    pub fn factorize(&self, x: &Natural) -> Result<Factorization> {
        if x.is_zero() {
            return Err(Error::InvalidInput("cannot factor 0".into()));
        }
        if let Some(v) = x.to_u64() {
            return self.factorize_u64(v);
        }
        let mut primes: Vec<(Natural, u32)> = Vec::new();
        let mut rest = x.clone();
        for d in trial_divisors() {
            if rest.is_one() {
                break;
            }
            let mut e = 0;
            loop {
                let (quo, rem) = rest.div_rem(&BigUint::from(d));
                if !rem.is_zero() {
                    break;
                }
                rest = quo;
                e += 1;
            }
            if e > 0 {
                primes.push((d.into(), e));
            }
        }
        let mut budget = self.effort_bound;
        let mut probabilistic = false;
        let mut stack = vec![(rest, 1u32)];
        while let Some((n, mult)) = stack.pop() {
            if n.is_one() {
                continue;
            }
            if let Some(v) = n.to_u64() {
                for (p, e) in self.split_u64(v, &mut budget)? {
                    primes.push((p.into(), e * mult));
                }
                continue;
            }
            match primality(&n) {
                Primality::Prime => {
                    primes.push((n, mult));
                    continue;
                }
                Primality::ProbablePrime => {
                    probabilistic = true;
                    primes.push((n, mult));
                    continue;
                }
                Primality::Composite => {}
            }
            if let Some(r) = exact_sqrt(&n) {
                stack.push((r, mult * 2));
                continue;
            }
            let d = brent_big(&n, &mut budget)?;
            let other = &n / &d;
            stack.push((d, mult));
            stack.push((other, mult));
        }
        Ok(canonical(primes, probabilistic))
    }

    fn factorize_u64(&self, v: u64) -> Result<Factorization> {
        let mut budget = self.effort_bound;
        let pairs = self.split_u64(v, &mut budget)?;
        Ok(canonical(
            pairs.into_iter().map(|(p, e)| (Natural::from(p), e)).collect(),
            false,
        ))
    }

    /// Unsorted `(prime, exponent)` pairs of `v`, possibly repeating primes.
    fn split_u64(&self, mut v: u64, budget: &mut u64) -> Result<Vec<(u64, u32)>> {
        let mut out = Vec::new();
        for d in trial_divisors() {
            if d * d > v {
                break;
            }
            if v.is_multiple_of(d) {
                let mut e = 0;
                while v.is_multiple_of(d) {
                    v /= d;
                    e += 1;
                }
                out.push((d, e));
            }
        }
        if v == 1 {
            return Ok(out);
        }
        if v < TRIAL_BOUND * TRIAL_BOUND {
            out.push((v, 1));
            return Ok(out);
        }
        let mut stack = vec![(v, 1u32)];
        while let Some((n, mult)) = stack.pop() {
            if n == 1 {
                continue;
            }
            if is_prime_u64(n) {
                out.push((n, mult));
                continue;
            }
            let r = n.isqrt();
            if r * r == n {
                stack.push((r, mult * 2));
                continue;
            }
            let d = brent_u64(n, budget)?;
            stack.push((d, mult));
            stack.push((n / d, mult));
        }
        Ok(out)
    }
}

/// Factors `x` with the default effort bound.
pub fn factorize(x: &Natural) -> Result<Factorization> {
    Factorizer::default().factorize(x)
}

fn canonical(mut primes: Vec<(Natural, u32)>, probabilistic: bool) -> Factorization {
    primes.sort();
    let mut merged: Vec<(Natural, u32)> = Vec::with_capacity(primes.len());
    for (p, e) in primes {
        match merged.last_mut() {
            Some((q, f)) if *q == p => *f += e,
            _ => merged.push((p, e)),
        }
    }
    Factorization::from_sorted_unchecked(merged, probabilistic)
}

/// 2, 3, then 6k +- 1 below the trial bound.
fn trial_divisors() -> impl Iterator<Item = u64> {
    [2u64, 3]
        .into_iter()
        .chain((1..).flat_map(|k: u64| [6 * k - 1, 6 * k + 1]))
        .take_while(|&d| d < TRIAL_BOUND)
}

fn exhausted(n: impl fmt::Display) -> Error {
    Error::ResourceLimit(format!("effort bound exhausted while splitting {n}"))
}

fn brent_u64(n: u64, budget: &mut u64) -> Result<u64> {
    let mut rng = SplitMix64::new(n);
    loop {
        let c = rng.next_u64() % (n - 1) + 1;
        let y0 = rng.next_u64() % n;
        let f = |x: u64| ((mul_mod(x, x, n) as u128 + c as u128) % n as u128) as u64;
        let (mut y, mut r, mut q, mut g) = (y0, 1u64, 1u64, 1u64);
        let (mut x, mut ys) = (y, y);
        while g == 1 {
            x = y;
            for _ in 0..r {
                y = f(y);
            }
            let mut k = 0;
            while k < r && g == 1 {
                ys = y;
                let steps = BATCH.min(r - k);
                if *budget < steps {
                    return Err(exhausted(n));
                }
                *budget -= steps;
                for _ in 0..steps {
                    y = f(y);
                    q = mul_mod(q, x.abs_diff(y), n);
                }
                g = q.gcd(&n);
                k += BATCH;
            }
            r *= 2;
        }
        if g == n {
            loop {
                if *budget == 0 {
                    return Err(exhausted(n));
                }
                *budget -= 1;
                ys = f(ys);
                g = x.abs_diff(ys).gcd(&n);
                if g > 1 {
                    break;
                }
            }
        }
        if g != n {
            return Ok(g);
        }
    }
}

fn brent_big(n: &BigUint, budget: &mut u64) -> Result<BigUint> {
    let mut rng = SplitMix64::new(n.iter_u64_digits().next().unwrap_or(0));
    let one = BigUint::one();
    let abs_diff = |a: &BigUint, b: &BigUint| if a >= b { a - b } else { b - a };
    loop {
        let c = BigUint::from(rng.next_u64()) % n;
        let f = |x: &BigUint| (x * x + &c) % n;
        let mut y = BigUint::from(rng.next_u64()) % n;
        let (mut r, mut q, mut g) = (1u64, one.clone(), one.clone());
        let (mut x, mut ys) = (y.clone(), y.clone());
        while g.is_one() {
            x = y.clone();
            for _ in 0..r {
                y = f(&y);
            }
            let mut k = 0;
            while k < r && g.is_one() {
                ys = y.clone();
                let steps = BATCH.min(r - k);
                if *budget < steps {
                    return Err(exhausted(n));
                }
                *budget -= steps;
                for _ in 0..steps {
                    y = f(&y);
                    q = (q * abs_diff(&x, &y)) % n;
                }
                g = q.gcd(n);
                k += BATCH;
            }
            r *= 2;
        }
        if g == *n {
            loop {
                if *budget == 0 {
                    return Err(exhausted(n));
                }
                *budget -= 1;
                ys = f(&ys);
                g = abs_diff(&x, &ys).gcd(n);
                if !g.is_one() {
                    break;
                }
            }
        }
        if g != *n {
            return Ok(g);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::natural::mersenne;
    use alloc::string::ToString;

    fn pairs(f: &Factorization) -> Vec<(u64, u32)> {
        f.factors().iter().map(|(p, e)| (p.to_u64().unwrap(), *e)).collect()
    }

    #[test]
    fn known_values() {
        assert!(factorize(&1u32.into()).unwrap().factors().is_empty());
        assert_eq!(pairs(&factorize(&45u32.into()).unwrap()), [(3, 2), (5, 1)]);
        assert_eq!(
            pairs(&factorize(&3138290325u64.into()).unwrap()),
            [(3, 8), (5, 2), (19, 2), (53, 1)]
        );
        assert!(matches!(factorize(&0u32.into()), Err(Error::InvalidInput(_))));
    }

    #[test]
    fn semiprimes_near_word_size() {
        let p = 4_294_967_291u64; // largest prime below 2^32
        let q = 4_294_967_279u64;
        let f = factorize(&Natural::from(p * q)).unwrap();
        assert_eq!(pairs(&f), [(q, 1), (p, 1)]);
        let f = factorize(&Natural::from(p * p)).unwrap();
        assert_eq!(pairs(&f), [(p, 2)]);
    }

    #[test]
    fn beyond_64_bits() {
        // 2^67 - 1 = 193707721 * 761838257287
        let f = factorize(&mersenne(67)).unwrap();
        assert_eq!(f.to_string(), "193707721 * 761838257287");
        assert!(!f.is_probabilistic());
        let x = mersenne(89) * 3u32 * 3u32;
        let f = factorize(&x).unwrap();
        assert_eq!(f.value(), x);
        assert!(f.is_probabilistic());
        assert_eq!(f.exponent_of(&3u32.into()), 2);
    }

    #[test]
    fn effort_bound_is_enforced() {
        let x = Natural::from(4_294_967_291u64) * 4_294_967_279u64;
        let err = Factorizer::with_effort_bound(10).factorize(&x).unwrap_err();
        assert!(matches!(err, Error::ResourceLimit(_)));
        // primes never need rho
        assert!(Factorizer::with_effort_bound(0).factorize(&mersenne(61)).is_ok());
    }

    #[test]
    fn algebra() {
        let a = factorize(&12u32.into()).unwrap();
        let b = factorize(&45u32.into()).unwrap();
        assert_eq!(a.mul(&b).value(), Natural::from(540u32));
        assert_eq!(b.pow(2).to_string(), "3^4 * 5^2");
        assert_eq!(Factorization::one().to_string(), "1");
        let built = Factorization::from_prime_powers([(5u32.into(), 1), (3u32.into(), 1), (3u32.into(), 1)]).unwrap();
        assert_eq!(built, b);
        assert!(Factorization::from_prime_powers([(9u32.into(), 1)]).is_err());
    }
}
