//! Arbitrary-precision naturals.
//!
//! All integer quantities are carried as [`Natural`], a `num-bigint`
//! unsigned integer. The helpers here cover the few operations the rest of
//! the crate needs beyond what `BigUint` offers directly.

use alloc::format;
use core::str::FromStr;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub type Natural = BigUint;

/// Parses a plain decimal string (ASCII digits only, no sign, no
/// separators).
pub fn parse_natural(s: &str) -> Result<Natural> {
    let t = s.trim();
    if t.is_empty() || !t.bytes().all(|b| b.is_ascii_digit()) {
        return Err(Error::Parse(format!("not a natural number: {s:?}")));
    }
    BigUint::from_str(t).map_err(|e| Error::Parse(format!("{s:?}: {e}")))
}

/// `2^e`.
pub fn pow2(e: u64) -> Natural {
    Natural::one() << e
}

/// `2^e - 1`.
pub fn mersenne(e: u64) -> Natural {
    pow2(e) - 1u32
}

/// Returns `Some(v)` when `x` fits a `u64`.
pub fn as_u64(x: &Natural) -> Option<u64> {
    x.to_u64()
}

/// Integer square root if `x` is a perfect square.
pub fn exact_sqrt(x: &Natural) -> Option<Natural> {
    if x.is_zero() {
        return Some(Natural::zero());
    }
    let r = x.sqrt();
    if &r * &r == *x {
        Some(r)
    } else {
        None
    }
}

/// Exponent of the largest power of `p` dividing `x` (`x > 0`, `p > 1`).
pub fn valuation(x: &Natural, p: &Natural) -> u32 {
    let mut v = 0;
    let mut y = x.clone();
    if y.is_zero() || *p <= Natural::one() {
        return 0;
    }
    loop {
        let (quo, rem) = num_integer::Integer::div_rem(&y, p);
        if !rem.is_zero() {
            return v;
        }
        y = quo;
        v += 1;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    #[test]
    fn decimal_round_trip_beyond_u128() {
        let s = "531137992816767098689588206552468627329593117727031923199444138200403559860852242739162502265229285668889329486246501015346579337652707239409519978766587351943831270835393219031728127";
        assert_eq!(parse_natural(s).unwrap().to_string(), s);
    }

    #[test]
    fn rejects_signs_and_blanks() {
        assert!(parse_natural("-3").is_err());
        assert!(parse_natural("").is_err());
        assert!(parse_natural("1_000").is_err());
        assert!(parse_natural("+7").is_err());
    }

    #[test]
    fn sqrt_and_valuation() {
        assert_eq!(exact_sqrt(&Natural::from(2025u32)), Some(Natural::from(45u32)));
        assert_eq!(exact_sqrt(&Natural::from(2026u32)), None);
        assert_eq!(valuation(&Natural::from(3138290325u64), &Natural::from(3u32)), 8);
        assert_eq!(mersenne(7), Natural::from(127u32));
    }
}
