//! Exact non-negative rationals and exact comparisons against radicals.

use alloc::format;
use core::cmp::Ordering;
use core::fmt;
use core::ops::{Div, Mul};
use core::str::FromStr;

use num_integer::Integer;
use num_traits::{One, Pow, Zero};

use crate::error::{Error, Result};
use crate::natural::{parse_natural, Natural};

/// A non-negative rational number kept in lowest terms.
///
/// The denominator is always positive and coprime to the numerator, so
/// derived equality and hashing are structural.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct ExactRatio {
    numer: Natural,
    denom: Natural,
}

impl ExactRatio {
    pub fn new(numer: Natural, denom: Natural) -> Result<Self> {
        if denom.is_zero() {
            return Err(Error::InvalidInput("zero denominator".into()));
        }
        Ok(Self::reduced(numer, denom))
    }

    fn reduced(numer: Natural, denom: Natural) -> Self {
        debug_assert!(!denom.is_zero());
        let g = numer.gcd(&denom);
        if g.is_one() {
            Self { numer, denom }
        } else {
            Self {
                numer: numer / &g,
                denom: denom / g,
            }
        }
    }

    pub fn from_integer(n: impl Into<Natural>) -> Self {
        Self {
            numer: n.into(),
            denom: Natural::one(),
        }
    }

    /// `numer / denom` for small literals; panics on a zero denominator.
    pub fn from_u64s(numer: u64, denom: u64) -> Self {
        assert!(denom != 0, "zero denominator");
        Self::reduced(numer.into(), denom.into())
    }

    pub fn zero() -> Self {
        Self::from_integer(0u32)
    }

    pub fn numer(&self) -> &Natural {
        &self.numer
    }

    pub fn denom(&self) -> &Natural {
        &self.denom
    }

    pub fn is_zero(&self) -> bool {
        self.numer.is_zero()
    }

    pub fn is_integer(&self) -> bool {
        self.denom.is_one()
    }

    /// `|self - other|`.
    pub fn abs_diff(&self, other: &Self) -> Self {
        let a = &self.numer * &other.denom;
        let b = &other.numer * &self.denom;
        let diff = if a >= b { a - b } else { b - a };
        Self::reduced(diff, &self.denom * &other.denom)
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn recip(&self) -> Option<Self> {
        if self.numer.is_zero() {
            None
        } else {
            Some(Self {
                numer: self.denom.clone(),
                denom: self.numer.clone(),
            })
        }
    }

    pub fn pow(&self, exp: u32) -> Self {
        Self {
            numer: Pow::pow(&self.numer, exp),
            denom: Pow::pow(&self.denom, exp),
        }
    }
}

impl Ord for ExactRatio {
    fn cmp(&self, other: &Self) -> Ordering {
        if self.denom == other.denom {
            return self.numer.cmp(&other.numer);
        }
        (&self.numer * &other.denom).cmp(&(&other.numer * &self.denom))
    }
}

impl PartialOrd for ExactRatio {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Mul for &ExactRatio {
    type Output = ExactRatio;

    fn mul(self, rhs: &ExactRatio) -> ExactRatio {
        ExactRatio::reduced(&self.numer * &rhs.numer, &self.denom * &rhs.denom)
    }
}

impl Div for &ExactRatio {
    type Output = ExactRatio;

    /// Panics when `rhs` is zero.
    fn div(self, rhs: &ExactRatio) -> ExactRatio {
        assert!(!rhs.numer.is_zero(), "division by zero ratio");
        ExactRatio::reduced(&self.numer * &rhs.denom, &self.denom * &rhs.numer)
    }
}

impl From<Natural> for ExactRatio {
    fn from(n: Natural) -> Self {
        Self::from_integer(n)
    }
}

/// Integers print bare (`"2"`), everything else as `"a/b"`.
impl fmt::Display for ExactRatio {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.denom.is_one() {
            write!(f, "{}", self.numer)
        } else {
            write!(f, "{}/{}", self.numer, self.denom)
        }
    }
}

impl FromStr for ExactRatio {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.split_once('/') {
            None => Ok(Self::from_integer(parse_natural(s)?)),
            Some((a, b)) => {
                let denom = parse_natural(b)?;
                if denom.is_zero() {
                    return Err(Error::Parse(format!("zero denominator in {s:?}")));
                }
                Ok(Self::reduced(parse_natural(a)?, denom))
            }
        }
    }
}

/// Orders `r` against `radicand^(1/degree)` without leaving the integers:
/// `(a/b)^m` versus `c/d` is decided by `a^m * d` versus `c * b^m`.
///
/// # Panics
/// If `degree` is zero.
pub fn cmp_ratio_vs_root(r: &ExactRatio, radicand: &ExactRatio, degree: u32) -> Ordering {
    assert!(degree >= 1, "root degree must be positive");
    let lhs = Pow::pow(&r.numer, degree) * &radicand.denom;
    let rhs = &radicand.numer * Pow::pow(&r.denom, degree);
    lhs.cmp(&rhs)
}

/// Orders `a^(1/m)` against `b^(1/n)` by comparing `a^n` with `b^m`.
///
/// # Panics
/// If either degree is zero.
pub fn cmp_roots(a: &ExactRatio, m: u32, b: &ExactRatio, n: u32) -> Ordering {
    assert!(m >= 1 && n >= 1, "root degree must be positive");
    let lhs = a.pow(n);
    let rhs = b.pow(m);
    lhs.cmp(&rhs)
}
