//! Odd numbers of the shape `q^k * n^2`, with `q` prime, `q = k = 1 (mod 4)`
//! and `gcd(q, n) = 1`.
//!
//! [`records`] regenerates the sequence of such numbers (with `n > 1`) that
//! set successive records for closeness to perfection, and [`report`]
//! evaluates the odd-side bounds and conjectures on any decomposition.

pub mod records;
pub mod report;

use alloc::vec::Vec;

use num_integer::Integer;
use num_traits::{One, Pow, ToPrimitive};

use crate::error::Result;
use crate::factor::{Factorization, Factorizer};
use crate::natural::Natural;

pub use records::{
    enumerate_a228059, enumerate_a228059_with, verify_no_perfect, verify_no_perfect_with, CandidateFilter,
    EnumerationConfig, RecordTerm,
};
pub use report::{euler_report, euler_report_for, EulerReport};

/// `value = q^k * n^2` with the Euler prime `q` and exponent `k`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct EulerianDecomposition {
    pub q: Natural,
    pub k: u32,
    pub n: Natural,
    pub value: Natural,
}

impl EulerianDecomposition {
    /// The Euler part `q^k`.
    pub fn euler_part(&self) -> Natural {
        Pow::pow(&self.q, self.k)
    }

    /// The non-Euler part `n^2`.
    pub fn non_euler_part(&self) -> Natural {
        &self.n * &self.n
    }

    /// Recovers the decomposition from a known factorization of `value`.
    ///
    /// `value` must be odd with exactly one prime at an odd exponent; that
    /// prime and its exponent must both be `1 (mod 4)`.
    pub fn from_factorization(value: &Natural, f: &Factorization) -> Option<Self> {
        if value.is_even() {
            return None;
        }
        let mut odd = f.factors().iter().filter(|(_, e)| e % 2 == 1);
        let (q, k) = odd.next()?;
        if odd.next().is_some() || (q % 4u32).to_u32() != Some(1) || k % 4 != 1 {
            return None;
        }
        let n = f
            .factors()
            .iter()
            .filter(|(p, _)| p != q)
            .fold(Natural::one(), |acc, (p, e)| acc * Pow::pow(p, e / 2));
        Some(Self {
            q: q.clone(),
            k: *k,
            n,
            value: value.clone(),
        })
    }

    /// Factorization of `value`, given the factorization of `n`.
    pub(crate) fn factorization_from_n(&self, n_factorization: &Factorization) -> Factorization {
        let euler = Factorization::from_sorted_unchecked(Vec::from([(self.q.clone(), self.k)]), false);
        euler.mul(&n_factorization.pow(2))
    }
}

pub fn eulerian_decompose(x: &Natural) -> Result<Option<EulerianDecomposition>> {
    eulerian_decompose_with(&Factorizer::default(), x)
}

pub fn eulerian_decompose_with(factorizer: &Factorizer, x: &Natural) -> Result<Option<EulerianDecomposition>> {
    let f = factorizer.factorize(x)?;
    Ok(EulerianDecomposition::from_factorization(x, &f))
}
