//! Sum of divisors, abundancy index and closeness to perfection.

use num_bigint::{BigInt, Sign};
use num_traits::{One, Pow};

use crate::error::Result;
use crate::factor::{Factorization, Factorizer};
use crate::natural::Natural;
use crate::ratio::ExactRatio;

/// `sigma(p^e) = (p^(e+1) - 1) / (p - 1)`.
pub fn sigma_prime_power(p: &Natural, e: u32) -> Natural {
    (Pow::pow(p, e + 1) - 1u32) / (p - 1u32)
}

/// `sigma` evaluated multiplicatively over a factorization; `sigma(1) = 1`.
pub fn sigma(f: &Factorization) -> Natural {
    f.factors()
        .iter()
        .fold(Natural::one(), |acc, (p, e)| acc * sigma_prime_power(p, *e))
}

/// `I(x) = sigma(x) / x` given both `x` and its factorization.
pub fn abundancy_of(x: &Natural, f: &Factorization) -> ExactRatio {
    ExactRatio::new(sigma(f), x.clone()).expect("factored values are positive")
}

pub fn abundancy(x: &Natural) -> Result<ExactRatio> {
    abundancy_with(&Factorizer::default(), x)
}

pub fn abundancy_with(factorizer: &Factorizer, x: &Natural) -> Result<ExactRatio> {
    let f = factorizer.factorize(x)?;
    Ok(abundancy_of(x, &f))
}

/// `|I(x) - 2|`.
pub fn closeness_to_perfect(x: &Natural) -> Result<ExactRatio> {
    Ok(abundancy(x)?.abs_diff(&ExactRatio::from_integer(2u32)))
}

/// The divisor-sum facts about one number.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DivisorProfile {
    pub x: Natural,
    pub sigma: Natural,
    pub abundancy: ExactRatio,
    /// `2x - sigma(x)`; negative for abundant numbers.
    pub deficiency: BigInt,
}

impl DivisorProfile {
    pub fn from_factorization(x: Natural, f: &Factorization) -> Self {
        let s = sigma(f);
        let deficiency = BigInt::from_biguint(Sign::Plus, &x * 2u32) - BigInt::from(s.clone());
        let abundancy = ExactRatio::new(s.clone(), x.clone()).expect("positive x");
        Self {
            x,
            sigma: s,
            abundancy,
            deficiency,
        }
    }

    pub fn compute(factorizer: &Factorizer, x: &Natural) -> Result<Self> {
        let f = factorizer.factorize(x)?;
        Ok(Self::from_factorization(x.clone(), &f))
    }

    pub fn is_perfect(&self) -> bool {
        self.deficiency.sign() == Sign::NoSign
    }

    pub fn is_deficient(&self) -> bool {
        self.deficiency.sign() == Sign::Plus
    }

    pub fn is_abundant(&self) -> bool {
        self.deficiency.sign() == Sign::Minus
    }

    pub fn closeness(&self) -> ExactRatio {
        self.abundancy.abs_diff(&ExactRatio::from_integer(2u32))
    }
}
