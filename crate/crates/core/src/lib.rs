//! Exact arithmetic for the two classical shapes of perfect numbers.
//!
//! Even perfect numbers are generated in the form `(2^p - 1) * 2^(p - 1)`
//! from Lucas–Lehmer-certified Mersenne primes and checked against a set of
//! exact identities ([`euclidean`]). Odd numbers of the shape `q^k * n^2`
//! (`q` prime, `q = k = 1 mod 4`, `gcd(q, n) = 1`) are decomposed,
//! enumerated for records of closeness to perfection, and evaluated against
//! the corresponding bounds and conjectures ([`eulerian`]).
//!
//! Everything is integer or rational; no floating point is used anywhere.
#![no_std]
extern crate alloc;

pub mod divisor;
pub mod error;
pub mod euclidean;
pub mod eulerian;
pub mod factor;
pub mod natural;
pub mod primality;
pub mod ratio;
pub mod sieve;
pub mod verdict;

pub use divisor::{abundancy, closeness_to_perfect, sigma, DivisorProfile};
pub use error::{Error, Result};
pub use factor::{factorize, Factorization, Factorizer};
pub use natural::Natural;
pub use primality::{is_prime, primality, Primality};
pub use ratio::{cmp_ratio_vs_root, cmp_roots, ExactRatio};
pub use sieve::{spf_sieve, SmallestPrimeFactorTable};
pub use verdict::{Check, Verdict};
