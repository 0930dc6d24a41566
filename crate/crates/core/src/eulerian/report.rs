//! Odd-side heuristics evaluated on one decomposition `N = q^k * n^2`.
//!
//! Only statements that hold for every such decomposition are asserted
//! (the residue of `q`, coprimality, and the bound on `I(q^k)`). Sorli's
//! `k = 1`, Dris's `q^k < n`, and the Acquaah–Konyagin estimate are
//! evaluated but not asserted. Bounds that are theorems only about genuine
//! odd perfect numbers are reported with their exact values and a flag
//! saying whether this candidate happens to meet them.

use alloc::vec::Vec;
use core::cmp::Ordering;

use num_integer::Integer;
use num_traits::{One, Pow, ToPrimitive};

use crate::divisor::{sigma, sigma_prime_power};
use crate::error::Result;
use crate::factor::Factorizer;
use crate::natural::Natural;
use crate::ratio::{cmp_ratio_vs_root, ExactRatio};
use crate::verdict::Check;

use super::records::RecordTerm;
use super::EulerianDecomposition;

/// A reported quantity and whether it meets the bound it is compared with.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Reported<T> {
    pub value: T,
    pub satisfied: bool,
    pub check: Check,
}

impl<T> Reported<T> {
    fn new(value: T, satisfied: bool) -> Self {
        Self {
            value,
            satisfied,
            check: Check::reported(),
        }
    }
}

/// `q^k < n`, `sigma(q^k) < sigma(n)`, `sigma(q^k)/n < sigma(n)/q^k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BiconditionalTriple {
    pub euler_part_below_n: bool,
    pub sigma_below: bool,
    pub ratio_below: bool,
}

impl BiconditionalTriple {
    /// True iff all three sides agree.
    pub fn agreement(&self) -> bool {
        self.euler_part_below_n == self.sigma_below && self.sigma_below == self.ratio_below
    }
}

/// Where a value falls relative to one constant of an inequality chain.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainPosition {
    pub constant: &'static str,
    pub ordering: Ordering,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct O7Chain {
    pub abundancy_euler_part: ExactRatio,
    /// `1 < I(q^k) < 5/4`.
    pub euler_part_bound: Check,
    /// `2 / I(q^k)`; always above `8/5`, and equal to `I(n^2)` only for a
    /// perfect number.
    pub two_over_abundancy: ExactRatio,
    pub two_over_abundancy_bound: Check,
    pub abundancy_n: ExactRatio,
    pub abundancy_n_squared: ExactRatio,
    /// `I(n)` against `5/4`, `cbrt 2`, `sqrt(8/5)`, `2`.
    pub n_positions: Vec<ChainPosition>,
    /// `I(n^2)` against `5/4`, `sqrt 2`, `8/5`, `2`.
    pub n_squared_positions: Vec<ChainPosition>,
    /// Whether `I(q^k) < 5/4 < cbrt 2 < sqrt(8/5) < I(n)` holds here.
    pub remark5_chain: Reported<bool>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EulerReport {
    /// Position in the record sequence, when the decomposition came from it.
    pub index: Option<usize>,
    pub decomposition: EulerianDecomposition,
    pub closeness: ExactRatio,
    pub o2_mod4: Check,
    pub o9_gcd: Check,
    pub sorli_k: u32,
    pub sorli: Check,
    pub dris: Check,
    pub biconditional: BiconditionalTriple,
    /// `q < n sqrt 3`, decided as `q^2 < 3 n^2`.
    pub acquaah_konyagin: Check,
    /// `n^2 / q^k` against `315/2`.
    pub broughan_ratio: Reported<ExactRatio>,
    /// `q_j^b_j * sigma(q_j^b_j) / N` for each prime power of `N`, in prime
    /// order, each against `2/3`.
    pub o4_quantities: Vec<Reported<ExactRatio>>,
    /// `(sigma(q^k) / n^2, sigma(n^2) / q^k)` against `2/3` and `3`.
    pub lemma2: Reported<(ExactRatio, ExactRatio)>,
    pub o7: O7Chain,
    /// True when some factor was certified only probabilistically.
    pub probabilistic: bool,
}

impl EulerReport {
    /// `(label, check)` for every verdict-bearing item.
    pub fn checks(&self) -> Vec<(&'static str, Check)> {
        let mut out = Vec::from([
            ("o2_mod4", self.o2_mod4),
            ("o9_gcd", self.o9_gcd),
            ("sorli", self.sorli),
            ("dris", self.dris),
            ("acquaah_konyagin", self.acquaah_konyagin),
            ("broughan_ratio", self.broughan_ratio.check),
            ("lemma2", self.lemma2.check),
            ("o7_euler_part", self.o7.euler_part_bound),
            ("o7_two_over_abundancy", self.o7.two_over_abundancy_bound),
            ("o7_remark5_chain", self.o7.remark5_chain.check),
        ]);
        out.extend(self.o4_quantities.iter().map(|r| ("o4", r.check)));
        out
    }

    pub fn has_violation(&self) -> bool {
        self.checks().iter().any(|(_, c)| c.is_violation())
    }
}

fn ratio(a: Natural, b: &Natural) -> ExactRatio {
    ExactRatio::new(a, b.clone()).expect("positive denominator")
}

fn positions(value: &ExactRatio, constants: &[(&'static str, ExactRatio, u32)]) -> Vec<ChainPosition> {
    constants
        .iter()
        .map(|(label, radicand, degree)| ChainPosition {
            constant: label,
            ordering: cmp_ratio_vs_root(value, radicand, *degree),
        })
        .collect()
}

pub fn euler_report(term: &RecordTerm) -> Result<EulerReport> {
    euler_report_for(&Factorizer::default(), &term.decomposition, Some(term.index))
}

pub fn euler_report_for(
    factorizer: &Factorizer,
    d: &EulerianDecomposition,
    index: Option<usize>,
) -> Result<EulerReport> {
    let n_factorization = factorizer.factorize(&d.n)?;
    let full = d.factorization_from_n(&n_factorization);
    let qk = d.euler_part();
    let n2 = d.non_euler_part();

    let sigma_qk = sigma_prime_power(&d.q, d.k);
    let sigma_n = sigma(&n_factorization);
    let sigma_n2 = sigma(&n_factorization.pow(2));
    let sigma_value = &sigma_qk * &sigma_n2;

    let two = ExactRatio::from_integer(2u32);
    let closeness = ratio(sigma_value, &d.value).abs_diff(&two);

    let o2_mod4 = Check::asserted((&d.q % 4u32).to_u32() == Some(1) && d.k % 4 == 1);
    let o9_gcd = Check::asserted(d.q.gcd(&d.n).is_one() && qk.gcd(&n2).is_one());
    let sorli = Check::evaluated(d.k == 1);
    let dris = Check::evaluated(qk < d.n);

    let biconditional = BiconditionalTriple {
        euler_part_below_n: qk < d.n,
        sigma_below: sigma_qk < sigma_n,
        ratio_below: ratio(sigma_qk.clone(), &d.n) < ratio(sigma_n.clone(), &qk),
    };

    let acquaah_konyagin = Check::evaluated(&d.q * &d.q < &n2 * 3u32);

    let broughan = ratio(n2.clone(), &qk);
    let broughan_ok = broughan > ExactRatio::from_u64s(315, 2);
    let broughan_ratio = Reported::new(broughan, broughan_ok);

    let two_thirds = ExactRatio::from_u64s(2, 3);
    let o4_quantities = full
        .factors()
        .iter()
        .map(|(p, e)| {
            let pe: Natural = Pow::pow(p, *e);
            let r = ratio(&pe * sigma_prime_power(p, *e), &d.value);
            let ok = r <= two_thirds;
            Reported::new(r, ok)
        })
        .collect();

    let l2_first = ratio(sigma_qk.clone(), &n2);
    let l2_second = ratio(sigma_n2.clone(), &qk);
    let l2_ok = l2_first <= two_thirds && l2_second >= ExactRatio::from_integer(3u32);
    let lemma2 = Reported::new((l2_first, l2_second), l2_ok);

    let one = ExactRatio::from_integer(1u32);
    let five_fourths = ExactRatio::from_u64s(5, 4);
    let eight_fifths = ExactRatio::from_u64s(8, 5);
    let abundancy_euler_part = ratio(sigma_qk, &qk);
    let two_over_abundancy = &two / &abundancy_euler_part;
    let abundancy_n = ratio(sigma_n, &d.n);
    let abundancy_n_squared = ratio(sigma_n2, &n2);

    let n_positions = positions(
        &abundancy_n,
        &[
            ("5/4", five_fourths.clone(), 1),
            ("cbrt(2)", two.clone(), 3),
            ("sqrt(8/5)", eight_fifths.clone(), 2),
            ("2", two.clone(), 1),
        ],
    );
    let n_squared_positions = positions(
        &abundancy_n_squared,
        &[
            ("5/4", five_fourths.clone(), 1),
            ("sqrt(2)", two.clone(), 2),
            ("8/5", eight_fifths.clone(), 1),
            ("2", two.clone(), 1),
        ],
    );
    let remark5_ok = abundancy_euler_part < five_fourths
        && cmp_ratio_vs_root(&abundancy_n, &eight_fifths, 2) == Ordering::Greater;

    let o7 = O7Chain {
        euler_part_bound: Check::asserted(one < abundancy_euler_part && abundancy_euler_part < five_fourths),
        two_over_abundancy_bound: Check::asserted(two_over_abundancy > eight_fifths && two_over_abundancy < two),
        abundancy_euler_part,
        two_over_abundancy,
        abundancy_n,
        abundancy_n_squared,
        n_positions,
        n_squared_positions,
        remark5_chain: Reported::new(remark5_ok, remark5_ok),
    };

    Ok(EulerReport {
        index,
        decomposition: d.clone(),
        closeness,
        o2_mod4,
        o9_gcd,
        sorli_k: d.k,
        sorli,
        dris,
        biconditional,
        acquaah_konyagin,
        broughan_ratio,
        o4_quantities,
        lemma2,
        o7,
        probabilistic: full.is_probabilistic(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::eulerian::eulerian_decompose;
    use crate::verdict::Verdict;
    use alloc::string::ToString;

    fn report(x: u64) -> EulerReport {
        let d = eulerian_decompose(&x.into()).unwrap().unwrap();
        euler_report_for(&Factorizer::default(), &d, None).unwrap()
    }

    #[test]
    fn first_term() {
        let r = report(45);
        assert_eq!(r.sorli.verdict, Verdict::Pass);
        assert_eq!(r.dris.verdict, Verdict::Fail);
        assert!(!r.dris.asserted);
        assert_eq!(r.acquaah_konyagin.verdict, Verdict::Pass);
        assert!(!r.has_violation());
        assert_eq!(r.closeness.to_string(), "4/15");
        assert_eq!(r.broughan_ratio.value.to_string(), "9/5");
        assert!(!r.broughan_ratio.satisfied);
    }

    #[test]
    fn second_term_biconditional() {
        let r = report(405);
        assert_eq!(r.dris.verdict, Verdict::Pass);
        assert!(r.biconditional.euler_part_below_n && r.biconditional.sigma_below && r.biconditional.ratio_below);
        assert!(r.biconditional.agreement());
    }

    #[test]
    fn reported_quantities() {
        let r = report(45);
        // 3^2 * 13 / 45 and 5 * 6 / 45
        let o4: Vec<_> = r.o4_quantities.iter().map(|q| q.value.to_string()).collect();
        assert_eq!(o4, ["13/5", "2/3"]);
        assert_eq!(r.o4_quantities.iter().map(|q| q.satisfied).collect::<Vec<_>>(), [false, true]);
        assert_eq!(r.lemma2.value.0.to_string(), "2/3");
        assert_eq!(r.lemma2.value.1.to_string(), "13/5");
        assert!(!r.lemma2.satisfied);
        assert_eq!(r.o7.abundancy_euler_part.to_string(), "6/5");
        assert_eq!(r.o7.two_over_abundancy.to_string(), "5/3");
        assert_eq!(r.o7.euler_part_bound.verdict, Verdict::Pass);
        // I(3) = 4/3 sits above 5/4, cbrt 2 and sqrt(8/5), and below 2
        let ords: Vec<_> = r.o7.n_positions.iter().map(|p| p.ordering).collect();
        assert_eq!(ords, [Ordering::Greater, Ordering::Greater, Ordering::Greater, Ordering::Less]);
    }
}
