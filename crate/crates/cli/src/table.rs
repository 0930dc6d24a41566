//! The side-by-side table of even and odd heuristics, each row annotated
//! with verdicts computed over the generated even perfect numbers (left)
//! and the record terms found (right).

use perfectnum_core::euclidean::{build_euclidean, euclid_report, mersenne_exponents, EuclidReport};
use perfectnum_core::eulerian::{enumerate_a228059, euler_report_for, EulerReport};
use perfectnum_core::{Check, Factorizer, Result};
use serde_json::{json, Value};

use crate::json::VerdictCounts;

const NO_INSTANCES: &str = "no instances";
const CONJECTURE: &str = "CONJECTURE — evaluated, not asserted";

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cell {
    pub id: &'static str,
    pub statement: &'static str,
    pub annotation: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Row {
    pub left: Cell,
    pub right: Cell,
}

#[derive(Debug, Clone)]
pub struct HeuristicsTable {
    pub rows: Vec<Row>,
    pub exponents: Vec<u64>,
    pub terms: usize,
    pub verdicts: VerdictCounts,
}

struct EvenSide<'a> {
    reports: &'a [EuclidReport],
}

impl EvenSide<'_> {
    fn exponent_set(&self) -> String {
        let ps: Vec<u64> = self.reports.iter().map(|r| r.form.p).collect();
        match ps.as_slice() {
            [] => "{}".into(),
            [a] => format!("{{{a}}}"),
            [a, b] => format!("{{{a}, {b}}}"),
            [first, .., last] => format!("{{{first},…,{last}}}"),
        }
    }

    fn all(&self, pick: impl Fn(&EuclidReport) -> Check) -> String {
        if self.reports.is_empty() {
            return NO_INSTANCES.into();
        }
        let failed: Vec<String> = self
            .reports
            .iter()
            .filter(|r| !pick(r).passed())
            .map(|r| r.form.p.to_string())
            .collect();
        if failed.is_empty() {
            format!("PASS for all p in {}", self.exponent_set())
        } else {
            format!("FAIL for p in {{{}}}", failed.join(", "))
        }
    }

    fn note(&self, text: &str) -> String {
        if self.reports.is_empty() {
            NO_INSTANCES.into()
        } else {
            text.into()
        }
    }
}

struct OddSide<'a> {
    reports: &'a [EulerReport],
}

impl OddSide<'_> {
    fn count(&self, pred: impl Fn(&EulerReport) -> bool) -> usize {
        self.reports.iter().filter(|r| pred(r)).count()
    }

    fn asserted(&self, pick: impl Fn(&EulerReport) -> Check) -> String {
        if self.reports.is_empty() {
            return NO_INSTANCES.into();
        }
        let total = self.reports.len();
        let passed = self.count(|r| pick(r).passed());
        if passed == total {
            format!("PASS for {total}/{total} terms")
        } else {
            format!("FAIL for {}/{total} terms", total - passed)
        }
    }

    /// `"<what> for x/total terms (<tag>)"`.
    fn tally(&self, what: &str, pred: impl Fn(&EulerReport) -> bool, tag: &str) -> String {
        if self.reports.is_empty() {
            return NO_INSTANCES.into();
        }
        format!("{what} for {}/{} terms ({tag})", self.count(pred), self.reports.len())
    }

    fn note(&self, text: &str) -> String {
        if self.reports.is_empty() {
            NO_INSTANCES.into()
        } else {
            text.into()
        }
    }
}

fn cell(id: &'static str, statement: &'static str, annotation: String) -> Cell {
    Cell {
        id,
        statement,
        annotation,
    }
}

/// Computes every annotation. Even perfect numbers are taken for prime
/// exponents `3 <= p <= max_p`; `M = 6` is left out, as its half `2` is
/// squarefree and the divisor inequalities degenerate there.
pub fn render_heuristics_table(max_p: u64, limit: u64, factorizer: &Factorizer) -> Result<HeuristicsTable> {
    let exponents: Vec<u64> = mersenne_exponents(max_p).into_iter().filter(|&p| p >= 3).collect();
    let euclid: Vec<EuclidReport> = exponents
        .iter()
        .map(|&p| build_euclidean(p).map(|f| euclid_report(&f)))
        .collect::<Result<_>>()?;
    let terms = enumerate_a228059(limit)?;
    let euler: Vec<EulerReport> = terms
        .iter()
        .map(|t| euler_report_for(factorizer, &t.decomposition, Some(t.index)))
        .collect::<Result<_>>()?;

    let mut verdicts = VerdictCounts::default();
    for r in &euclid {
        verdicts.extend(r.checks().iter().map(|(_, c)| *c));
    }
    for r in &euler {
        verdicts.extend(r.checks().iter().map(|(_, c)| *c));
    }

    let even = EvenSide { reports: &euclid };
    let odd = OddSide { reports: &euler };

    let e7 = {
        let base = even.all(|r| r.e7_check);
        let attained: Vec<String> = euclid
            .iter()
            .filter(|r| r.e7.as_ref().is_some_and(|c| c.attains_upper_bound))
            .map(|r| r.form.p.to_string())
            .collect();
        if euclid.is_empty() {
            base
        } else {
            format!("{base}; 8/7 attained at p in {{{}}}", attained.join(", "))
        }
    };

    let rows = vec![
        Row {
            left: cell("E-1", "Mersenne primes <-> even perfect numbers", even.note("theorem; correspondence not checkable per instance")),
            right: cell("O-1", "Euler primes <-> odd perfect numbers", odd.note("CONJECTURE: not checkable per instance")),
        },
        Row {
            left: cell("E-2", "M_p = 3 (mod 4)", even.all(|r| r.e2_mod4)),
            right: cell("O-2", "q = 1 (mod 4)", odd.asserted(|r| r.o2_mod4)),
        },
        Row {
            left: cell("E-3", "nu_{M_p}(M) = 1", even.all(|r| r.e3_exponent_one)),
            right: cell("O-3", "k = nu_q(N) = 1 (Sorli)", odd.tally("k = 1", |r| r.sorli.passed(), CONJECTURE)),
        },
        Row {
            left: cell("E-4", "p_i^a_i sigma(p_i^a_i) / M = i", even.all(|r| r.e4)),
            right: cell(
                "O-4",
                "q_j^b_j sigma(q_j^b_j) / N <= 2/3 < j",
                odd.tally(
                    "bound met by every prime power",
                    |r| r.o4_quantities.iter().all(|q| q.satisfied),
                    "REPORTED: theorem for odd perfect N only",
                ),
            ),
        },
        Row {
            left: cell("E-5", "infinitely many even perfect numbers", even.note("not evaluated (existence conjecture)")),
            right: cell("O-5", "no odd perfect numbers", odd.note("not evaluated (existence conjecture)")),
        },
        Row {
            left: cell("E-6", "even perfect numbers have density zero", even.note("not evaluated (density theorem)")),
            right: cell("O-6", "odd perfect numbers have density zero", odd.note("not evaluated (density theorem)")),
        },
        Row {
            left: cell("E-7", "1 < I(M_p) <= 8/7; 7/4 <= I((M_p+1)/2) < 2; sqrt(7/4) < I(nbar) < 2", e7),
            right: cell(
                "O-7",
                "1 < I(q^k) < 5/4; 8/5 < 2/I(q^k) < 2; sqrt(8/5) < I(n)",
                if euler.is_empty() {
                    NO_INSTANCES.into()
                } else {
                    format!(
                        "{} on I(q^k) and 2/I(q^k); {}",
                        odd.asserted(|r| if r.o7.euler_part_bound.passed() { r.o7.two_over_abundancy_bound } else { r.o7.euler_part_bound }),
                        odd.tally("sqrt(8/5) < I(n)", |r| r.o7.remark5_chain.satisfied, "REPORTED")
                    )
                },
            ),
        },
        Row {
            left: cell("E-8", "omega(M) = 2", even.all(|r| r.e8_omega)),
            right: cell("O-8", "omega(N) > 2", odd.tally("omega(N) > 2", |r| r.o4_quantities.len() > 2, "REPORTED")),
        },
        Row {
            left: cell("E-9", "gcd(2^p - 1, 2^(p-1)) = 1", even.all(|r| r.e9_gcd)),
            right: cell("O-9", "gcd(q^k, n^2) = gcd(q, n) = 1", odd.asserted(|r| r.o9_gcd)),
        },
        Row {
            left: cell("", "sigma(nbar^2)/Q = 1 < 2 = sigma(Q)/nbar^2", even.all(|r| r.lemma1_check)),
            right: cell(
                "",
                "sigma(q^k)/n^2 <= 2/3 < 3 <= sigma(n^2)/q^k",
                odd.tally("met", |r| r.lemma2.satisfied, "REPORTED: theorem for odd perfect N only"),
            ),
        },
        Row {
            left: cell("", "sigma(Q)/nbar = 2^((p+1)/2) >= 4 > 1 > sigma(nbar)/Q", even.all(|r| r.lemma3_check)),
            right: cell(
                "",
                "q^k < n <=> sigma(q^k) < sigma(n) <=> sigma(q^k)/n < sigma(n)/q^k",
                odd.tally("all three sides agree", |r| r.biconditional.agreement(), "REPORTED"),
            ),
        },
        Row {
            left: cell("", "nbar^2 < Q^K", even.all(|r| r.remark2)),
            right: cell("", "q^k < n (Dris)", odd.tally("q^k < n", |r| r.dris.passed(), CONJECTURE)),
        },
        Row {
            left: cell("", "", String::new()),
            right: cell("", "q < n sqrt(3) (Acquaah-Konyagin)", odd.tally("holds", |r| r.acquaah_konyagin.passed(), "evaluated, not asserted")),
        },
        Row {
            left: cell("", "", String::new()),
            right: cell(
                "",
                "n^2 / q^k > 315/2 (Broughan et al.)",
                odd.tally("holds", |r| r.broughan_ratio.satisfied, "REPORTED: theorem for odd perfect N only"),
            ),
        },
    ];

    Ok(HeuristicsTable {
        rows,
        exponents,
        terms: euler.len(),
        verdicts,
    })
}

impl HeuristicsTable {
    pub fn to_text(&self) -> String {
        let lines = |c: &Cell| -> Vec<String> {
            let head = if c.id.is_empty() {
                c.statement.to_string()
            } else {
                format!("({}) {}", c.id, c.statement)
            };
            if c.annotation.is_empty() {
                vec![head]
            } else {
                vec![head, format!("  => {}", c.annotation)]
            }
        };
        let width = |pick: fn(&Row) -> &Cell| {
            self.rows
                .iter()
                .flat_map(|r| lines(pick(r)))
                .map(|l| l.chars().count())
                .max()
                .unwrap_or(0)
        };
        let (lw, rw) = (width(|r| &r.left), width(|r| &r.right));
        let rule = format!("+{}+{}+\n", "-".repeat(lw + 2), "-".repeat(rw + 2));
        let pad = |s: &str, w: usize| format!("{s}{}", " ".repeat(w - s.chars().count()));

        let mut out = String::new();
        out.push_str(&rule);
        out.push_str(&format!("| {} | {} |\n", pad("Even perfect M = (2^p - 1) 2^(p-1)", lw), pad("Odd N = q^k n^2 (record terms)", rw)));
        out.push_str(&rule);
        for row in &self.rows {
            let (l, r) = (lines(&row.left), lines(&row.right));
            for i in 0..l.len().max(r.len()) {
                let a = l.get(i).map_or("", String::as_str);
                let b = r.get(i).map_or("", String::as_str);
                out.push_str(&format!("| {} | {} |\n", pad(a, lw), pad(b, rw)));
            }
            out.push_str(&rule);
        }
        out
    }

    pub fn rows_json(&self) -> Vec<Value> {
        self.rows
            .iter()
            .map(|r| {
                json!({
                    "left": { "id": r.left.id, "statement": r.left.statement, "annotation": r.left.annotation },
                    "right": { "id": r.right.id, "statement": r.right.statement, "annotation": r.right.annotation },
                })
            })
            .collect()
    }
}
