//! JSON rendering of reports. Every number is emitted as a decimal string
//! so arbitrary-precision values survive any JSON reader.

use perfectnum_core::eulerian::report::{ChainPosition, Reported};
use perfectnum_core::eulerian::{EulerReport, RecordTerm};
use perfectnum_core::euclidean::EuclidReport;
use perfectnum_core::{Check, ExactRatio, Factorization, Verdict};
use serde_json::{json, Map, Value};
use std::cmp::Ordering;

pub fn num(x: impl ToString) -> Value {
    Value::String(x.to_string())
}

pub fn ratios(rs: &[ExactRatio]) -> Value {
    Value::Array(rs.iter().map(num).collect())
}

pub fn check(c: Check) -> Value {
    json!({ "verdict": c.verdict.as_str(), "asserted": c.asserted })
}

/// `check(c)` with extra fields merged in.
fn check_with(c: Check, extra: Value) -> Value {
    let mut v = check(c);
    if let (Value::Object(obj), Value::Object(more)) = (&mut v, extra) {
        obj.extend(more);
    }
    v
}

fn reported<T>(r: &Reported<T>, value: Value) -> Value {
    check_with(r.check, json!({ "value": value, "satisfied": r.satisfied }))
}

fn ordering(o: Ordering) -> &'static str {
    match o {
        Ordering::Less => "<",
        Ordering::Equal => "=",
        Ordering::Greater => ">",
    }
}

fn positions(ps: &[ChainPosition]) -> Value {
    Value::Array(
        ps.iter()
            .map(|p| json!({ "constant": p.constant, "ordering": ordering(p.ordering) }))
            .collect(),
    )
}

pub fn factorization(f: &Factorization) -> Value {
    Value::Array(
        f.factors()
            .iter()
            .map(|(p, e)| json!({ "prime": num(p), "exponent": num(e) }))
            .collect(),
    )
}

pub fn euclid_report(r: &EuclidReport) -> Value {
    let f = &r.form;
    let e7 = match &r.e7 {
        Some(c) => check_with(
            c.check,
            json!({
                "abundancy_mersenne": num(&c.abundancy_mersenne),
                "two_over_abundancy": num(&c.two_over_abundancy),
                "abundancy_half": num(&c.abundancy_half),
                "abundancy_nbar": num(&c.abundancy_nbar),
                "attains_upper_bound": c.attains_upper_bound,
            }),
        ),
        None => check(r.e7_check),
    };
    let lemma3 = match &r.lemma3 {
        Some((a, b)) => check_with(r.lemma3_check, json!({ "values": [num(a), num(b)] })),
        None => check(r.lemma3_check),
    };
    json!({
        "p": num(f.p),
        "mersenne": num(&f.mersenne),
        "half": num(&f.half),
        "value": num(&f.value),
        "perfect": check(r.perfect),
        "e2_mod4": check(r.e2_mod4),
        "e3_exponent_one": check(r.e3_exponent_one),
        "e4_values": ratios(&r.e4_values),
        "e4": check(r.e4),
        "e7_bounds": e7,
        "e8_omega": check(r.e8_omega),
        "e9_gcd": check(r.e9_gcd),
        "lemma1": check_with(r.lemma1_check, json!({ "values": [num(&r.lemma1.0), num(&r.lemma1.1)] })),
        "lemma3": lemma3,
        "remark2": check(r.remark2),
    })
}

pub fn record_term(t: &RecordTerm) -> Value {
    let d = &t.decomposition;
    json!({
        "index": num(t.index),
        "value": num(&d.value),
        "q": num(&d.q),
        "k": num(d.k),
        "n": num(&d.n),
        "closeness": num(&t.closeness),
    })
}

pub fn euler_report(r: &EulerReport) -> Value {
    let d = &r.decomposition;
    let b = &r.biconditional;
    let o7 = &r.o7;
    let mut obj = Map::new();
    if let Some(i) = r.index {
        obj.insert("index".into(), num(i));
    }
    let body = json!({
        "value": num(&d.value),
        "q": num(&d.q),
        "k": num(d.k),
        "n": num(&d.n),
        "closeness": num(&r.closeness),
        "probabilistic": r.probabilistic,
        "o2_mod4": check(r.o2_mod4),
        "o9_gcd": check(r.o9_gcd),
        "sorli_k": check_with(r.sorli, json!({ "k": num(r.sorli_k) })),
        "dris": check(r.dris),
        "biconditional_triple": {
            "euler_part_below_n": b.euler_part_below_n,
            "sigma_below": b.sigma_below,
            "ratio_below": b.ratio_below,
            "agreement": b.agreement(),
        },
        "acquaah_konyagin": check(r.acquaah_konyagin),
        "broughan_ratio": reported(&r.broughan_ratio, num(&r.broughan_ratio.value)),
        "o4_quantities": r.o4_quantities.iter().map(|q| reported(q, num(&q.value))).collect::<Vec<_>>(),
        "lemma2_quantities": reported(&r.lemma2, json!([num(&r.lemma2.value.0), num(&r.lemma2.value.1)])),
        "o7_chain": {
            "abundancy_euler_part": num(&o7.abundancy_euler_part),
            "euler_part_bound": check(o7.euler_part_bound),
            "two_over_abundancy": num(&o7.two_over_abundancy),
            "two_over_abundancy_bound": check(o7.two_over_abundancy_bound),
            "abundancy_n": num(&o7.abundancy_n),
            "abundancy_n_squared": num(&o7.abundancy_n_squared),
            "n_positions": positions(&o7.n_positions),
            "n_squared_positions": positions(&o7.n_squared_positions),
            "remark5_chain": reported(&o7.remark5_chain, Value::Bool(o7.remark5_chain.value)),
        },
    });
    if let Value::Object(rest) = body {
        obj.extend(rest);
    }
    Value::Object(obj)
}

/// Tally of verdicts across a run, keyed by their wire names.
#[derive(Debug, Default, Clone, Copy, PartialEq, Eq)]
pub struct VerdictCounts {
    pub pass: usize,
    pub fail: usize,
    pub not_applicable: usize,
    pub reported: usize,
    /// Failures of asserted checks.
    pub violations: usize,
}

impl VerdictCounts {
    pub fn add(&mut self, c: Check) {
        match c.verdict {
            Verdict::Pass => self.pass += 1,
            Verdict::Fail => self.fail += 1,
            Verdict::NotApplicable => self.not_applicable += 1,
            Verdict::Reported => self.reported += 1,
        }
        if c.is_violation() {
            self.violations += 1;
        }
    }

    pub fn extend(&mut self, cs: impl IntoIterator<Item = Check>) {
        for c in cs {
            self.add(c);
        }
    }

    pub fn to_json(self) -> Value {
        json!({
            "PASS": num(self.pass),
            "FAIL": num(self.fail),
            "NOT_APPLICABLE": num(self.not_applicable),
            "REPORTED": num(self.reported),
            "asserted_failures": num(self.violations),
        })
    }
}

/// The top-level document every `--format json` run emits.
pub fn document(command: &str, inputs: Value, results: Vec<Value>, verdicts: VerdictCounts) -> Value {
    json!({
        "command": command,
        "inputs": inputs,
        "results": results,
        "verdicts": verdicts.to_json(),
    })
}

pub fn to_text(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}
