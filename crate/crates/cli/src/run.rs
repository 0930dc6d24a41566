use std::ffi::OsString;
use std::io::Write;

use clap::Parser;
use perfectnum_core::euclidean::{build_euclidean, euclid_report, mersenne_exponents, EuclidReport};
use perfectnum_core::eulerian::report::Reported;
use perfectnum_core::eulerian::{enumerate_a228059, euler_report_for, eulerian_decompose_with, EulerReport, RecordTerm};
use perfectnum_core::natural::parse_natural;
use perfectnum_core::{Check, DivisorProfile, Factorizer, Natural, Verdict};
use serde_json::{json, Value};

use crate::args::{Cli, Command, OutputFormat, Suite, DEFAULT_LIMIT, DEFAULT_ORACLE_LIMIT};
use crate::bfile::format_bfile;
use crate::json::{self, num, VerdictCounts};
use crate::oracle;
use crate::table::render_heuristics_table;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_RESOURCE: i32 = 3;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] perfectnum_core::Error),
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Core(perfectnum_core::Error::ResourceLimit(_)) => EXIT_RESOURCE,
            _ => EXIT_USAGE,
        }
    }
}

/// What a command produced, in both renderings.
struct Outcome {
    command: &'static str,
    inputs: Value,
    text: String,
    results: Vec<Value>,
    verdicts: VerdictCounts,
}

impl Outcome {
    fn new(command: &'static str, inputs: Value) -> Self {
        Self {
            command,
            inputs,
            text: String::new(),
            results: Vec::new(),
            verdicts: VerdictCounts::default(),
        }
    }

    fn line(&mut self, s: impl AsRef<str>) {
        self.text.push_str(s.as_ref());
        self.text.push('\n');
    }
}

/// Parses `args` (program name first), runs the command, writes its output
/// and returns the exit status: 0 success, 1 an asserted check failed,
/// 2 usage or input error, 3 a resource limit was hit.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(sink, "{}", e.render());
            return code;
        }
    };
    match execute(&cli) {
        Ok(outcome) => {
            let rendered = match cli.global.format {
                OutputFormat::Table => outcome.text.clone(),
                OutputFormat::Json => json::to_text(&json::document(
                    outcome.command,
                    outcome.inputs.clone(),
                    outcome.results.clone(),
                    outcome.verdicts,
                )),
            };
            if out.write_all(rendered.as_bytes()).is_err() {
                return EXIT_USAGE;
            }
            if outcome.verdicts.violations > 0 {
                EXIT_FAIL
            } else {
                EXIT_OK
            }
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

fn natural_arg(s: &str) -> Result<Natural, CliError> {
    parse_natural(s).map_err(|e| CliError::Usage(e.to_string()))
}

fn limit_arg(s: &str) -> Result<u64, CliError> {
    let n = natural_arg(s)?;
    u64::try_from(&n).map_err(|_| CliError::Usage(format!("--limit {s} is beyond the supported 64-bit range")))
}

fn execute(cli: &Cli) -> Result<Outcome, CliError> {
    let factorizer = cli
        .global
        .effort_bound
        .map_or_else(Factorizer::default, Factorizer::with_effort_bound);
    match &cli.command {
        Command::Factor { n } => cmd_factor(&factorizer, &natural_arg(n)?),
        Command::Sigma { n } => cmd_sigma(&factorizer, &natural_arg(n)?),
        Command::Abundancy { n } => cmd_abundancy(&factorizer, &natural_arg(n)?),
        Command::Mersenne { max_p } => Ok(cmd_mersenne(*max_p)),
        Command::EuclidReport { p, max_p } => {
            let exponents = match (p, max_p) {
                (Some(p), _) => vec![*p],
                (None, Some(m)) => mersenne_exponents(*m),
                (None, None) => return Err(CliError::Usage("euclid-report needs --p or --max-p".into())),
            };
            let inputs = match p {
                Some(p) => json!({ "p": num(p) }),
                None => json!({ "max_p": num(max_p.unwrap_or_default()) }),
            };
            cmd_euclid(exponents, "euclid-report", inputs)
        }
        Command::A228059 { limit, bfile, reports } => {
            let limit = limit_arg(limit)?;
            cmd_a228059(&factorizer, limit, bfile.as_deref(), *reports)
        }
        Command::EulerReport { n } => cmd_euler_report(&factorizer, &natural_arg(n)?),
        Command::Table { max_p, limit } => {
            let limit = limit_arg(limit)?;
            let table = render_heuristics_table(*max_p, limit, &factorizer)?;
            let mut o = Outcome::new("table", json!({ "max_p": num(max_p), "limit": num(limit) }));
            o.text = table.to_text();
            o.results = table.rows_json();
            o.verdicts = table.verdicts;
            Ok(o)
        }
        Command::Verify { suite, max_p, limit } => match suite {
            Suite::Euclid => cmd_euclid(
                mersenne_exponents(*max_p),
                "verify",
                json!({ "suite": suite.as_str(), "max_p": num(max_p) }),
            ),
            Suite::Euler => {
                let limit = limit.as_deref().map_or(Ok(DEFAULT_LIMIT), limit_arg)?;
                cmd_verify_euler(&factorizer, limit)
            }
            Suite::Oracle => {
                let limit = limit.as_deref().map_or(Ok(DEFAULT_ORACLE_LIMIT), limit_arg)?;
                cmd_verify_oracle(&factorizer, limit)
            }
        },
    }
}

fn cmd_factor(factorizer: &Factorizer, n: &Natural) -> Result<Outcome, CliError> {
    let f = factorizer.factorize(n)?;
    let mut o = Outcome::new("factor", json!({ "n": num(n) }));
    let note = if f.is_probabilistic() { "  (probable primes)" } else { "" };
    o.line(format!("{n} = {f}{note}"));
    o.results.push(json!({
        "n": num(n),
        "factors": json::factorization(&f),
        "omega": num(f.omega()),
        "probabilistic": f.is_probabilistic(),
    }));
    Ok(o)
}

fn cmd_sigma(factorizer: &Factorizer, n: &Natural) -> Result<Outcome, CliError> {
    let p = DivisorProfile::compute(factorizer, n)?;
    let mut o = Outcome::new("sigma", json!({ "n": num(n) }));
    o.line(format!("σ({n}) = {}", p.sigma));
    o.results.push(json!({ "n": num(n), "sigma": num(&p.sigma) }));
    Ok(o)
}

fn cmd_abundancy(factorizer: &Factorizer, n: &Natural) -> Result<Outcome, CliError> {
    let p = DivisorProfile::compute(factorizer, n)?;
    let mut o = Outcome::new("abundancy", json!({ "n": num(n) }));
    let class = if p.is_perfect() {
        "perfect"
    } else if p.is_abundant() {
        "abundant"
    } else {
        "deficient"
    };
    o.line(format!("I({n}) = {}", p.abundancy));
    o.line(format!("σ({n}) = {}", p.sigma));
    o.line(format!("2n - σ(n) = {} ({class})", p.deficiency));
    o.line(format!("|I(n) - 2| = {}", p.closeness()));
    o.results.push(json!({
        "n": num(n),
        "sigma": num(&p.sigma),
        "abundancy": num(&p.abundancy),
        "deficiency": num(&p.deficiency),
        "closeness": num(p.closeness()),
        "class": class,
    }));
    Ok(o)
}

fn cmd_mersenne(max_p: u64) -> Outcome {
    let ps = mersenne_exponents(max_p);
    let mut o = Outcome::new("mersenne", json!({ "max_p": num(max_p) }));
    let list: Vec<String> = ps.iter().map(u64::to_string).collect();
    o.line(format!("{} Mersenne exponents p <= {max_p}: {}", ps.len(), list.join(" ")));
    o.results = ps
        .iter()
        .map(|&p| json!({ "p": num(p), "mersenne_prime": num(perfectnum_core::natural::mersenne(p)) }))
        .collect();
    o
}

fn check_text(c: Check) -> String {
    match (c.verdict, c.asserted) {
        (Verdict::Pass | Verdict::Fail, false) => format!("{} (not asserted)", c.verdict),
        (v, _) => v.to_string(),
    }
}

fn euclid_text(r: &EuclidReport) -> Vec<String> {
    let f = &r.form;
    let mut lines = vec![format!("p = {}: M = {} * 2^{}", f.p, short(&f.mersenne), f.p - 1)];
    for (name, c) in r.checks() {
        let detail = match name {
            "e4" => format!("  [{}]", join(&r.e4_values)),
            "lemma1" => format!("  ({}, {})", r.lemma1.0, r.lemma1.1),
            "lemma3" => r
                .lemma3
                .as_ref()
                .map_or(String::new(), |(a, b)| format!("  ({}, {})", short_ratio(a), short_ratio(b))),
            "e7" => r.e7.as_ref().map_or(String::new(), |c| {
                format!(
                    "  I(M_p) = {}, I((M_p+1)/2) = {}, I(nbar) = {}{}",
                    short_ratio(&c.abundancy_mersenne),
                    short_ratio(&c.abundancy_half),
                    short_ratio(&c.abundancy_nbar),
                    if c.attains_upper_bound { " (8/7 attained)" } else { "" }
                )
            }),
            _ => String::new(),
        };
        lines.push(format!("  {name:<16} {}{detail}", check_text(c)));
    }
    lines
}

fn join(rs: &[perfectnum_core::ExactRatio]) -> String {
    rs.iter().map(ToString::to_string).collect::<Vec<_>>().join(", ")
}

/// Abbreviates very long decimals in text output.
fn short(x: impl ToString) -> String {
    let s = x.to_string();
    if s.len() <= 40 {
        s
    } else {
        format!("{}...{} ({} digits)", &s[..12], &s[s.len() - 12..], s.len())
    }
}

fn short_ratio(r: &perfectnum_core::ExactRatio) -> String {
    if r.is_integer() {
        short(r.numer())
    } else {
        format!("{}/{}", short(r.numer()), short(r.denom()))
    }
}

fn cmd_euclid(exponents: Vec<u64>, command: &'static str, inputs: Value) -> Result<Outcome, CliError> {
    let mut o = Outcome::new(command, inputs);
    for p in exponents {
        let r = euclid_report(&build_euclidean(p)?);
        o.verdicts.extend(r.checks().iter().map(|(_, c)| *c));
        for l in euclid_text(&r) {
            o.line(l);
        }
        o.results.push(json::euclid_report(&r));
    }
    Ok(o)
}

fn reported_text<T>(r: &Reported<T>, value: String) -> String {
    format!("{value}  {} (bound {})", r.check.verdict, if r.satisfied { "met" } else { "not met" })
}

fn euler_text(r: &EulerReport) -> Vec<String> {
    let d = &r.decomposition;
    let b = &r.biconditional;
    let head = match r.index {
        Some(i) => format!("term {i}: "),
        None => String::new(),
    };
    let mut lines = vec![format!(
        "{head}N = {} = {}^{} * {}^2   |I(N) - 2| = {}{}",
        d.value,
        d.q,
        d.k,
        d.n,
        r.closeness,
        if r.probabilistic { "  (probable primes)" } else { "" }
    )];
    let mut item = |label: &str, text: String| lines.push(format!("  {label:<34} {text}"));
    item("q = 1 (mod 4)", check_text(r.o2_mod4));
    item("gcd(q, n) = 1", check_text(r.o9_gcd));
    item("k = 1 (Sorli)", format!("{}  k = {}", check_text(r.sorli), r.sorli_k));
    item("q^k < n (Dris)", check_text(r.dris));
    item(
        "biconditional triple",
        format!(
            "{} {} {}  agreement {}",
            b.euler_part_below_n, b.sigma_below, b.ratio_below, b.agreement()
        ),
    );
    item("q^2 < 3 n^2", check_text(r.acquaah_konyagin));
    item("n^2/q^k > 315/2", reported_text(&r.broughan_ratio, r.broughan_ratio.value.to_string()));
    for q in &r.o4_quantities {
        item("q_j^b sigma(q_j^b)/N <= 2/3", reported_text(q, q.value.to_string()));
    }
    item(
        "sigma(q^k)/n^2, sigma(n^2)/q^k",
        reported_text(&r.lemma2, format!("{}, {}", r.lemma2.value.0, r.lemma2.value.1)),
    );
    item(
        "1 < I(q^k) < 5/4",
        format!("{}  I(q^k) = {}", check_text(r.o7.euler_part_bound), r.o7.abundancy_euler_part),
    );
    item(
        "8/5 < 2/I(q^k) < 2",
        format!("{}  2/I(q^k) = {}", check_text(r.o7.two_over_abundancy_bound), r.o7.two_over_abundancy),
    );
    let pos = |ps: &[perfectnum_core::eulerian::report::ChainPosition]| {
        ps.iter()
            .map(|p| {
                let sym = match p.ordering {
                    std::cmp::Ordering::Less => "<",
                    std::cmp::Ordering::Equal => "=",
                    std::cmp::Ordering::Greater => ">",
                };
                format!("{sym} {}", p.constant)
            })
            .collect::<Vec<_>>()
            .join(", ")
    };
    item("I(n)", format!("{}  [{}]", r.o7.abundancy_n, pos(&r.o7.n_positions)));
    item("I(n^2)", format!("{}  [{}]", r.o7.abundancy_n_squared, pos(&r.o7.n_squared_positions)));
    item(
        "I(q^k) < 5/4 < sqrt(8/5) < I(n)",
        reported_text(&r.o7.remark5_chain, r.o7.remark5_chain.value.to_string()),
    );
    lines
}

fn term_reports(factorizer: &Factorizer, terms: &[RecordTerm]) -> Result<Vec<EulerReport>, CliError> {
    terms
        .iter()
        .map(|t| euler_report_for(factorizer, &t.decomposition, Some(t.index)).map_err(CliError::from))
        .collect()
}

fn cmd_a228059(
    factorizer: &Factorizer,
    limit: u64,
    bfile: Option<&std::path::Path>,
    with_reports: bool,
) -> Result<Outcome, CliError> {
    let terms = enumerate_a228059(limit)?;
    let mut inputs = json!({ "limit": num(limit) });
    if let Some(path) = bfile {
        std::fs::write(path, format_bfile(&terms)).map_err(|source| CliError::Io {
            path: path.display().to_string(),
            source,
        })?;
        inputs["bfile"] = Value::String(path.display().to_string());
    }
    let reports = if with_reports { Some(term_reports(factorizer, &terms)?) } else { None };
    let mut o = Outcome::new("a228059", inputs);
    for (i, t) in terms.iter().enumerate() {
        let d = &t.decomposition;
        let mut entry = json::record_term(t);
        match &reports {
            Some(rs) => {
                let r = &rs[i];
                o.verdicts.extend(r.checks().iter().map(|(_, c)| *c));
                for l in euler_text(r) {
                    o.line(l);
                }
                entry["report"] = json::euler_report(r);
            }
            None => o.line(format!("{} {}  = {}^{} * {}^2  |I - 2| = {}", t.index, d.value, d.q, d.k, d.n, t.closeness)),
        }
        o.results.push(entry);
    }
    Ok(o)
}

fn cmd_euler_report(factorizer: &Factorizer, n: &Natural) -> Result<Outcome, CliError> {
    let d = eulerian_decompose_with(factorizer, n)?.ok_or_else(|| {
        CliError::Core(perfectnum_core::Error::InvalidInput(format!(
            "{n} is not of the form q^k n^2 with q prime, q = k = 1 (mod 4), gcd(q, n) = 1"
        )))
    })?;
    let r = euler_report_for(factorizer, &d, None)?;
    let mut o = Outcome::new("euler-report", json!({ "n": num(n) }));
    o.verdicts.extend(r.checks().iter().map(|(_, c)| *c));
    for l in euler_text(&r) {
        o.line(l);
    }
    o.results.push(json::euler_report(&r));
    Ok(o)
}

fn cmd_verify_euler(factorizer: &Factorizer, limit: u64) -> Result<Outcome, CliError> {
    let terms = enumerate_a228059(limit)?;
    let reports = term_reports(factorizer, &terms)?;
    let mut o = Outcome::new("verify", json!({ "suite": "euler", "limit": num(limit) }));

    let decreasing = terms.windows(2).all(|w| w[1].closeness < w[0].closeness);
    let n_above_one = terms.iter().all(|t| t.decomposition.n > Natural::from(1u32));
    let suite_checks = [
        ("closeness strictly decreasing", Check::asserted(decreasing)),
        ("n > 1 for every term", Check::asserted(n_above_one)),
    ];
    for (name, c) in suite_checks {
        o.verdicts.add(c);
        o.line(format!("{name:<32} {}", check_text(c)));
        o.results.push(json!({ "name": name, "check": json::check(c) }));
    }
    for r in &reports {
        o.verdicts.extend(r.checks().iter().map(|(_, c)| *c));
        for l in euler_text(r) {
            o.line(l);
        }
        o.results.push(json::euler_report(r));
    }
    let sorli = reports.iter().filter(|r| r.sorli.passed()).count();
    let dris = reports.iter().filter(|r| r.dris.passed()).count();
    o.line(format!("sorli k = 1: {sorli}/{}   dris q^k < n: {dris}/{}", reports.len(), reports.len()));
    Ok(o)
}

fn cmd_verify_oracle(factorizer: &Factorizer, limit: u64) -> Result<Outcome, CliError> {
    const SMALL: u64 = 100_000;
    const LL_MAX_P: u64 = 61;
    let mut o = Outcome::new("verify", json!({ "suite": "oracle", "limit": num(limit) }));

    let enumerated = oracle::term_pairs(&enumerate_a228059(limit)?);
    let scanned = oracle::brute_force_records(limit, factorizer)?;
    let sigma_bad = oracle::sigma_mismatches(SMALL, factorizer)?;
    let factor_bad = oracle::factorization_mismatches(SMALL, factorizer)?;
    let ll_bad = oracle::lucas_lehmer_mismatches(LL_MAX_P);

    let checks = [
        (
            "records: enumeration == odd scan",
            Check::asserted(enumerated == scanned),
            format!("{} terms enumerated, {} by scan, limit {limit}", enumerated.len(), scanned.len()),
        ),
        (
            "sigma == divisor enumeration",
            Check::asserted(sigma_bad.is_empty()),
            format!("x <= {SMALL}, {} mismatches", sigma_bad.len()),
        ),
        (
            "factorization == SPF table",
            Check::asserted(factor_bad.is_empty()),
            format!("2 <= x <= {SMALL}, {} mismatches", factor_bad.len()),
        ),
        (
            "Lucas-Lehmer == direct test",
            Check::asserted(ll_bad.is_empty()),
            format!("primes p <= {LL_MAX_P}, mismatches {ll_bad:?}"),
        ),
    ];
    for (name, c, detail) in checks {
        o.verdicts.add(c);
        o.line(format!("{name:<34} {}  {detail}", check_text(c)));
        o.results.push(json!({ "name": name, "check": json::check(c), "detail": detail }));
    }
    Ok(o)
}
