use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

pub const DEFAULT_LIMIT: u64 = 4_000_000_000;
pub const DEFAULT_MAX_P: u64 = 607;
/// Default limit for the enumeration-versus-scan oracle, which visits every
/// odd number below it.
pub const DEFAULT_ORACLE_LIMIT: u64 = 10_000_000;

#[derive(Parser, Debug, Clone)]
#[command(name = "perfectnum", version, about = "Exact checks of the Euclid and Euler forms of perfect numbers")]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalOpts,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct GlobalOpts {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Table)]
    pub format: OutputFormat,

    /// Pollard-rho iteration budget per factorization.
    #[arg(long, global = true)]
    pub effort_bound: Option<u64>,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputFormat {
    Table,
    Json,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Euclid,
    Euler,
    Oracle,
}

impl Suite {
    pub fn as_str(self) -> &'static str {
        match self {
            Suite::Euclid => "euclid",
            Suite::Euler => "euler",
            Suite::Oracle => "oracle",
        }
    }
}

#[derive(Subcommand, Debug, Clone)]
pub enum Command {
    /// Prime factorization of N.
    Factor { n: String },
    /// Sum of divisors of N.
    Sigma { n: String },
    /// Abundancy index sigma(N)/N, deficiency and closeness to perfection.
    Abundancy { n: String },
    /// Mersenne exponents p <= P (Lucas-Lehmer).
    Mersenne {
        #[arg(long = "max-p", default_value_t = DEFAULT_MAX_P)]
        max_p: u64,
    },
    /// Euclid-side heuristics for one exponent or every exponent up to a bound.
    #[command(name = "euclid-report")]
    EuclidReport {
        #[arg(long, conflicts_with = "max_p", required_unless_present = "max_p")]
        p: Option<u64>,
        #[arg(long = "max-p")]
        max_p: Option<u64>,
    },
    /// Record sequence of near-perfect odd numbers q^k n^2.
    A228059 {
        #[arg(long, default_value = "4000000000")]
        limit: String,
        /// Write the terms as a b-file ("index value" lines).
        #[arg(long)]
        bfile: Option<PathBuf>,
        /// Attach the odd-side report to every term.
        #[arg(long)]
        reports: bool,
    },
    /// Odd-side heuristics for N = q^k n^2.
    #[command(name = "euler-report")]
    EulerReport { n: String },
    /// Side-by-side heuristics table with computed verdicts.
    Table {
        #[arg(long = "max-p", default_value_t = DEFAULT_MAX_P)]
        max_p: u64,
        #[arg(long, default_value = "4000000000")]
        limit: String,
    },
    /// Run a verification suite.
    Verify {
        #[arg(long, value_enum)]
        suite: Suite,
        #[arg(long = "max-p", default_value_t = DEFAULT_MAX_P)]
        max_p: u64,
        /// Search limit (default 4e9 for euler, 1e7 for oracle).
        #[arg(long)]
        limit: Option<String>,
    },
}
