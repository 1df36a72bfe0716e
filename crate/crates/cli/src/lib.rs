//! Command-line front end for `indigenous-core`.
//!
//! [`run`] parses arguments, dispatches to the library and renders a
//! [`Report`]. Exit codes: 0 ok, 1 claim violated, 2 usage error,
//! 3 bound exceeded.

mod commands;
mod report;

use clap::{Args, Parser, Subcommand};
use indigenous_core::{Error, Result, SemiringCtx};

pub use commands::verify_all;
pub use report::{ClaimLine, Distance, LawLine, OrderSummary, Payload, RadicalLine, Report, Status, Unbounded};

pub const USAGE_ERROR: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "indigenous", version, about = "Exact computations over the Indigenous semirings S_k")]
pub struct Cli {
    /// Print the report as JSON.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

/// Acknowledges running an exhaustive search beyond its default limit.
#[derive(Debug, Args, Clone, Copy)]
pub struct BoundFlag {
    #[arg(long)]
    pub unsafe_bound: bool,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Arithmetic on one element.
    Elem {
        k: u32,
        a: String,
        #[arg(long)]
        add: Option<String>,
        #[arg(long)]
        mul: Option<String>,
        #[arg(long)]
        pow: Option<u32>,
    },
    /// Addition and multiplication tables.
    Table { k: u32 },
    /// Exhaustive check of the semiring and order laws.
    Laws {
        k: u32,
        #[command(flatten)]
        bound: BoundFlag,
    },
    /// Invariants of the Indigenous graph; all of them when none is selected.
    Graph {
        k: u32,
        #[arg(long)]
        diameter: bool,
        #[arg(long)]
        girth: bool,
        #[arg(long)]
        clique: bool,
        #[arg(long)]
        chromatic: bool,
        #[command(flatten)]
        bound: BoundFlag,
    },
    /// The ideal lattice; `--count --list` when nothing is selected.
    Ideals {
        k: u32,
        #[arg(long)]
        count: bool,
        #[arg(long)]
        list: bool,
        #[arg(long)]
        primes: bool,
        /// Radical of the ideal generated by these comma-separated elements.
        #[arg(long, value_name = "GENS")]
        radical: Option<String>,
        #[command(flatten)]
        bound: BoundFlag,
    },
    /// Prime spectrum and its Zariski closed sets.
    Spec {
        k: u32,
        #[command(flatten)]
        bound: BoundFlag,
    },
    /// Localization at a multiplicatively closed set.
    Localize {
        k: u32,
        /// Comma-separated elements of U, e.g. `1,2,4,m`.
        #[arg(long = "u", value_name = "ELEMS")]
        units: String,
        #[command(flatten)]
        bound: BoundFlag,
    },
    /// A polynomial, optionally with a second one to add and multiply.
    Poly { k: u32, f: String, g: Option<String> },
    /// A power series window, given explicitly or built from semigroup generators.
    Series {
        k: u32,
        f: Option<String>,
        #[arg(long, default_value_t = 6)]
        depth: usize,
        /// Comma-separated generators of the support.
        #[arg(long, value_name = "GENS", conflicts_with = "f")]
        gens: Option<String>,
        /// Constant term of the generated series, `1` or `m`.
        #[arg(long, default_value = "1", requires = "gens")]
        a0: String,
    },
    /// Irreducibility of alpha X^2 + beta.
    Irreducible {
        k: u32,
        #[arg(long)]
        alpha: String,
        #[arg(long)]
        beta: String,
        #[command(flatten)]
        bound: BoundFlag,
    },
    /// Every structural claim for k = 1..=k-max.
    VerifyAll {
        #[arg(long, default_value_t = 8)]
        k_max: u32,
    },
}

/// Outcome of [`run`]: exit code and everything meant for stdout.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub output: String,
}

pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { USAGE_ERROR } else { 0 };
            return Outcome { code, output: e.render().to_string() };
        }
    };
    match execute(&cli.command) {
        Ok(report) => {
            let output = if cli.json { report.to_json() } else { report.to_text() };
            Outcome { code: report.status.exit_code(), output }
        }
        Err(e @ Error::BoundExceeded { .. }) => {
            let report = Report::bound_exceeded(format!("{e}; pass --unsafe-bound to run anyway"));
            let output = if cli.json { report.to_json() } else { report.to_text() };
            Outcome { code: report.status.exit_code(), output }
        }
        Err(e) => Outcome { code: USAGE_ERROR, output: format!("error: {e}\n") },
    }
}

pub fn execute(command: &Command) -> Result<Report> {
    use commands::*;
    match command {
        Command::Elem { k, a, add, mul, pow } => elem(&ctx(*k)?, a, add.as_deref(), mul.as_deref(), *pow),
        Command::Table { k } => Ok(table(&ctx(*k)?)),
        Command::Laws { k, bound } => laws(&ctx(*k)?, bound.unsafe_bound),
        Command::Graph { k, diameter, girth, clique, chromatic, bound } => {
            let any = *diameter || *girth || *clique || *chromatic;
            let pick = GraphSelection {
                diameter: *diameter || !any,
                girth: *girth || !any,
                clique: *clique || !any,
                chromatic: *chromatic || !any,
            };
            graph(&ctx(*k)?, pick, bound.unsafe_bound)
        }
        Command::Ideals { k, count, list, primes, radical, bound } => {
            let any = *count || *list || *primes || radical.is_some();
            let pick = IdealSelection { count: *count || !any, list: *list || !any, primes: *primes };
            ideals(&ctx(*k)?, pick, radical.as_deref(), bound.unsafe_bound)
        }
        Command::Spec { k, bound } => spectrum(&ctx(*k)?, bound.unsafe_bound),
        Command::Localize { k, units, bound } => localize(&ctx(*k)?, units, bound.unsafe_bound),
        Command::Poly { k, f, g } => poly(&ctx(*k)?, f, g.as_deref()),
        Command::Series { k, f, depth, gens, a0 } => series(&ctx(*k)?, f.as_deref(), *depth, gens.as_deref(), a0),
        Command::Irreducible { k, alpha, beta, bound } => irreducible(&ctx(*k)?, alpha, beta, bound.unsafe_bound),
        Command::VerifyAll { k_max } => verify_all(*k_max, SemiringCtx::new),
    }
}

fn ctx(k: u32) -> Result<SemiringCtx> {
    SemiringCtx::new(k)
}
