//! Command-line front end: exact Stirling/Bell table generation,
//! identity verification sweeps, and Monte Carlo Poisson moment checks,
//! with CSV or JSON output.
//!
//! Exit codes: 0 when every check passes, 1 on a verification or
//! statistical failure, 2 on malformed arguments. Results go to standard
//! output, diagnostics to standard error.

mod sweeps;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use extbell::bell::{bell_ext_number, bell_number};
use extbell::numeric::Rational;
use extbell::poisson::{moment_grid_check, MomentReport, DEFAULT_Z_THRESHOLD};
use extbell::stirling::{s2, s2r_table};

/// Sweeps above this are almost certainly an accident at exact-arithmetic
/// cost curves.
const N_MAX_LIMIT: usize = 30;

#[derive(Parser)]
#[command(
    name = "extbell",
    version,
    about = "Exact extended Stirling/Bell tables, identity verification, and Poisson moment checks"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print a Stirling triangle or Bell number sequence
    Table {
        /// What to tabulate
        #[arg(value_enum)]
        kind: TableKind,
        /// Largest n (inclusive)
        #[arg(long)]
        n_max: usize,
        /// Extension parameter as p/q; required for s2r and bell_ext
        #[arg(long, value_parser = parse_rational, allow_hyphen_values = true)]
        r: Option<Rational>,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Sweep one identity over a parameter grid and report any failures
    Verify {
        /// Which identity to check
        #[arg(value_enum)]
        identity: Identity,
        /// Largest n swept (inclusive, at most 30)
        #[arg(long, default_value_t = 20)]
        n_max: usize,
        /// Comma-separated p/q values for r (default: built-in probe set)
        #[arg(
            long,
            visible_alias = "r",
            value_delimiter = ',',
            value_parser = parse_rational,
            allow_hyphen_values = true
        )]
        r_set: Option<Vec<Rational>>,
        /// Comma-separated p/q values for lambda (default: built-in probe set)
        #[arg(
            long,
            visible_alias = "lambda",
            value_delimiter = ',',
            value_parser = parse_rational,
            allow_hyphen_values = true
        )]
        lambda_set: Option<Vec<Rational>>,
        /// Comma-separated p/q values for x (default: probe set plus 0..=n)
        #[arg(
            long,
            visible_alias = "x",
            value_delimiter = ',',
            value_parser = parse_rational,
            allow_hyphen_values = true
        )]
        x_set: Option<Vec<Rational>>,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Monte Carlo check of E[(X + r*lambda)^n] against the exact values
    PoissonCheck {
        /// Check every moment order 0..=n_max (at most 8)
        #[arg(long, default_value_t = 4)]
        n_max: usize,
        /// Poisson parameter (float; must be in (0, 10])
        #[arg(long, allow_hyphen_values = true)]
        lambda: f64,
        /// Shift parameter (float)
        #[arg(long, allow_hyphen_values = true)]
        r: f64,
        #[arg(long, default_value_t = 1_000_000)]
        samples: u64,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        /// |z| acceptance threshold
        #[arg(long, default_value_t = DEFAULT_Z_THRESHOLD)]
        threshold: f64,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TableKind {
    S2,
    S2r,
    Bell,
    #[value(name = "bell_ext")]
    BellExt,
}

impl TableKind {
    fn name(self) -> &'static str {
        match self {
            TableKind::S2 => "s2",
            TableKind::S2r => "s2r",
            TableKind::Bell => "bell",
            TableKind::BellExt => "bell_ext",
        }
    }

    fn needs_r(self) -> bool {
        matches!(self, TableKind::S2r | TableKind::BellExt)
    }

    fn is_triangle(self) -> bool {
        matches!(self, TableKind::S2 | TableKind::S2r)
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Identity {
    #[value(name = "defining_relation")]
    DefiningRelation,
    #[value(name = "thm1")]
    Thm1,
    #[value(name = "thm2_vs_egf")]
    Thm2VsEgf,
    #[value(name = "thm3")]
    Thm3,
    #[value(name = "thm5")]
    Thm5,
    #[value(name = "eq27")]
    Eq27,
    #[value(name = "eq30")]
    Eq30,
    #[value(name = "eq34")]
    Eq34,
    #[value(name = "eq39")]
    Eq39,
    #[value(name = "eq15_eq20")]
    Eq15Eq20,
    #[value(name = "r0_reduction")]
    R0Reduction,
}

impl Identity {
    pub fn name(self) -> &'static str {
        match self {
            Identity::DefiningRelation => "defining_relation",
            Identity::Thm1 => "thm1",
            Identity::Thm2VsEgf => "thm2_vs_egf",
            Identity::Thm3 => "thm3",
            Identity::Thm5 => "thm5",
            Identity::Eq27 => "eq27",
            Identity::Eq30 => "eq30",
            Identity::Eq34 => "eq34",
            Identity::Eq39 => "eq39",
            Identity::Eq15Eq20 => "eq15_eq20",
            Identity::R0Reduction => "r0_reduction",
        }
    }
}

#[derive(Clone, Copy, Default, PartialEq, Eq, ValueEnum)]
enum Format {
    #[default]
    Csv,
    Json,
}

/// Sweep result for one identity: which grid was run, how many checks it
/// performed, and the first failing parameter tuples (at most ten).
#[derive(Serialize)]
pub struct VerificationReport {
    pub identity: String,
    pub grid: String,
    pub checked: u64,
    pub failures: Vec<String>,
    pub pass: bool,
}

fn parse_rational(s: &str) -> Result<Rational, String> {
    s.trim()
        .parse::<Rational>()
        .map_err(|e| format!("invalid rational {s:?}, expected p/q form: {e}"))
}

fn main() {
    let cli = Cli::parse();
    std::process::exit(run(cli.command));
}

fn run(command: Command) -> i32 {
    match command {
        Command::Table {
            kind,
            n_max,
            r,
            format,
        } => run_table(kind, n_max, r, format),
        Command::Verify {
            identity,
            n_max,
            r_set,
            lambda_set,
            x_set,
            format,
        } => run_verify(identity, n_max, r_set, lambda_set, x_set, format),
        Command::PoissonCheck {
            n_max,
            lambda,
            r,
            samples,
            seed,
            threshold,
            format,
        } => run_poisson_check(n_max, lambda, r, samples, seed, threshold, format),
    }
}

fn usage_error(message: &str) -> i32 {
    eprintln!("error: {message}");
    2
}

#[derive(Serialize)]
struct TableEntry {
    n: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    k: Option<usize>,
    value: String,
}

#[derive(Serialize)]
struct TableDocument {
    kind: String,
    n_max: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    r: Option<String>,
    entries: Vec<TableEntry>,
}

fn run_table(kind: TableKind, n_max: usize, r: Option<Rational>, format: Format) -> i32 {
    if n_max > N_MAX_LIMIT {
        return usage_error(&format!("--n-max must be at most {N_MAX_LIMIT} (got {n_max})"));
    }
    if kind.needs_r() && r.is_none() {
        return usage_error(&format!("table {} requires --r", kind.name()));
    }
    if !kind.needs_r() && r.is_some() {
        return usage_error(&format!("table {} does not take --r", kind.name()));
    }

    let entries: Vec<TableEntry> = match kind {
        TableKind::S2 => (0..=n_max)
            .flat_map(|n| {
                (0..=n).map(move |k| TableEntry {
                    n,
                    k: Some(k),
                    value: s2(n, k).to_string(),
                })
            })
            .collect(),
        TableKind::S2r => {
            let table = s2r_table(n_max, r.as_ref().expect("checked above"));
            table
                .entries()
                .map(|(n, k, value)| TableEntry {
                    n,
                    k: Some(k),
                    value: value.to_string(),
                })
                .collect()
        }
        TableKind::Bell => (0..=n_max)
            .map(|n| TableEntry {
                n,
                k: None,
                value: bell_number(n).to_string(),
            })
            .collect(),
        TableKind::BellExt => {
            let r = r.as_ref().expect("checked above");
            (0..=n_max)
                .map(|n| TableEntry {
                    n,
                    k: None,
                    value: bell_ext_number(n, r).to_string(),
                })
                .collect()
        }
    };

    match format {
        Format::Csv => {
            if kind.is_triangle() {
                println!("n,k,value");
                for e in &entries {
                    println!("{},{},{}", e.n, e.k.expect("triangle entry"), e.value);
                }
            } else {
                println!("n,value");
                for e in &entries {
                    println!("{},{}", e.n, e.value);
                }
            }
        }
        Format::Json => {
            let doc = TableDocument {
                kind: kind.name().to_string(),
                n_max,
                r: r.map(|v| v.to_string()),
                entries,
            };
            println!(
                "{}",
                serde_json::to_string_pretty(&doc).expect("table serializes")
            );
        }
    }
    0
}

fn run_verify(
    identity: Identity,
    n_max: usize,
    r_set: Option<Vec<Rational>>,
    lambda_set: Option<Vec<Rational>>,
    x_set: Option<Vec<Rational>>,
    format: Format,
) -> i32 {
    if n_max > N_MAX_LIMIT {
        return usage_error(&format!("--n-max must be at most {N_MAX_LIMIT} (got {n_max})"));
    }
    let params = sweeps::SweepParams {
        n_max,
        r_set: r_set.unwrap_or_else(extbell::probes::default_r),
        lambda_set: lambda_set.unwrap_or_else(extbell::probes::default_lambda),
        x_set,
    };
    let report = sweeps::run(identity, &params);

    match format {
        Format::Csv => {
            println!("identity,grid,checked,failures,pass");
            println!(
                "{},{},{},{},{}",
                report.identity,
                report.grid,
                report.checked,
                report.failures.join(";"),
                report.pass
            );
        }
        Format::Json => println!(
            "{}",
            serde_json::to_string_pretty(&report).expect("report serializes")
        ),
    }
    if report.pass {
        0
    } else {
        1
    }
}

fn run_poisson_check(
    n_max: usize,
    lambda: f64,
    r: f64,
    samples: u64,
    seed: u64,
    threshold: f64,
    format: Format,
) -> i32 {
    let reports = match moment_grid_check(n_max, lambda, r, samples, seed, threshold) {
        Ok(reports) => reports,
        Err(e) => return usage_error(&e.to_string()),
    };
    match format {
        Format::Csv => {
            println!("n,lambda,r,samples,seed,exact,mean,stderr,z,pass");
            for m in &reports {
                println!(
                    "{},{},{},{},{},{},{},{},{},{}",
                    m.n,
                    m.lambda,
                    m.r,
                    m.samples,
                    m.seed,
                    m.exact_value,
                    m.empirical_mean,
                    m.std_error,
                    m.z_score,
                    m.pass
                );
            }
        }
        Format::Json => println!(
            "{}",
            serde_json::to_string_pretty(&reports).expect("reports serialize")
        ),
    }
    report_exit_code(&reports)
}

fn report_exit_code(reports: &[MomentReport]) -> i32 {
    if reports.iter().all(|m| m.pass) {
        0
    } else {
        1
    }
}
