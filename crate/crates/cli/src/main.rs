//! `threecore`: compute, tabulate and verify 3-core partition counts.
//!
//! Exit codes: 0 success, 1 verification failure or overflow, 2 usage error.

mod families;
mod output;

use std::io::{self, BufWriter, Write};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use threecore::arith::{SpfSieve, DEFAULT_SIEVE_LIMIT};
use threecore::counts::DEFAULT_ORDER_BUDGET;
use threecore::{CoreKind, Error, Evaluator, IdentityReport, Method};

use families::{FamilyParams, FAMILIES};
use output::{write_records, Format};

#[derive(Debug, Parser)]
#[command(name = "threecore", version, about = "Counts of 3-core partitions, pairs and triples")]
struct Cli {
    #[command(flatten)]
    limits: Limits,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct Limits {
    /// Truncation order budget for the series and lambert methods.
    #[arg(long, global = true, default_value_t = DEFAULT_ORDER_BUDGET as u64,
          value_parser = clap::value_parser!(u64).range(1..))]
    order: u64,

    /// Largest n the brute-force method will enumerate.
    #[arg(long, global = true, env = "CORE3_BRUTE_CAP", default_value_t = 40,
          value_parser = clap::value_parser!(u64).range(1..))]
    brute_cap: u64,

    /// Smallest-prime-factor sieve size; larger inputs use trial division.
    #[arg(long, global = true, env = "CORE3_SIEVE_LIMIT", default_value_t = DEFAULT_SIEVE_LIMIT,
          value_parser = clap::value_parser!(u64).range(1..=u32::MAX as u64))]
    sieve_limit: u64,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print one count.
    Compute {
        /// a3, A3 or B3
        kind: CoreKind,
        n: u64,
        #[arg(long, default_value = "formula")]
        method: Method,
        #[arg(long, value_enum, default_value = "jsonl")]
        format: Format,
    },
    /// Print counts for n = 0 .. nmax-1.
    Table {
        kind: CoreKind,
        #[arg(long)]
        nmax: u64,
        #[arg(long, default_value = "formula")]
        method: Method,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
    },
    /// Check one identity family and print its report.
    #[command(after_help = verify_help())]
    Verify {
        family: String,
        #[arg(long)]
        p: Option<u64>,
        #[arg(long = "kmax")]
        k_max: Option<u32>,
        #[arg(long = "nmax")]
        n_max: Option<u64>,
        #[arg(long)]
        j: Option<u32>,
        #[arg(long = "alpha-max")]
        alpha_max: Option<u32>,
    },
    /// Cross-validate all methods and run every identity family.
    Selfcheck {
        #[arg(long, default_value_t = DEFAULT_ORDER_BUDGET as u64)]
        nmax: u64,
    },
}

fn verify_help() -> String {
    format!("Families: {}", FAMILIES.join(", "))
}

/// A failed run, carrying its exit code.
#[derive(Debug)]
enum Failure {
    Usage(String),
    Runtime(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::CapExceeded { .. } | Error::InvalidArgument(_) | Error::UnsupportedPrime { .. } => {
                Failure::Usage(e.to_string())
            }
            _ => Failure::Runtime(e.to_string()),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Runtime(e.to_string())
    }
}

type Outcome = Result<bool, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Runtime(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}

fn run(cli: Cli) -> Outcome {
    let Limits { order, brute_cap, sieve_limit } = cli.limits;
    let order = usize::try_from(order).map_err(|_| Failure::Usage("order too large".into()))?;
    let eval = Evaluator::new(SpfSieve::new(sieve_limit)?, brute_cap, order);
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let ok = match cli.command {
        Command::Compute { kind, n, method, format } => {
            let record = eval.record(kind, method, n)?;
            write_records(&mut out, &[record], format, true)?;
            true
        }
        Command::Table { kind, nmax, method, format } => {
            let len = usize::try_from(nmax).map_err(|_| Failure::Usage("nmax too large".into()))?;
            let records = eval.table(kind, method, len)?;
            write_records(&mut out, &records, format, true)?;
            true
        }
        Command::Verify { family, p, k_max, n_max, j, alpha_max } => {
            let params = FamilyParams { p, k_max, n_max, j, alpha_max };
            let report = families::run(&family, &params, &eval)?;
            print_report(&mut out, &report)?;
            report.passed()
        }
        Command::Selfcheck { nmax } => selfcheck(&mut out, nmax, &eval)?,
    };
    out.flush()?;
    Ok(ok)
}

fn print_report(out: &mut impl Write, report: &IdentityReport) -> io::Result<()> {
    let status = if report.passed() { "PASS" } else { "FAIL" };
    writeln!(
        out,
        "{}: {status} ({} checked, {} failures) [{}]",
        report.family,
        report.checked,
        report.failures.len(),
        report.params
    )?;
    for f in report.failures.iter().take(10) {
        writeln!(out, "  {}: {} != {}", f.inputs, f.lhs, f.rhs)?;
    }
    serde_json::to_writer(&mut *out, report)?;
    writeln!(out)
}

fn selfcheck(out: &mut impl Write, nmax: u64, eval: &Evaluator) -> Outcome {
    if nmax == 0 {
        return Err(Failure::Usage("selfcheck needs --nmax >= 1".into()));
    }
    if nmax > eval.order_budget as u64 {
        return Err(Failure::Usage(format!(
            "selfcheck --nmax {nmax} exceeds the order budget {}",
            eval.order_budget
        )));
    }
    let cross = FamilyParams { n_max: Some(nmax), ..Default::default() };
    let defaults = FamilyParams::default();
    let results: Vec<_> = std::thread::scope(|scope| {
        let handles: Vec<_> = FAMILIES
            .iter()
            .map(|&family| {
                let params = if family == "cross-validate" { &cross } else { &defaults };
                scope.spawn(move || {
                    let start = Instant::now();
                    let report = families::run(family, params, eval);
                    (family, report, start.elapsed())
                })
            })
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("family check panicked"))
            .collect()
    });

    let mut all_passed = true;
    for (family, report, elapsed) in results {
        let report = report?;
        all_passed &= report.passed();
        writeln!(
            out,
            "{family}: {} ({} checked, {} failures) {:.1} ms [{}]",
            if report.passed() { "PASS" } else { "FAIL" },
            report.checked,
            report.failures.len(),
            elapsed.as_secs_f64() * 1e3,
            report.params
        )?;
        for f in report.failures.iter().take(10) {
            writeln!(out, "  {}: {} != {}", f.inputs, f.lhs, f.rhs)?;
        }
    }
    writeln!(out, "selfcheck: {}", if all_passed { "PASS" } else { "FAIL" })?;
    Ok(all_passed)
}
