mod tables;

use std::fmt::Display;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;

use cdverify::alternating::{alternating_degrees, max_degree_alternating};
use cdverify::arith::{cyclotomic_value, Budget, DEFAULT_MAX_BITS};
use cdverify::claims::{parse_ledger, run_ledger, RunOptions};
use cdverify::groups::parse_group;
use cdverify::zsigmondy::{l, l_neg};

/// Magnitude cap, in bits, for numbers handed to the factorizer.
const MAX_BITS_VAR: &str = "CDVERIFY_MAX_BITS";

/// Wall-clock limit for the one-shot commands.
const COMMAND_TIMEOUT: Duration = Duration::from_secs(60);

#[derive(Parser)]
#[command(name = "cdverify", version, about = "Exact checks for character-degree arguments on finite simple groups")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the order of a simple group and its factorization.
    Order { group: String },
    /// Print the prime divisors of a group order.
    Pi { group: String },
    /// Print the cyclotomic value Φ_n(q).
    Cyclotomic { n: u64, q: BigUint },
    /// Print the largest primitive prime divisor l_n(q).
    Zsigmondy {
        q: BigUint,
        n: u64,
        /// Print l_{-n}(q) instead (n odd).
        #[arg(long)]
        negative: bool,
    },
    /// Print the character degrees of A_n.
    Altdeg {
        n: u64,
        /// Print only the largest degree.
        #[arg(long)]
        max: bool,
    },
    /// Evaluate a claim ledger and print the report.
    Verify {
        path: PathBuf,
        /// Worker threads (default: all cores).
        #[arg(long)]
        jobs: Option<usize>,
        /// Wall-clock budget per claim, in milliseconds.
        #[arg(long, default_value_t = 5000)]
        budget_ms: u64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Include per-claim elapsed times (output is then not reproducible).
        #[arg(long)]
        timings: bool,
    },
    /// Print bundled reference tables.
    Tables {
        #[command(subcommand)]
        action: TablesAction,
    },
}

#[derive(Subcommand)]
enum TablesAction {
    /// Dump table k (1 to 5).
    Dump {
        #[arg(value_parser = clap::value_parser!(u8).range(1..=5))]
        k: u8,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Machine,
}

struct Failure(String);

impl<E: Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure(e.to_string())
    }
}

fn max_bits() -> Result<u64, Failure> {
    match std::env::var(MAX_BITS_VAR) {
        Ok(v) => v
            .trim()
            .parse::<u64>()
            .ok()
            .filter(|&b| b > 0)
            .ok_or_else(|| Failure(format!("{MAX_BITS_VAR} must be a positive integer, got {v:?}"))),
        Err(_) => Ok(DEFAULT_MAX_BITS),
    }
}

fn budget() -> Result<Budget, Failure> {
    Ok(Budget::with_timeout(COMMAND_TIMEOUT).with_max_bits(max_bits()?))
}

fn join<T: Display>(items: impl IntoIterator<Item = T>) -> String {
    items.into_iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", ")
}

fn run(cli: Cli) -> Result<u8, Failure> {
    match cli.command {
        Command::Order { group } => {
            let g = parse_group(&group)?;
            let f = g.order(&budget()?)?;
            println!("{} = {f}", f.value());
        }
        Command::Pi { group } => {
            let g = parse_group(&group)?;
            println!("{{{}}}", join(g.pi(&budget()?)?));
        }
        Command::Cyclotomic { n, q } => {
            if n == 0 || q < BigUint::from(2u32) {
                return Err(Failure(format!("need n >= 1 and q >= 2, got n = {n}, q = {q}")));
            }
            println!("{}", cyclotomic_value(n, &q));
        }
        Command::Zsigmondy { q, n, negative } => {
            if n == 0 || q < BigUint::from(2u32) {
                return Err(Failure(format!("need n >= 1 and q >= 2, got n = {n}, q = {q}")));
            }
            let budget = budget()?;
            let value = if negative { l_neg(&q, n, &budget)? } else { l(&q, n, &budget)? };
            match value {
                Some(p) => println!("{p}"),
                None => println!("none (Zsigmondy exception)"),
            }
        }
        Command::Altdeg { n, max } => {
            if max {
                println!("{}", max_degree_alternating(n)?);
            } else {
                println!("{}", join(alternating_degrees(n)?));
            }
        }
        Command::Verify { path, jobs, budget_ms, format, timings } => {
            if budget_ms == 0 {
                return Err(Failure("--budget-ms must be positive".into()));
            }
            let text = std::fs::read_to_string(&path)
                .map_err(|e| Failure(format!("{}: {e}", path.display())))?;
            let claims = parse_ledger(&text).map_err(|e| Failure(format!("{}: {e}", path.display())))?;
            let options = RunOptions {
                jobs: jobs.unwrap_or(0),
                budget: Duration::from_millis(budget_ms),
                max_bits: max_bits()?,
            };
            let start = Instant::now();
            let report = run_ledger(&claims, &options);
            let out = match format {
                Format::Text => report.to_text(timings),
                Format::Machine => report.to_machine(timings),
            };
            print!("{out}");
            if timings {
                eprintln!("total elapsed: {} ms", start.elapsed().as_millis());
            }
            return Ok(report.exit_code() as u8);
        }
        Command::Tables { action: TablesAction::Dump { k } } => print!("{}", tables::dump(k)?),
    }
    Ok(0)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(Failure(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
