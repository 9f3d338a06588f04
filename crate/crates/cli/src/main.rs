//! `dwbc`: enumeration tables, verification suites and partition functions
//! for the six-vertex model with domain wall boundary conditions.
//!
//! Exit codes: 0 when every verdict is MATCH or PASS, 1 on any mismatch or
//! failed computation, 2 on a usage error.

mod commands;
mod report;

use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand};
use serde_json::{Map, Value};

use commands::{Failure, Point, Suite, VerifyConfig};
use report::{Format, Report};

#[derive(Parser, Debug)]
#[command(name = "dwbc", version, about = "Six-vertex DWBC partition functions, correlators and ASM enumerations")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value = "text", global = true)]
    format: Format,
    /// Working precision in decimal digits for the numeric pipeline.
    #[arg(long, env = "DWBC_DIGITS", default_value_t = 50, global = true, value_parser = clap::value_parser!(u32).range(20..=2000))]
    digits: u32,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Enumerate ASMs and compare totals and refined tables with closed forms.
    Count {
        #[arg(long)]
        n: usize,
        /// Weight per −1 entry, as an integer or p/q.
        #[arg(long, default_value = "1")]
        x: String,
    },
    /// Run a verification suite.
    Verify {
        #[arg(long, value_enum, default_value = "all")]
        suite: Suite,
        /// Check this size only.
        #[arg(long)]
        n: Option<usize>,
        /// Check sizes up to this one.
        #[arg(long, conflicts_with = "n")]
        max_n: Option<usize>,
        /// Weight per −1 entry for the two-point suite.
        #[arg(long)]
        x: Option<String>,
        /// Parameter q for the inhomogeneous suite, as an integer or p/q.
        #[arg(long)]
        q: Option<String>,
        /// Spectral parameter for the crossing suite.
        #[arg(long, allow_hyphen_values = true)]
        lambda: Option<String>,
        /// Crossing parameter for the crossing suite.
        #[arg(long)]
        eta: Option<String>,
        /// Random tuples per (N, k, q) in the inhomogeneous suite.
        #[arg(long, default_value_t = 3)]
        trials: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
    /// Partition function Z_N and the anisotropy Δ.
    Partition {
        #[arg(long)]
        n: usize,
        /// Use the ice point λ = π/2, η = π/6.
        #[arg(long, conflicts_with_all = ["lambda", "eta"])]
        ice: bool,
        /// Spectral parameter, decimal or a multiple of pi such as pi/2.
        #[arg(long, requires = "eta", required_unless_present = "ice")]
        lambda: Option<String>,
        #[arg(long, requires = "lambda")]
        eta: Option<String>,
    },
}

fn insert(params: &mut Map<String, Value>, key: &str, v: impl Into<Value>) {
    params.insert(key.into(), v.into());
}

fn run(cli: &Cli) -> Result<(String, Map<String, Value>, Vec<report::Entry>), Failure> {
    let mut params = Map::new();
    match &cli.command {
        Command::Count { n, x } => {
            insert(&mut params, "n", *n);
            insert(&mut params, "x", x.as_str());
            let xv = commands::parse_q(x, "x")?;
            Ok(("count".into(), params, commands::count(*n, &xv)?))
        }
        Command::Verify { suite, n, max_n, x, q, lambda, eta, trials, seed } => {
            let name = format!("{suite:?}").to_lowercase();
            insert(&mut params, "suite", name);
            for (k, v) in [("n", n), ("max_n", max_n)] {
                if let Some(v) = v {
                    insert(&mut params, k, *v);
                }
            }
            for (k, v) in [("x", x), ("q", q), ("lambda", lambda), ("eta", eta)] {
                if let Some(v) = v {
                    insert(&mut params, k, v.as_str());
                }
            }
            insert(&mut params, "digits", cli.digits);
            insert(&mut params, "trials", *trials);
            insert(&mut params, "seed", *seed);
            let cfg = VerifyConfig {
                n: *n,
                max_n: *max_n,
                x: x.as_deref().map(|s| commands::parse_q(s, "x")).transpose()?,
                q: q.as_deref().map(|s| commands::parse_q(s, "q")).transpose()?,
                lambda: lambda.clone(),
                eta: eta.clone(),
                digits: cli.digits,
                trials: *trials,
                seed: *seed,
            };
            Ok(("verify".into(), params, commands::verify(*suite, &cfg)?))
        }
        Command::Partition { n, ice, lambda, eta } => {
            insert(&mut params, "n", *n);
            insert(&mut params, "digits", cli.digits);
            let point = if *ice {
                insert(&mut params, "ice", true);
                Point::Ice
            } else {
                let (l, e) = (lambda.clone().unwrap_or_default(), eta.clone().unwrap_or_default());
                insert(&mut params, "lambda", l.as_str());
                insert(&mut params, "eta", e.as_str());
                Point::Angles { lambda: l, eta: e }
            };
            Ok(("partition".into(), params, commands::partition(*n, &point, cli.digits)?))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let start = Instant::now();
    match run(&cli) {
        Ok((command, params, results)) => {
            let report = Report { command, params, results, elapsed_ms: start.elapsed().as_millis() };
            print!("{}", report.render(cli.format));
            if report.passed() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Compute(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use clap::CommandFactory;

    #[test]
    fn clap_definition_is_consistent() {
        Cli::command().debug_assert();
    }

    #[test]
    fn partition_needs_a_point() {
        assert!(Cli::try_parse_from(["dwbc", "partition", "--n", "2"]).is_err());
        assert!(Cli::try_parse_from(["dwbc", "partition", "--n", "2", "--ice", "--lambda", "1"]).is_err());
        assert!(Cli::try_parse_from(["dwbc", "partition", "--n", "2", "--lambda", "1", "--eta", "0.3"]).is_ok());
    }
}
