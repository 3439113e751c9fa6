use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use pavstat::export::{self, Format, Table, TableKind};
use pavstat::render::{self, PolyKind};
use pavstat::{Config, Suite};

const RENDERING: &str = "\
Polynomials are printed in canonical form: terms sorted by ascending total
degree, ties broken by ascending q-degree; each term is written as
coefficient*q^a*t^b with unit coefficients and exponents dropped, and a
leading minus sign for negative coefficients (\"t^2 + q*t\", \"-t + t^2\").
The zero polynomial prints as 0.

The enumeration cap is taken from --max-n, then PAVSTAT_MAX_N, then the
default of 12 (15 with --extended).";

#[derive(Parser)]
#[command(name = "pavstat", version)]
#[command(about = "Major-index and inversion polynomials of 321-avoiding permutations")]
#[command(after_long_help = RENDERING)]
struct Cli {
    /// Enumeration cap; for `verify`, the largest n each suite reaches
    #[arg(long, global = true, value_name = "N")]
    max_n: Option<usize>,

    /// Raise the default cap to 15
    #[arg(long, global = true)]
    extended: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print one polynomial
    #[command(after_long_help = RENDERING)]
    Poly {
        kind: PolyKind,
        n: usize,
        /// Descent count, for `ank` only
        k: Option<usize>,
        /// Print the polynomial and its term list as JSON
        #[arg(long)]
        json: bool,
    },
    /// Run a verification suite; exits nonzero if any check fails
    Verify {
        suite: Suite,
        /// Print the report as JSON
        #[arg(long)]
        json: bool,
        /// Leave runtimes out of the report
        #[arg(long)]
        no_timings: bool,
    },
    /// Write a coefficient table
    Export {
        what: TableKind,
        #[arg(long)]
        format: Format,
        /// Output file, or - for stdout
        path: PathBuf,
    },
}

fn main() -> ExitCode {
    match run() {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn run() -> anyhow::Result<ExitCode> {
    let cli = Cli::parse();
    let config = Config::from_env(cli.max_n, cli.extended)?;
    match cli.command {
        Command::Poly { kind, n, k, json } => {
            let p = render::compute(&config, kind, n, k)?;
            if json {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&render::to_json(kind, n, k, &p))?
                );
            } else {
                println!("{}", p.render());
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify {
            suite,
            json,
            no_timings,
        } => {
            let report = pavstat::verify(config, suite);
            if json {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&report.to_json(!no_timings))?
                );
            } else {
                print!("{}", report.render_text(!no_timings));
            }
            Ok(if report.all_passed() {
                ExitCode::SUCCESS
            } else {
                ExitCode::FAILURE
            })
        }
        Command::Export { what, format, path } => {
            let table = Table::build(what, config.cap, &config)?;
            export::export(&table, format, &path)?;
            Ok(ExitCode::SUCCESS)
        }
    }
}
