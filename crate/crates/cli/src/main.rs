//! `kgonal` — generate and verify the numbers that are both k-gonal and
//! centered k-gonal.
//!
//! Exit codes: 0 success (and agreement for `verify`/`case2`),
//! 1 verification failure, 2 usage error.

mod output;

use std::io::{self, Write};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use num_bigint::{BigInt, Sign};
use serde::Serialize;

use kgonal_core::figurate::PolygonParams;
use kgonal_core::{intersect, oracle, pell};
use output::OutputFormat;

#[derive(Parser)]
#[command(
    name = "kgonal",
    version,
    about = "Exact generator and verifier for numbers that are both k-gonal and centered k-gonal"
)]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Generate common-value records with their witness indices
    Gen {
        /// Polygon order (k >= 3)
        #[arg(long)]
        k: u32,
        /// Number of records to emit
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        count: u64,
        /// First solution index i (0-based; the value 1 sits at i = 0)
        #[arg(long, default_value_t = 0)]
        start_index: u64,
        /// Output format. bfile lines are "index value" with a 1-based
        /// index = i + 1, following the sequence-archive convention
        #[arg(long, value_enum, default_value_t = OutputFormat::Table)]
        format: OutputFormat,
    },
    /// Check closed-form output against brute-force enumeration over a k-range
    Verify {
        /// Smallest polygon order (>= 3)
        #[arg(long)]
        kmin: u32,
        /// Largest polygon order
        #[arg(long)]
        kmax: u32,
        /// Upper bound on the common values to enumerate (>= 1)
        #[arg(long, value_parser = parse_bigint)]
        limit: BigInt,
    },
    /// Show the continued fraction of sqrt(D) and solutions of x^2 - D y^2 = 1
    Pell {
        /// Non-square discriminant D >= 2
        #[arg(long, value_parser = parse_bigint)]
        d: BigInt,
        /// Number of solutions to print
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..))]
        count: u64,
    },
    /// Report whether a value is k-gonal, centered k-gonal, or both
    Invert {
        /// Polygon order (k >= 3)
        #[arg(long)]
        k: u32,
        /// Value to test (>= 1)
        #[arg(long, value_parser = parse_bigint)]
        value: BigInt,
    },
    /// Generate (m, value) pairs through the norm-2 route (k a perfect
    /// square >= 4) and check them against the direct generator
    Case2 {
        /// Polygon order; must be a perfect square >= 4
        #[arg(long)]
        k: u32,
        /// Number of pairs to print
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..))]
        count: u64,
    },
}

fn parse_bigint(s: &str) -> Result<BigInt, String> {
    s.parse::<BigInt>()
        .map_err(|_| format!("not a decimal integer: {s}"))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(cmd: Cmd) -> Result<ExitCode, String> {
    match cmd {
        Cmd::Gen {
            k,
            count,
            start_index,
            format,
        } => {
            let records: Vec<_> = intersect::stream(k, start_index)
                .map_err(|e| e.to_string())?
                .take(count as usize)
                .collect();
            let stdout = io::stdout();
            output::write_records(format, &records, &mut stdout.lock())
                .map_err(|e| e.to_string())?;
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Verify { kmin, kmax, limit } => {
            if kmin < 3 {
                return Err("kmin must be at least 3".into());
            }
            if kmax < kmin {
                return Err("kmax must not be smaller than kmin".into());
            }
            if limit.sign() != Sign::Plus {
                return Err("limit must be at least 1".into());
            }
            let stdout = io::stdout();
            let mut out = stdout.lock();
            let mut all_agree = true;
            for k in kmin..=kmax {
                let params = PolygonParams::new(k).map_err(|e| e.to_string())?;
                let report = oracle::compare(&params, &limit);
                if report.closed_form_agreement {
                    writeln!(
                        out,
                        "k={k}: {} common values <= {limit}, closed form agrees",
                        report.matches.len()
                    )
                    .map_err(|e| e.to_string())?;
                } else {
                    all_agree = false;
                    let div = report
                        .first_divergence
                        .expect("disagreement implies a first divergence");
                    writeln!(out, "k={k}: FIRST DIVERGENCE at index {}", div.index)
                        .map_err(|e| e.to_string())?;
                    writeln!(out, "  brute force: {}", output::describe(&div.expected))
                        .map_err(|e| e.to_string())?;
                    writeln!(out, "  closed form: {}", output::describe(&div.actual))
                        .map_err(|e| e.to_string())?;
                }
            }
            Ok(if all_agree {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
        Cmd::Pell { d, count } => {
            let cf = pell::cf_expand(&d).map_err(|e| e.to_string())?;
            let period: Vec<String> = cf.period.iter().map(|a| a.to_string()).collect();
            let stdout = io::stdout();
            let mut out = stdout.lock();
            writeln!(out, "sqrt({}) = [{}; {}]", d, cf.a0, period.join(", "))
                .map_err(|e| e.to_string())?;
            let solutions = pell::pell_solutions(&d, count as usize).map_err(|e| e.to_string())?;
            for (idx, sol) in solutions.iter().enumerate() {
                writeln!(out, "{}: ({}, {})", idx + 1, sol.x(), sol.y())
                    .map_err(|e| e.to_string())?;
            }
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Invert { k, value } => {
            let params = PolygonParams::new(k).map_err(|e| e.to_string())?;
            if value.sign() != Sign::Plus {
                return Err("value must be at least 1".into());
            }
            let polygonal = params.invert_polygonal(&value).map_err(|e| e.to_string())?;
            let centered = params.invert_centered(&value).map_err(|e| e.to_string())?;
            let report = InvertReport {
                both: polygonal.is_some() && centered.is_some(),
                polygonal_index: polygonal.map(|n| n.to_string()),
                centered_index: centered.map(|m| m.to_string()),
            };
            println!(
                "{}",
                serde_json::to_string(&report).map_err(|e| e.to_string())?
            );
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Case2 { k, count } => {
            let pairs = intersect::case2_sequence(k, count as usize).map_err(|e| e.to_string())?;
            let direct: Vec<(BigInt, BigInt)> = intersect::stream(k, 0)
                .map_err(|e| e.to_string())?
                .take(count as usize)
                .map(|r| (r.m, r.value))
                .collect();
            let stdout = io::stdout();
            let mut out = stdout.lock();
            for (m, value) in &pairs {
                writeln!(out, "({m}, {value})").map_err(|e| e.to_string())?;
            }
            if pairs == direct {
                writeln!(out, "agreement: PASS").map_err(|e| e.to_string())?;
                Ok(ExitCode::SUCCESS)
            } else {
                writeln!(out, "agreement: FAIL").map_err(|e| e.to_string())?;
                Ok(ExitCode::from(1))
            }
        }
    }
}

#[derive(Serialize)]
struct InvertReport {
    #[serde(skip_serializing_if = "Option::is_none")]
    polygonal_index: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    centered_index: Option<String>,
    both: bool,
}
