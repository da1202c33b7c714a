//! `motivic`: exact zeta-function and power-structure computations over the
//! Grothendieck ring of varieties, with the full verification suite attached.
//!
//! Exit codes: 0 = success / all checks passed, 1 = a verified identity
//! failed, 2 = usage or parse errors. Set `MOTIVIC_COLOR=1` for ANSI-colored
//! PASS/FAIL markers (plain by default so output stays byte-stable).

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num_traits::Signed;

use motivic::oracle::{
    brute_force_cycles, closed_points, counts_from_class, cycles_from_closed_points,
    weil_coefficient, Space,
};
use motivic::parse::{parse_class, parse_series};
use motivic::power::power;
use motivic::report::VerificationReport;
use motivic::series::TruncatedSeries;
use motivic::suites;
use motivic::varieties::{cell_min_level, match_strata, schubert_count, stratum_min_level};
use motivic::zeta::{kapranov_zeta, symmetric_power_class, verify_theorem1};

#[derive(Parser)]
#[command(
    name = "motivic",
    version,
    about = "Exact motivic zeta and power-structure computations with finite-field oracles"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the zeta series of a class: (1 + T + T^2 + ...)^class
    Zeta {
        /// Class expression in L, e.g. "L", "1+L", "(L^4-1)/(L^2-1)"
        #[arg(long)]
        class: String,
        /// Truncation order of the printed series
        #[arg(long, default_value_t = 8)]
        order: usize,
        #[arg(long)]
        json: bool,
    },
    /// Raise a series with constant term 1 to a class exponent
    Power {
        /// Series expression in T (and L), e.g. "1+T" or "1 + L*T + O(T^4)"
        #[arg(long)]
        series: String,
        /// Exponent class expression, e.g. "2", "L", "1+L"
        #[arg(long)]
        exponent: String,
        /// Truncation order (an O(T^k) marker in the series takes precedence)
        #[arg(long)]
        order: Option<usize>,
        #[arg(long)]
        json: bool,
    },
    /// Run identity verification sweeps; exit 1 when any identity fails
    Verify {
        #[arg(value_enum)]
        target: VerifyTarget,
        /// theorem1 only: check a single exponent n instead of the 0..=5 sweep
        #[arg(long)]
        n: Option<u32>,
        /// Series truncation order (defaults: theorem1 16, scaling 12,
        /// lemma 10, bcstar 8)
        #[arg(long)]
        order: Option<usize>,
        /// theorem2-finite only: largest m + N
        #[arg(long, default_value_t = 12)]
        max_sum: u32,
        /// combinatorics grid bounds (part of theorem2-finite and all)
        #[arg(long, default_value_t = 8)]
        max_m: u32,
        #[arg(long, default_value_t = 40)]
        max_dim: u32,
        /// Seed for the randomized suites
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Trial count for the randomized suites (defaults: lemma 200,
        /// properties 500)
        #[arg(long)]
        trials: Option<u32>,
        #[arg(long)]
        json: bool,
    },
    /// List strata signatures matched to Schubert partitions per dimension
    Strata {
        /// Symmetric-power degree m
        #[arg(long)]
        m: u32,
        /// Largest dimension to list
        #[arg(long)]
        max_dim: u32,
        #[arg(long)]
        json: bool,
    },
    /// Compare a motivic prediction with finite-field counts
    Oracle {
        /// Space specifier: A^n, P^N or Gr(m,N)
        #[arg(long)]
        space: String,
        /// Base field size (prime power)
        #[arg(long)]
        q: u32,
        /// Cycle degree
        #[arg(long)]
        m: u32,
        /// Also run the literal enumeration (A^1, A^2, P^1, P^2; q <= 3; m <= 3)
        #[arg(long)]
        brute_force: bool,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum VerifyTarget {
    Theorem1,
    Scaling,
    Lemma,
    Theorem2Finite,
    Properties,
    Bcstar,
    Oracle,
    All,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command) -> motivic::Result<ExitCode> {
    match command {
        Command::Zeta { class, order, json } => {
            let parsed = parse_class(&class)?;
            let series = kapranov_zeta(&parsed, order)?;
            if json {
                println!(
                    "{}",
                    serde_json::json!({
                        "class": parsed.to_string(),
                        "order": order,
                        "series": series.to_string(),
                        "coefficients": coefficient_strings(&series),
                    })
                );
            } else {
                println!("{series}");
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Power {
            series,
            exponent,
            order,
            json,
        } => {
            let base = parse_series(&series, order.or(Some(8)))?;
            let base = match order {
                Some(o) if o < base.order() => base.truncate(o),
                _ => base,
            };
            let exponent_class = parse_class(&exponent)?;
            let result = power(&base, &exponent_class)?;
            if json {
                println!(
                    "{}",
                    serde_json::json!({
                        "series": base.to_string(),
                        "exponent": exponent_class.to_string(),
                        "order": result.order(),
                        "result": result.to_string(),
                        "coefficients": coefficient_strings(&result),
                    })
                );
            } else {
                println!("{result}");
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify {
            target,
            n,
            order,
            max_sum,
            max_m,
            max_dim,
            seed,
            trials,
            json,
        } => {
            let reports = match target {
                VerifyTarget::Theorem1 => match n {
                    Some(n) => vec![verify_theorem1(n, order.unwrap_or(16))],
                    None => vec![suites::suite_theorem1(5, order.unwrap_or(16))],
                },
                VerifyTarget::Scaling => vec![suites::suite_scaling(order.unwrap_or(12))],
                VerifyTarget::Lemma => vec![suites::suite_lemma(
                    trials.unwrap_or(200),
                    seed,
                    order.unwrap_or(10),
                )],
                VerifyTarget::Theorem2Finite => vec![
                    suites::suite_theorem2_finite(max_sum),
                    suites::suite_theorem2_combinatorics(max_m, max_dim),
                ],
                VerifyTarget::Properties => vec![
                    suites::suite_properties(trials.unwrap_or(500), seed),
                    suites::suite_eq1_finite(100, seed),
                ],
                VerifyTarget::Bcstar => vec![suites::suite_bcstar(order.unwrap_or(8))],
                VerifyTarget::Oracle => vec![suites::suite_oracle_grid()],
                VerifyTarget::All => suites::run_acceptance(seed),
            };
            emit_reports(&reports, json);
            Ok(ExitCode::from(verification_exit(&reports)))
        }
        Command::Strata { m, max_dim, json } => {
            if m < 1 {
                return Err(motivic::Error::OutOfRange("m must be at least 1".into()));
            }
            let mut dims = Vec::new();
            for dim in 0..=max_dim {
                let pairs = match_strata(m, dim);
                dims.push((dim, schubert_count(m, dim), pairs));
            }
            if json {
                let rows: Vec<serde_json::Value> = dims
                    .iter()
                    .map(|(dim, cells, pairs)| {
                        serde_json::json!({
                            "dim": dim,
                            "strata": pairs.len(),
                            "cells": cells,
                            "pairs": pairs.iter().map(|(sig, partition)| {
                                serde_json::json!({
                                    "signature": sig.multiplicities(),
                                    "partition": partition.parts(),
                                    "stratum_min_level": stratum_min_level(sig),
                                    "cell_min_level": cell_min_level(partition, m),
                                })
                            }).collect::<Vec<_>>(),
                        })
                    })
                    .collect();
                println!(
                    "{}",
                    serde_json::json!({ "m": m, "max_dim": max_dim, "dims": rows })
                );
            } else {
                for (dim, cells, pairs) in &dims {
                    println!("dim {dim}: strata={} cells={cells}", pairs.len());
                    for (sig, partition) in pairs {
                        println!(
                            "  {sig} <-> {partition}  levels: stratum={} cell={}",
                            stratum_min_level(sig),
                            cell_min_level(partition, m)
                        );
                    }
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Oracle {
            space,
            q,
            m,
            brute_force,
            json,
        } => {
            let space = Space::parse(&space)?;
            let class = space.class();
            let motivic_value = symmetric_power_class(&class, m as usize)?.eval_at(i64::from(q))?;
            debug_assert!(motivic_value.is_integer() && !motivic_value.is_negative());
            let motivic_value = motivic_value.to_integer();
            let table = counts_from_class(&class, q, m as usize)?;
            let weil = weil_coefficient(&table, m as usize)?;
            let census = cycles_from_closed_points(&closed_points(&table)?, m as usize);
            let brute = if brute_force {
                Some(brute_force_cycles(space, q, m)?)
            } else {
                None
            };
            let mut pass = motivic_value == weil && weil == census;
            if let Some(b) = brute {
                pass &= census == b.into();
            }
            if json {
                println!(
                    "{}",
                    serde_json::json!({
                        "space": space.to_string(),
                        "class": class.to_string(),
                        "q": q,
                        "m": m,
                        "motivic": motivic_value.to_string(),
                        "weil": weil.to_string(),
                        "census": census.to_string(),
                        "brute_force": brute.map(|b| b.to_string()),
                        "pass": pass,
                    })
                );
            } else {
                println!("space: {space}   class: {class}   q: {q}   m: {m}");
                println!("motivic: {motivic_value}");
                println!("weil: {weil}");
                println!("census: {census}");
                if let Some(b) = brute {
                    println!("brute-force: {b}");
                }
                println!("{}", render_status(pass, "OK", "MISMATCH"));
            }
            Ok(if pass {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
    }
}

fn coefficient_strings(series: &TruncatedSeries) -> Vec<String> {
    series.coeffs().iter().map(ToString::to_string).collect()
}

/// 0 when every suite passed, 1 when any verified identity failed.
fn verification_exit(reports: &[VerificationReport]) -> u8 {
    u8::from(!reports.iter().all(VerificationReport::pass))
}

fn emit_reports(reports: &[VerificationReport], json: bool) {
    if json {
        let values: Vec<serde_json::Value> = reports
            .iter()
            .map(|r| serde_json::from_str(&r.to_json()).expect("report JSON"))
            .collect();
        println!("{}", serde_json::Value::Array(values));
        return;
    }
    for report in reports {
        let line = report.to_string();
        if color_enabled() {
            if let Some(rest) = line.strip_prefix("PASS") {
                println!("\x1b[32mPASS\x1b[0m{rest}");
                continue;
            }
            if let Some(rest) = line.strip_prefix("FAIL") {
                println!("\x1b[31mFAIL\x1b[0m{rest}");
                continue;
            }
        }
        println!("{line}");
    }
    let failed = reports.iter().filter(|r| !r.pass()).count();
    if failed == 0 {
        println!(
            "{}: {} suites",
            render_status(true, "all passed", ""),
            reports.len()
        );
    } else {
        println!(
            "{}: {failed} of {} suites",
            render_status(false, "", "failed"),
            reports.len()
        );
    }
}

fn color_enabled() -> bool {
    std::env::var("MOTIVIC_COLOR").is_ok_and(|v| v == "1")
}

fn render_status(pass: bool, ok: &str, bad: &str) -> String {
    let word = if pass { ok } else { bad };
    if color_enabled() {
        if pass {
            format!("\x1b[32m{word}\x1b[0m")
        } else {
            format!("\x1b[31m{word}\x1b[0m")
        }
    } else {
        word.to_string()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn failing_reports_map_to_exit_one() {
        let mut bad = VerificationReport::new("demo");
        bad.check_eq("identity", &1, &2);
        let good = VerificationReport::new("demo");
        assert_eq!(verification_exit(std::slice::from_ref(&good)), 0);
        assert_eq!(verification_exit(&[good, bad]), 1);
    }
}
