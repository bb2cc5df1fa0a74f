//! Command-line interface: parses ideals in the `x1^2, x1*x2` grammar and
//! exposes the regularity, closure, structure, and verification machinery.
//!
//! Exit codes: 0 on success, 1 when a verification run finds failures, 2 on
//! usage or input errors.

use std::fs::File;
use std::io::BufWriter;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use monoreg::harness::{run_all, VerificationReport, VerifyConfig};
use monoreg::structure::{
    betti_splitting_verify, check_condition_double_star, check_condition_star, layer_decompose,
    linear_quotients_order, polarize,
};
use monoreg::{
    delta, format_ideal, format_monomial, integral_closure, multigraded_betti, parse_ideal,
    regularity_with, BettiOptions, MonomialIdeal,
};

#[derive(Parser)]
#[command(
    name = "monoreg",
    about = "Regularity, integral closures, and linear-quotients structure of monomial ideals",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Castelnuovo-Mumford regularity of the ideal
    Reg {
        /// Generators, e.g. "x1^2, x1*x2, x2^2"
        ideal: String,
        /// Ambient number of variables
        #[arg(long)]
        n: usize,
        /// Coefficient field characteristic (0 for the rationals)
        #[arg(long = "char", default_value_t = 2)]
        characteristic: u64,
    },
    /// Graded Betti table of the ideal
    Betti {
        ideal: String,
        #[arg(long)]
        n: usize,
        #[arg(long = "char", default_value_t = 2)]
        characteristic: u64,
        /// Also list the nonzero multigraded entries
        #[arg(long)]
        multigraded: bool,
    },
    /// Integral closure of the ideal
    Closure {
        ideal: String,
        #[arg(long)]
        n: usize,
    },
    /// Maximal coordinate sum over the vertices of the Newton polyhedron
    Delta {
        ideal: String,
        #[arg(long)]
        n: usize,
    },
    /// A linear-quotients ordering with its colon witnesses, or "none"
    Lq {
        ideal: String,
        #[arg(long)]
        n: usize,
    },
    /// Squarefree polarization of the ideal
    Polarize {
        ideal: String,
        #[arg(long)]
        n: usize,
    },
    /// Two-layer structural conditions along the last variable
    CheckStar {
        ideal: String,
        #[arg(long)]
        n: usize,
    },
    /// Multi-layer structural conditions along the last variable
    CheckDstar {
        ideal: String,
        #[arg(long)]
        n: usize,
    },
    /// Betti-splitting test for the partition by divisibility by one variable
    Split {
        ideal: String,
        #[arg(long)]
        n: usize,
        /// 1-based index of the splitting variable
        #[arg(long)]
        var: usize,
        #[arg(long = "char", default_value_t = 2)]
        characteristic: u64,
    },
    /// Run the verification suite and report per-check results
    Verify {
        /// Ambient number of variables (2 or 3)
        #[arg(long)]
        n: usize,
        /// Largest generator degree enumerated
        #[arg(long)]
        dmax: u32,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Write the reports to this file as JSON
        #[arg(long)]
        json: Option<PathBuf>,
        /// Random two-variable ideals added to the closure comparison
        #[arg(long, default_value_t = 10_000)]
        closure_samples: u64,
        /// Random ideals for the Betti-table cross-check
        #[arg(long, default_value_t = 1000)]
        betti_samples: u64,
        /// Random ideal pairs for the exact-sequence bounds
        #[arg(long, default_value_t = 500)]
        pair_samples: u64,
        /// Random ideals per auxiliary identity check
        #[arg(long, default_value_t = 300)]
        aux_samples: u64,
    },
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> monoreg::Result<ExitCode> {
    match cli.command {
        Command::Reg { ideal, n, characteristic } => {
            let ideal = parse_ideal(&ideal, n)?;
            let opts = BettiOptions { characteristic, ..BettiOptions::default() };
            println!("{}", regularity_with(&ideal, &opts)?);
        }
        Command::Betti { ideal, n, characteristic, multigraded } => {
            let ideal = parse_ideal(&ideal, n)?;
            let opts = BettiOptions { characteristic, ..BettiOptions::default() };
            let table = multigraded_betti(&ideal, &opts)?;
            print!("{table}");
            if multigraded {
                for ((i, exps), count) in &table.multigraded {
                    let degree = monoreg::Monomial::new(exps.clone());
                    println!("b_{i}({}) = {count}", format_monomial(&degree));
                }
            }
        }
        Command::Closure { ideal, n } => {
            let ideal = parse_ideal(&ideal, n)?;
            println!("{}", format_ideal(&integral_closure(&ideal)?));
        }
        Command::Delta { ideal, n } => {
            let ideal = parse_ideal(&ideal, n)?;
            println!("{}", delta(&ideal)?);
        }
        Command::Lq { ideal, n } => {
            let ideal = parse_ideal(&ideal, n)?;
            match linear_quotients_order(&ideal)? {
                None => println!("none"),
                Some(cert) => {
                    let gens = ideal.gens();
                    for (pos, &g) in cert.order.iter().enumerate() {
                        let name = format_monomial(&gens[g]);
                        if pos == 0 {
                            println!("{name}");
                        } else {
                            let vars: Vec<String> = cert.witnesses[pos - 1]
                                .iter()
                                .map(|&v| format!("x{}", v + 1))
                                .collect();
                            println!("{name} : ({})", vars.join(", "));
                        }
                    }
                }
            }
        }
        Command::Polarize { ideal, n } => {
            let ideal = parse_ideal(&ideal, n)?;
            let (image, _) = polarize(&ideal)?;
            println!("{}", format_ideal(&image));
        }
        Command::CheckStar { ideal, n } => {
            let ideal = parse_ideal(&ideal, n)?;
            let report = check_condition_star(&layer_decompose(&ideal, 2)?)?;
            println!("consecutive axis exponents: {}", report.consecutive_axis_exponents);
            println!("first layer minimal regularity: {}", report.first_layer_minimal_regularity);
            println!("shared inner degree: {}", report.shared_inner_degree);
            println!("gap matching: {}", report.gap_matching);
            println!("satisfied: {}", report.satisfied());
        }
        Command::CheckDstar { ideal, n } => {
            let ideal = parse_ideal(&ideal, n)?;
            let report = check_condition_double_star(&ideal)?;
            println!("prefix regularities: {}", report.prefix_regularities);
            println!("adjacent shared degree: {}", report.adjacent_shared_degree);
            println!("consecutive axis exponents: {}", report.consecutive_axis_exponents);
            for gaps in &report.gap_reports {
                println!(
                    "axis x{} gaps: matching={}, domination={}",
                    gaps.axis + 1,
                    gaps.matching,
                    gaps.tail
                );
            }
            println!("satisfied: {}", report.satisfied());
        }
        Command::Split { ideal, n, var, characteristic } => {
            let parsed = parse_ideal(&ideal, n)?;
            if var == 0 || var > n {
                return Err(monoreg::Error::VariableOutOfRange { index: var, ambient: n });
            }
            let (with, without): (Vec<_>, Vec<_>) =
                parsed.gens().iter().cloned().partition(|g| g.deg(var - 1) > 0);
            if with.is_empty() || without.is_empty() {
                return Err(monoreg::Error::InvalidPartition {
                    reason: "every generator falls on one side of the variable split",
                });
            }
            let left = MonomialIdeal::minimalize(n, with)?;
            let right = MonomialIdeal::minimalize(n, without)?;
            let split = betti_splitting_verify(&parsed, &left, &right, characteristic)?;
            println!("left: {}", format_ideal(&left));
            println!("right: {}", format_ideal(&right));
            println!("splitting: {split}");
        }
        Command::Verify {
            n,
            dmax,
            seed,
            json,
            closure_samples,
            betti_samples,
            pair_samples,
            aux_samples,
        } => {
            if !matches!(n, 2 | 3) {
                return Err(monoreg::Error::WrongAmbient {
                    op: "verify",
                    required: 3,
                    found: n,
                });
            }
            let config = VerifyConfig {
                n,
                d_max: dmax,
                seed,
                closure_samples,
                betti_samples,
                pair_samples,
                aux_samples,
                ..VerifyConfig::default()
            };
            let reports = run_all(&config);
            let failed = print_reports(&reports);
            if let Some(path) = json {
                match File::create(&path) {
                    Ok(file) => serde_json::to_writer_pretty(BufWriter::new(file), &reports)
                        .expect("reports serialize"),
                    Err(e) => {
                        eprintln!("error: cannot write {}: {e}", path.display());
                        return Ok(ExitCode::from(2));
                    }
                }
            }
            if failed {
                return Ok(ExitCode::from(1));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

/// Prints one line per report plus a sample of any failures; returns whether
/// any check failed.
fn print_reports(reports: &[VerificationReport]) -> bool {
    let mut failed = false;
    for report in reports {
        if report.passed() {
            println!(
                "{}: pass ({} instances, {:.2}s)",
                report.check_name, report.instances_tested, report.wall_time_s
            );
        } else {
            failed = true;
            println!(
                "{}: FAIL ({} failures in {} instances, {:.2}s)",
                report.check_name,
                report.failures.len(),
                report.instances_tested,
                report.wall_time_s
            );
            for failure in report.failures.iter().take(5) {
                println!(
                    "  {} [n={}]: expected {}; observed {}",
                    failure.ideal.text, failure.ideal.n, failure.expected, failure.observed
                );
            }
            if report.failures.len() > 5 {
                println!("  ... and {} more", report.failures.len() - 5);
            }
        }
    }
    failed
}
