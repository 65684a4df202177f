//! Command-line front end: statistic tables, identity verification runs,
//! and asymptotic trend diagnostics.
//!
//! Exit codes: 0 when every check passes, 1 when a verification check
//! mismatches, 2 on usage or resource errors.

mod report;
mod tables;
mod verify;

use std::io::Write;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Parser, Subcommand};

use maex_core::asymptotics::{
    deviation_strictly_decreasing, difference_probes, eta_deviation_strictly_decreasing,
    eta_inversion_points, sigma_l_probes,
};
use maex_core::partitions::StatTable;
use maex_core::Error;
use num::ToPrimitive;

use report::{AsymptoticsReport, CheckEntry, EtaEntry, ExpectationEntry, ProbeEntry, RunReport};
use tables::StatKind;

/// Resource caps shared by the subcommands; see `--budget`.
pub struct Budgets {
    /// Largest n handled by enumeration-based oracles.
    pub brute: u32,
    /// Largest series truncation order.
    pub series: usize,
    /// Largest |n| for Pell searches and factorization.
    pub pell: i64,
}

impl Budgets {
    fn parse(args: &[String], default_series: usize) -> Result<Budgets, String> {
        let mut budgets = Budgets {
            brute: maex_core::partitions::DEFAULT_BRUTE_FORCE_BUDGET,
            series: default_series,
            pell: maex_core::pell::DEFAULT_PELL_BUDGET,
        };
        for arg in args {
            let Some((key, value)) = arg.split_once('=') else {
                return Err(format!(
                    "budget '{}' is not of the form key=value (keys: brute, series, pell)",
                    arg
                ));
            };
            match key {
                "brute" => {
                    budgets.brute = value
                        .parse()
                        .map_err(|_| format!("invalid brute budget '{}'", value))?
                }
                "series" => {
                    budgets.series = value
                        .parse()
                        .map_err(|_| format!("invalid series budget '{}'", value))?
                }
                "pell" => {
                    budgets.pell = value
                        .parse()
                        .map_err(|_| format!("invalid pell budget '{}'", value))?
                }
                other => return Err(format!("unknown budget key '{}'", other)),
            }
        }
        Ok(budgets)
    }
}

#[derive(Parser)]
#[command(
    name = "maex",
    version,
    about = "Exact tables and identity verification for partition maximal-excludant statistics"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Tabulate a statistic as CSV or JSON.
    Table {
        /// One of: p, sigma-L, sigma-mex, sigma-maex, diff, expectation, T, S-star
        #[arg(long)]
        stat: String,
        /// Rows run over n = 1..=max-n (for T: the window n = 24m+1, |m| <= max-n).
        #[arg(long = "max-n")]
        max_n: u32,
        /// csv or json
        #[arg(long, default_value = "csv")]
        format: String,
        /// Write the table to a file instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Resource caps as key=value (brute=60, series=500, pell=4801); repeatable.
        #[arg(long)]
        budget: Vec<String>,
    },
    /// Run one identity verification and report JSON to stdout.
    Verify {
        /// One of: thm1.1-all, eq1.1, eq1.6, cohen, prop2.1, theta,
        /// roots-of-unity, zagier-t, thm2.2, partial-sum, euler-sum,
        /// bijection, monotonicity, pell-agreement
        #[arg(long)]
        identity: String,
        /// Truncation order / bound; each identity has an acceptance-grade default.
        #[arg(long)]
        order: Option<usize>,
        /// Resource caps as key=value (brute=60, series=500, pell=4801); repeatable.
        #[arg(long)]
        budget: Vec<String>,
    },
    /// Exact-vs-predicted growth diagnostics at probe points.
    Asymptotics {
        /// Comma-separated probe points for the statistic ratios.
        #[arg(long, default_value = "500,1000,2000")]
        probe: String,
        /// Comma-separated t-grid for the eta-inversion comparison.
        #[arg(long = "t-grid", default_value = "0.5,0.3,0.2,0.1,0.05")]
        t_grid: String,
        /// Resource caps as key=value; the series budget defaults to the largest probe.
        #[arg(long)]
        budget: Vec<String>,
    },
}

fn main() {
    let cli = Cli::parse();
    let code = match cli.command {
        Command::Table {
            stat,
            max_n,
            format,
            out,
            budget,
        } => run_table(&stat, max_n, &format, out.as_deref(), &budget),
        Command::Verify {
            identity,
            order,
            budget,
        } => run_verify(&identity, order, &budget),
        Command::Asymptotics {
            probe,
            t_grid,
            budget,
        } => run_asymptotics(&probe, &t_grid, &budget),
    };
    std::process::exit(code);
}

fn usage_error(message: &str) -> i32 {
    eprintln!("error: {}", message);
    2
}

fn run_table(
    stat_name: &str,
    max_n: u32,
    format: &str,
    out: Option<&std::path::Path>,
    budget_args: &[String],
) -> i32 {
    let Some(stat) = StatKind::parse(stat_name) else {
        return usage_error(&format!(
            "unknown stat '{}'; expected one of {}",
            stat_name,
            StatKind::NAMES.join(", ")
        ));
    };
    if max_n == 0 {
        return usage_error("--max-n must be at least 1");
    }
    let budgets = match Budgets::parse(budget_args, 500) {
        Ok(b) => b,
        Err(msg) => return usage_error(&msg),
    };
    let rows = match tables::build_table(stat, max_n, &budgets) {
        Ok(rows) => rows,
        Err(e) => return usage_error(&e.to_string()),
    };
    let payload = match format {
        "csv" => tables::render_csv(stat, &rows),
        "json" => tables::render_json(stat, max_n, &rows),
        other => return usage_error(&format!("unknown format '{}'; expected csv or json", other)),
    };
    match out {
        None => {
            print!("{}", payload);
            0
        }
        Some(path) => {
            match std::fs::File::create(path).and_then(|mut f| f.write_all(payload.as_bytes())) {
                Ok(()) => 0,
                Err(e) => usage_error(&format!("cannot write {}: {}", path.display(), e)),
            }
        }
    }
}

fn run_verify(identity: &str, order: Option<usize>, budget_args: &[String]) -> i32 {
    if !verify::IDENTITIES.contains(&identity) {
        return usage_error(&format!(
            "unknown identity '{}'; expected one of {}",
            identity,
            verify::IDENTITIES.join(", ")
        ));
    }
    let budgets = match Budgets::parse(budget_args, 500) {
        Ok(b) => b,
        Err(msg) => return usage_error(&msg),
    };
    let effective_order = order.unwrap_or_else(|| verify::default_order(identity));
    let started = Instant::now();
    let result = verify::run_identity(identity, order, &budgets);
    let timing_ms = started.elapsed().as_millis();
    let parameters = serde_json::json!({
        "identity": identity,
        "order": effective_order,
        "budget": {
            "brute": budgets.brute,
            "series": budgets.series,
            "pell": budgets.pell,
        },
    });
    let (report, code) = match result {
        Ok(outcomes) => {
            let checks: Vec<CheckEntry> = outcomes.iter().map(CheckEntry::from).collect();
            let all_passed = outcomes.iter().all(|o| o.passed());
            (
                RunReport {
                    command: "verify".to_string(),
                    parameters,
                    status: if all_passed { "pass" } else { "fail" }.to_string(),
                    checks,
                    error: None,
                    timing_ms,
                },
                if all_passed { 0 } else { 1 },
            )
        }
        Err(e) => (
            RunReport {
                command: "verify".to_string(),
                parameters,
                status: "error".to_string(),
                checks: Vec::new(),
                error: Some(e.to_string()),
                timing_ms,
            },
            2,
        ),
    };
    println!(
        "{}",
        serde_json::to_string_pretty(&report).expect("report serialization")
    );
    code
}

fn parse_list<T: std::str::FromStr>(input: &str, what: &str) -> Result<Vec<T>, String> {
    let values: Result<Vec<T>, _> = input
        .split(',')
        .filter(|s| !s.is_empty())
        .map(|s| s.trim().parse::<T>())
        .collect();
    match values {
        Ok(v) if !v.is_empty() => Ok(v),
        _ => Err(format!("cannot parse {} list '{}'", what, input)),
    }
}

fn run_asymptotics(probe: &str, t_grid: &str, budget_args: &[String]) -> i32 {
    let probes: Vec<u64> = match parse_list(probe, "probe") {
        Ok(p) => p,
        Err(msg) => return usage_error(&msg),
    };
    let ts: Vec<f64> = match parse_list(t_grid, "t-grid") {
        Ok(t) => t,
        Err(msg) => return usage_error(&msg),
    };
    let max_probe = *probes.iter().max().expect("nonempty probes") as usize;
    let budgets = match Budgets::parse(budget_args, max_probe) {
        Ok(b) => b,
        Err(msg) => return usage_error(&msg),
    };
    if max_probe > budgets.series {
        return usage_error(&format!(
            "largest probe {} exceeds series budget {}",
            max_probe, budgets.series
        ));
    }
    let started = Instant::now();
    let outcome = (|| -> Result<AsymptoticsReport, Error> {
        let table = StatTable::compute(max_probe)?;
        let sigma_l = sigma_l_probes(&table, &probes)?;
        let difference = difference_probes(&table, &probes)?;
        let eta = eta_inversion_points(&ts)?;
        let expectation = probes
            .iter()
            .map(|&n| {
                let exact = table.expectation(n as usize);
                ExpectationEntry {
                    n,
                    exact: format!("{}/{}", exact.numer(), exact.denom()),
                    value: exact.to_f64().unwrap_or(f64::NAN),
                }
            })
            .collect();
        Ok(AsymptoticsReport {
            command: "asymptotics".to_string(),
            probes: probes.clone(),
            sigma_l_deviation_decreasing: deviation_strictly_decreasing(&sigma_l),
            sigma_l: sigma_l
                .iter()
                .map(|p| ProbeEntry {
                    n: p.n,
                    exact: p.exact.numer().to_string(),
                    predicted: p.predicted,
                    ratio: p.ratio,
                })
                .collect(),
            difference_deviation_decreasing: deviation_strictly_decreasing(&difference),
            difference: difference
                .iter()
                .map(|p| ProbeEntry {
                    n: p.n,
                    exact: p.exact.numer().to_string(),
                    predicted: p.predicted,
                    ratio: p.ratio,
                })
                .collect(),
            expectation,
            t_grid: ts.clone(),
            eta_deviation_decreasing: eta_deviation_strictly_decreasing(&eta),
            eta: eta
                .iter()
                .map(|p| EtaEntry {
                    t: p.t,
                    product: p.product,
                    predicted: p.predicted,
                    ratio: p.ratio,
                })
                .collect(),
            timing_ms: 0,
        })
    })();
    match outcome {
        Ok(mut report) => {
            report.timing_ms = started.elapsed().as_millis();
            let trend_ok = report.sigma_l_deviation_decreasing
                && report.difference_deviation_decreasing
                && report.eta_deviation_decreasing;
            println!(
                "{}",
                serde_json::to_string_pretty(&report).expect("report serialization")
            );
            if trend_ok {
                0
            } else {
                1
            }
        }
        Err(e) => usage_error(&e.to_string()),
    }
}
