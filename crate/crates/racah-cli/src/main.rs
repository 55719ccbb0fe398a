//! `racah` — batch verification of the centralizer algebra.
//!
//! Subcommands:
//! - `verify`: run the relation catalogue in `U(sl2)^⊗n`, streaming one JSON
//!   line per instance.
//! - `series`: compute the Hilbert-Poincaré series by three independent
//!   routes and report agreement.
//! - `pbw`: check basis counts against the series and certify linear
//!   independence by exact rank.
//!
//! Exit codes: 0 = all checks pass, 1 = a mathematical check failed,
//! 2 = usage or resource problem.
//!
//! With `--format json` the stdout payload is byte-identical across runs of
//! the same config: timing lives in a metadata object on stderr.

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde_json::json;

use racah_core::pbw::{count_by_degree, independence_rank, verify_counts, DEFAULT_CELL_BUDGET};
use racah_core::racah::{
    relation_catalogue, relation_suite, suite_summary, RelationTag,
};
use racah_core::series::{
    closed_form_series, constant_term_series, multigraded_series, tilde_formula_series,
    TruncatedSeries,
};
use racah_core::Error;

#[derive(Parser)]
#[command(name = "racah", version, about = "Exact checks for the diagonal sl2 centralizer")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Verify relation instances in U(sl2)^⊗n
    Verify(VerifyArgs),
    /// Hilbert-Poincaré series by three routes, with agreement verdict
    Series(SeriesArgs),
    /// PBW basis counts and exact independence certificates
    Pbw(PbwArgs),
}

#[derive(Args)]
struct VerifyArgs {
    /// Number of tensor factors (>= 2)
    #[arg(long)]
    n: usize,

    /// Restrict to specific relation tags (repeatable)
    #[arg(long = "tag", value_name = "TAG")]
    tags: Vec<String>,

    /// Restrict to one comma-separated index tuple, e.g. `1,2,3`
    #[arg(long, value_name = "TUPLE")]
    indices: Option<String>,

    /// Emit the instance catalogue without running it
    #[arg(long)]
    seed_manifest: bool,

    #[arg(long, value_enum, default_value = "text")]
    format: Format,

    /// Worker threads (0 = all cores); 1 gives a strictly sequential run
    #[arg(long, default_value_t = 0)]
    jobs: usize,

    /// Maximum number of instances to run
    #[arg(long, default_value_t = 1_000_000)]
    budget: u64,
}

#[derive(Args)]
struct SeriesArgs {
    /// Number of tensor factors (>= 2)
    #[arg(long)]
    n: usize,

    /// Truncation degree
    #[arg(long, default_value_t = 20)]
    k: usize,

    /// Also check the multigraded specialization
    #[arg(long)]
    multigraded: bool,

    /// Per-variable bound for the multigraded check
    #[arg(long, default_value_t = 6)]
    bound: u32,

    #[arg(long, value_enum, default_value = "text")]
    format: Format,

    /// Worker threads (0 = all cores)
    #[arg(long, default_value_t = 0)]
    jobs: usize,
}

#[derive(Args)]
struct PbwArgs {
    /// Number of tensor factors (2, 3 or 4)
    #[arg(long)]
    n: usize,

    /// Check counts and ranks up to this degree
    #[arg(long)]
    max_degree: u32,

    #[arg(long, value_enum, default_value = "text")]
    format: Format,

    /// Worker threads (0 = all cores)
    #[arg(long, default_value_t = 0)]
    jobs: usize,

    /// Cell budget for rank matrices (rows x ambient dimension)
    #[arg(long, default_value_t = DEFAULT_CELL_BUDGET)]
    budget: u64,
}

/// 0 = pass, 1 = math failure, 2 = usage/resource.
fn error_exit(err: &Error) -> u8 {
    eprintln!("error: {err}");
    2
}

fn configure_threads(jobs: usize) {
    if jobs > 0 {
        // ignore failure if a pool was already installed (tests)
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global();
    }
}

fn coeff_strings(series: &TruncatedSeries) -> Vec<String> {
    series.coeffs().iter().map(BigInt::to_string).collect()
}

fn run_verify(args: &VerifyArgs) -> u8 {
    if args.n < 2 {
        eprintln!("error: verify needs --n >= 2, got {}", args.n);
        return 2;
    }
    configure_threads(args.jobs);

    let mut tags: Vec<RelationTag> = Vec::new();
    for raw in &args.tags {
        match raw.parse::<RelationTag>() {
            Ok(tag) => tags.push(tag),
            Err(err) => return error_exit(&err),
        }
    }
    let tag_filter = if tags.is_empty() { None } else { Some(tags.as_slice()) };

    let index_filter: Option<Vec<usize>> = match &args.indices {
        None => None,
        Some(raw) => match raw
            .split(',')
            .map(|part| part.trim().parse::<usize>())
            .collect::<std::result::Result<Vec<_>, _>>()
        {
            Ok(tuple) => Some(tuple),
            Err(_) => {
                eprintln!("error: --indices expects a comma-separated tuple, got {raw:?}");
                return 2;
            }
        },
    };

    if args.seed_manifest {
        let catalogue = relation_catalogue(args.n);
        for id in catalogue
            .iter()
            .filter(|id| tag_filter.is_none_or(|tags| tags.contains(&id.tag)))
            .filter(|id| index_filter.as_ref().is_none_or(|ix| &id.indices == ix))
        {
            println!(
                "{}",
                json!({"tag": id.tag.as_str(), "indices": id.indices, "n": args.n})
            );
        }
        return 0;
    }

    let start = std::time::Instant::now();
    let mut reports = match relation_suite(args.n, tag_filter, Some(args.budget as usize)) {
        Ok(reports) => reports,
        Err(err) => return error_exit(&err),
    };
    if let Some(tuple) = &index_filter {
        reports.retain(|r| &r.indices == tuple);
    }
    let summary = suite_summary(args.n, &reports);

    match args.format {
        Format::Json => {
            for report in &reports {
                // deterministic payload: timing is kept out of stdout
                println!(
                    "{}",
                    json!({
                        "tag": report.tag,
                        "indices": report.indices,
                        "n": report.n,
                        "residual_zero": report.residual_zero,
                        "residual_terms": report.residual_terms,
                    })
                );
            }
            println!("{}", json!({ "summary": summary }));
            eprintln!(
                "{}",
                json!({"meta": {"millis_total": start.elapsed().as_millis() as u64}})
            );
        }
        Format::Text => {
            for report in &reports {
                println!(
                    "{:<12} {:<18} n={} residual_zero={} terms={} millis={}",
                    report.tag,
                    format!("{:?}", report.indices),
                    report.n,
                    report.residual_zero,
                    report.residual_terms,
                    report.millis
                );
            }
            println!(
                "suite n={}: {} instances, {} passed, {} failed ({} ms)",
                summary.n,
                summary.total,
                summary.passed,
                summary.failed,
                start.elapsed().as_millis()
            );
            for failed in &summary.failed_instances {
                println!("FAILED: {failed}");
            }
        }
    }
    if summary.failed > 0 {
        1
    } else {
        0
    }
}

fn run_series(args: &SeriesArgs) -> u8 {
    if args.n < 2 {
        eprintln!("error: series needs --n >= 2, got {}", args.n);
        return 2;
    }
    configure_threads(args.jobs);
    let start = std::time::Instant::now();

    let closed = match closed_form_series(args.n, args.k) {
        Ok(s) => s,
        Err(err) => return error_exit(&err),
    };
    let constant = match constant_term_series(args.n, args.k) {
        Ok(s) => s,
        Err(err) => return error_exit(&err),
    };
    let tilde = match tilde_formula_series(args.n, args.k) {
        Ok(s) => s,
        Err(err) => return error_exit(&err),
    };
    let agree = closed == constant && closed == tilde;

    let multigraded_ok = if args.multigraded {
        let bounds = vec![args.bound; args.n];
        match multigraded_series(args.n, &bounds) {
            Ok(multi) => {
                let specialized = multi.specialize();
                let reference = match tilde_formula_series(args.n, args.bound as usize) {
                    Ok(s) => s,
                    Err(err) => return error_exit(&err),
                };
                Some(specialized == reference)
            }
            Err(err) => return error_exit(&err),
        }
    } else {
        None
    };

    match args.format {
        Format::Json => {
            let mut payload = json!({
                "n": args.n,
                "K": args.k,
                "closed_form": coeff_strings(&closed),
                "constant_term": coeff_strings(&constant),
                "tilde_formula": coeff_strings(&tilde),
                "agree": agree,
            });
            if let Some(ok) = multigraded_ok {
                payload["multigraded_bound"] = json!(args.bound);
                payload["specialization_matches"] = json!(ok);
            }
            println!("{payload}");
            eprintln!(
                "{}",
                json!({"meta": {"millis_total": start.elapsed().as_millis() as u64}})
            );
        }
        Format::Text => {
            println!("Hilbert-Poincaré series of Z_{}(sl2), degree <= {}", args.n, args.k);
            println!("{:<8} {:>16} {:>16} {:>16}", "degree", "closed_form", "constant_term", "tilde_formula");
            for deg in 0..=args.k {
                println!(
                    "{:<8} {:>16} {:>16} {:>16}",
                    deg,
                    closed.coeff(deg),
                    constant.coeff(deg),
                    tilde.coeff(deg)
                );
            }
            println!("verdict: {}", if agree { "agree" } else { "DISAGREE" });
            if let Some(ok) = multigraded_ok {
                println!(
                    "multigraded specialization (bound {}): {}",
                    args.bound,
                    if ok { "matches" } else { "MISMATCH" }
                );
            }
            println!("elapsed: {} ms", start.elapsed().as_millis());
        }
    }

    if agree && multigraded_ok.unwrap_or(true) {
        0
    } else {
        1
    }
}

fn run_pbw(args: &PbwArgs) -> u8 {
    configure_threads(args.jobs);
    let start = std::time::Instant::now();

    let counts = match count_by_degree(args.n, args.max_degree) {
        Ok(counts) => counts,
        Err(err) => return error_exit(&err),
    };
    let counts_match = match verify_counts(args.n, args.max_degree) {
        Ok(ok) => ok,
        Err(err) => return error_exit(&err),
    };
    let series = match closed_form_series(args.n, args.max_degree as usize) {
        Ok(series) => series,
        Err(err) => return error_exit(&err),
    };

    let mut certificates = Vec::new();
    for degree in 0..=args.max_degree {
        match independence_rank(args.n, degree, Some(args.budget)) {
            Ok(cert) => certificates.push(cert),
            Err(Error::BudgetExceeded { needed, budget }) => {
                eprintln!(
                    "error: rank matrix at degree {degree} needs {needed} cells, budget {budget}"
                );
                return 2;
            }
            Err(err) => return error_exit(&err),
        }
    }
    let all_pass = counts_match && certificates.iter().all(|c| c.pass);

    match args.format {
        Format::Json => {
            println!(
                "{}",
                json!({
                    "n": args.n,
                    "max_degree": args.max_degree,
                    "counts": counts,
                    "series": coeff_strings(&series),
                    "counts_match": counts_match,
                })
            );
            for cert in &certificates {
                println!("{}", serde_json::to_string(cert).expect("serializable"));
            }
            println!("{}", json!({"summary": {"all_pass": all_pass}}));
            eprintln!(
                "{}",
                json!({"meta": {"millis_total": start.elapsed().as_millis() as u64}})
            );
        }
        Format::Text => {
            println!(
                "PBW certification n={} up to degree {}",
                args.n, args.max_degree
            );
            println!(
                "counts:  {:?}\nseries:  {:?}\ncounts match series: {counts_match}",
                counts,
                series.coeffs().iter().map(BigInt::to_string).collect::<Vec<_>>()
            );
            for cert in &certificates {
                println!(
                    "degree {:>2}: count={:<5} rank={:<5} ambient_dim={:<8} pass={}",
                    cert.degree, cert.count, cert.rank, cert.ambient_dim, cert.pass
                );
            }
            println!(
                "result: {} ({} ms)",
                if all_pass { "all pass" } else { "FAILED" },
                start.elapsed().as_millis()
            );
        }
    }
    if all_pass {
        0
    } else {
        1
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = match &cli.command {
        Command::Verify(args) => run_verify(args),
        Command::Series(args) => run_series(args),
        Command::Pbw(args) => run_pbw(args),
    };
    ExitCode::from(code)
}
