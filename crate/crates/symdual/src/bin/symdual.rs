//! Command-line interface: algebra ingestion, structural checks,
//! dualization, polarity reports, and table reproduction.
//!
//! Exit codes: 0 success, 1 check failure, 2 input error, 3 inconclusive.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use symdual::actions::{dual_cohomogeneity_check, is_polar_action, PolarVerdict, PolarityReport};
use symdual::cartan::cartan_from_star;
use symdual::catalog::{all_keys, entry, example_7_1_table};
use symdual::duality::dualize_algebra;
use symdual::liealg::{reductivity_report, MatrixLieAlgebra, Subspace};
use symdual::schema::{real_matrix_to_json, AlgebraJson, DualizeJson, SubspaceJson};
use symdual::suite::{run_suite, OutputFormat, RunConfig};
use symdual::Tolerances;

const EXIT_CHECK_FAILED: u8 = 1;
const EXIT_INPUT_ERROR: u8 = 2;
const EXIT_INCONCLUSIVE: u8 = 3;

#[derive(Parser)]
#[command(name = "symdual", version, about = "Numerical duality toolkit for symmetric spaces")]
struct Cli {
    #[command(flatten)]
    common: Common,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Common {
    /// Seed for all randomized sampling.
    #[arg(long, global = true, default_value_t = 1)]
    seed: u64,
    /// Numerical rank threshold.
    #[arg(long, global = true)]
    tol_rank: Option<f64>,
    /// Orthogonality threshold for polarity verification.
    #[arg(long, global = true)]
    tol_orth: Option<f64>,
    /// Output format: json, csv, or text.
    #[arg(long, global = true, default_value = "json")]
    format: String,
    /// Write the report to a file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Structural checks on a subalgebra: closure, semisimplicity,
    /// reductivity, canonical embedding.
    Check {
        /// Algebra JSON file.
        input: PathBuf,
        /// Subspace JSON file (coefficients over the algebra basis).
        sub: PathBuf,
    },
    /// Dualize an algebra (and optionally a theta-stable subalgebra).
    Dualize {
        input: PathBuf,
        sub: Option<PathBuf>,
    },
    /// Polarity report for a catalog entry, on both sides of the dual pair.
    Polar {
        /// Catalog entry key; list available keys with `--list`.
        key: Option<String>,
        #[arg(long)]
        list: bool,
    },
    /// Reproduce the odd Grassmannian intersection table for (m, p, q).
    #[command(name = "table7_1")]
    Table71 { m: usize, p: usize, q: usize },
    /// Run the full verification suite.
    Suite,
}

fn tolerances(common: &Common) -> Tolerances {
    let mut tol = Tolerances::default();
    if let Some(r) = common.tol_rank {
        tol.rank = r;
    }
    if let Some(o) = common.tol_orth {
        tol.orth = o;
    }
    tol
}

fn parse_format(s: &str) -> Result<OutputFormat, String> {
    match s {
        "json" => Ok(OutputFormat::Json),
        "csv" => Ok(OutputFormat::Csv),
        "text" => Ok(OutputFormat::Text),
        other => Err(format!("unknown format: {other}")),
    }
}

fn emit(common: &Common, payload: &str) -> Result<(), String> {
    match &common.out {
        Some(path) => fs::write(path, payload).map_err(|e| format!("write failed: {e}")),
        None => {
            println!("{payload}");
            Ok(())
        }
    }
}

fn load_algebra(path: &PathBuf, tol: &Tolerances) -> Result<MatrixLieAlgebra, String> {
    let text = fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    let json: AlgebraJson =
        serde_json::from_str(&text).map_err(|e| format!("{}: {e}", path.display()))?;
    json.to_algebra(tol).map_err(|e| e.to_string())
}

fn load_subspace(path: &PathBuf, parent_dim: usize) -> Result<Subspace, String> {
    let text = fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    let json: SubspaceJson =
        serde_json::from_str(&text).map_err(|e| format!("{}: {e}", path.display()))?;
    json.to_subspace(parent_dim).map_err(|e| e.to_string())
}

#[derive(Serialize)]
struct CheckReport {
    seed: u64,
    algebra: String,
    subalgebra_dim: usize,
    is_subalgebra: bool,
    closure_residual: f64,
    ambient_semisimple: bool,
    reductive: Option<bool>,
    killing_restriction_rank: usize,
    canonically_embedded: Option<bool>,
    embedding_defect: Option<usize>,
}

fn cmd_check(common: &Common, input: &PathBuf, sub: &PathBuf) -> Result<u8, String> {
    let tol = tolerances(common);
    let alg = load_algebra(input, &tol)?;
    let sub = load_subspace(sub, alg.dim())?;

    let closure_residual = alg.subalgebra_residual(&sub).map_err(|e| e.to_string())?;
    let is_subalgebra = closure_residual <= tol.close;
    let ambient_semisimple = alg.is_semisimple(tol.rank).map_err(|e| e.to_string())?;

    let (reductive, rank) = if ambient_semisimple {
        let rep = reductivity_report(&alg, &sub, true, tol.rank, tol.close)
            .map_err(|e| e.to_string())?;
        (rep.is_reductive(), rep.killing_restriction_rank)
    } else {
        (None, 0)
    };

    let (embedded, defect) = match cartan_from_star(&alg, &tol) {
        Ok(dec) => {
            let split = dec.split(&sub, &tol).map_err(|e| e.to_string())?;
            (Some(split.canonical), Some(split.defect))
        }
        Err(_) => (None, None),
    };

    let report = CheckReport {
        seed: common.seed,
        algebra: alg.name.clone(),
        subalgebra_dim: sub.dim(),
        is_subalgebra,
        closure_residual,
        ambient_semisimple,
        reductive,
        killing_restriction_rank: rank,
        canonically_embedded: embedded,
        embedding_defect: defect,
    };
    let payload = match parse_format(&common.format)? {
        OutputFormat::Text => format!(
            "algebra {}: subalgebra {} (residual {:.3e}), semisimple {}, \
             reductive {:?}, canonically embedded {:?}",
            report.algebra,
            report.is_subalgebra,
            report.closure_residual,
            report.ambient_semisimple,
            report.reductive,
            report.canonically_embedded,
        ),
        _ => serde_json::to_string_pretty(&report).map_err(|e| e.to_string())?,
    };
    emit(common, &payload)?;
    let ok = report.is_subalgebra
        && report.ambient_semisimple
        && report.reductive == Some(true)
        && report.canonically_embedded == Some(true);
    Ok(if ok { 0 } else { EXIT_CHECK_FAILED })
}

fn cmd_dualize(common: &Common, input: &PathBuf, sub: Option<&PathBuf>) -> Result<u8, String> {
    let tol = tolerances(common);
    let alg = load_algebra(input, &tol)?;
    let dec = cartan_from_star(&alg, &tol).map_err(|e| e.to_string())?;
    let dual = dualize_algebra(&dec, &tol).map_err(|e| e.to_string())?;

    let dual_subspace = match sub {
        Some(path) => {
            let s = load_subspace(path, alg.dim())?;
            match dual.dualize_subalgebra(&s, &tol) {
                Ok(image) => Some(SubspaceJson::from_subspace(&dual.compact.name, &image)),
                Err(e) => {
                    eprintln!("dualization failed: {e}");
                    return Ok(EXIT_CHECK_FAILED);
                }
            }
        }
        None => None,
    };

    let json = DualizeJson {
        noncompact: AlgebraJson::from_algebra(dual.noncompact()),
        compact: AlgebraJson::from_algebra(&dual.compact),
        psi: real_matrix_to_json(&dual.psi_matrix),
        dual_subspace,
    };
    let payload = serde_json::to_string_pretty(&json).map_err(|e| e.to_string())?;
    emit(common, &payload)?;
    eprintln!(
        "dual form is negative definite: {} is a compact real form",
        dual.compact.name
    );
    Ok(0)
}

#[derive(Serialize)]
struct PolarOutput {
    key: String,
    seed: u64,
    noncompact: PolarityReport,
    compact: PolarityReport,
    verdicts_agree: bool,
    cohomogeneities_equal: bool,
}

fn cmd_polar(common: &Common, key: Option<&str>, list: bool) -> Result<u8, String> {
    if list {
        emit(common, &all_keys().join("\n"))?;
        return Ok(0);
    }
    let key = key.ok_or_else(|| "an entry key is required (or --list)".to_string())?;
    let tol = tolerances(common);
    let e = entry(key).map_err(|e| e.to_string())?;
    let dual = dualize_algebra(&e.decomposition, &tol).map_err(|e| e.to_string())?;

    let pair = e.decomposition.symmetric_pair().map_err(|e| e.to_string())?;
    let noncompact =
        is_polar_action(&e.subalgebra, &pair, common.seed, &tol).map_err(|e| e.to_string())?;
    let h_star = dual
        .dualize_subalgebra(&e.subalgebra, &tol)
        .map_err(|e| e.to_string())?;
    let pair_star = dual.compact_pair().map_err(|e| e.to_string())?;
    let compact =
        is_polar_action(&h_star, &pair_star, common.seed, &tol).map_err(|e| e.to_string())?;
    let (c, c_star) =
        dual_cohomogeneity_check(&e.subalgebra, &dual, common.seed, &tol).map_err(|e| e.to_string())?;

    let out = PolarOutput {
        key: key.to_string(),
        seed: common.seed,
        verdicts_agree: noncompact.polar == compact.polar,
        cohomogeneities_equal: c == c_star,
        noncompact,
        compact,
    };
    let payload = match parse_format(&common.format)? {
        OutputFormat::Text => format!(
            "{key}: noncompact {:?} (cohomogeneity {}), compact {:?} (cohomogeneity {}), agree: {}",
            out.noncompact.polar,
            out.noncompact.cohomogeneity,
            out.compact.polar,
            out.compact.cohomogeneity,
            out.verdicts_agree,
        ),
        _ => serde_json::to_string_pretty(&out).map_err(|e| e.to_string())?,
    };
    emit(common, &payload)?;
    if out.noncompact.polar == PolarVerdict::Inconclusive
        || out.compact.polar == PolarVerdict::Inconclusive
    {
        return Ok(EXIT_INCONCLUSIVE);
    }
    if !out.verdicts_agree || !out.cohomogeneities_equal {
        return Ok(EXIT_CHECK_FAILED);
    }
    Ok(0)
}

fn cmd_table(common: &Common, m: usize, p: usize, q: usize) -> Result<u8, String> {
    let table = example_7_1_table(m, p, q).map_err(|e| e.to_string())?;
    let all_match = table.iter().all(|r| r.matched);
    let payload = match parse_format(&common.format)? {
        OutputFormat::Csv | OutputFormat::Text => {
            let mut s = String::from("r,computed_dim,closed_form_dim,matched\n");
            for row in &table {
                s.push_str(&format!(
                    "{},{},{},{}\n",
                    row.r, row.computed_dim, row.closed_form_dim, row.matched
                ));
            }
            s.trim_end().to_string()
        }
        OutputFormat::Json => serde_json::to_string_pretty(&table).map_err(|e| e.to_string())?,
    };
    emit(common, &payload)?;
    Ok(if all_match { 0 } else { EXIT_CHECK_FAILED })
}

fn cmd_suite(common: &Common) -> Result<u8, String> {
    let format = parse_format(&common.format)?;
    let config = RunConfig {
        seed: common.seed,
        tolerances: tolerances(common),
        format,
    };
    let report = run_suite(&config);
    let payload = match format {
        OutputFormat::Text | OutputFormat::Csv => {
            let mut s = String::new();
            for c in &report.criteria {
                s.push_str(&format!(
                    "criterion {}: {} [{}] {}\n",
                    c.id,
                    c.name,
                    if c.passed { "pass" } else { "FAIL" },
                    c.detail
                ));
            }
            s.push_str(&format!(
                "suite: {}",
                if report.passed { "pass" } else { "FAIL" }
            ));
            s
        }
        OutputFormat::Json => serde_json::to_string_pretty(&report).map_err(|e| e.to_string())?,
    };
    emit(common, &payload)?;
    Ok(if report.passed { 0 } else { EXIT_CHECK_FAILED })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match &cli.command {
        Command::Check { input, sub } => cmd_check(&cli.common, input, sub),
        Command::Dualize { input, sub } => cmd_dualize(&cli.common, input, sub.as_ref()),
        Command::Polar { key, list } => cmd_polar(&cli.common, key.as_deref(), *list),
        Command::Table71 { m, p, q } => cmd_table(&cli.common, *m, *p, *q),
        Command::Suite => cmd_suite(&cli.common),
    };
    match outcome {
        Ok(code) => ExitCode::from(code),
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(EXIT_INPUT_ERROR)
        }
    }
}
