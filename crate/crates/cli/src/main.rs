//! Batch front-end for the pipeline: rational matrix -> polytrope type ->
//! tree matroids -> verified hypersimplex subdivision.
//!
//! Exit codes: 0 success, 1 verification failure, 2 input or genericity
//! failure.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use polytrope::bipartite::Partition;
use polytrope::io::{
    dual_graph_dot, parse_matrix, to_json_string, MatroidJson, ReportJson, TypeJson,
};
use polytrope::sample::{random_generic_matrix, rng};
use polytrope::subdivision::{
    build_sigma_star, build_tilde, check_duality, refine_third_kind, splits_lemma_scan,
    tilde_third_kind_pairs, verify_subdivision_with,
};
use polytrope::tropical::{realize_type, TropMatrix, TropicalError};

#[derive(Parser)]
#[command(
    name = "polytrope",
    about = "Polytrope types and their dual matroid subdivisions"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Dot,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the combinatorial type of the tropical hull of a matrix's rows
    Realize {
        /// Matrix file (CSV or JSON of "p/q" entries); omit to generate one
        #[arg(long)]
        matrix: Option<PathBuf>,
        /// Size of the generated matrix when no file is given
        #[arg(long)]
        k: Option<usize>,
        /// Seed for matrix generation
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Write output here instead of stdout
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Build and verify the matroid subdivision dual to a polytrope
    Subdivide {
        #[arg(long)]
        matrix: Option<PathBuf>,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Partition block sizes, e.g. 2,2,2
        #[arg(long, value_delimiter = ',', required = true)]
        blocks: Vec<usize>,
        /// Random membership samples used in coverage verification
        #[arg(long, default_value_t = 48)]
        samples: usize,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Coarse rank-4 tiling, its hyperplane splits, and the split scan
    Rank4Demo {
        /// Partition block sizes, e.g. 2,2,2,2
        #[arg(long, value_delimiter = ',', default_values_t = [2usize, 2, 2, 2])]
        blocks: Vec<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

/// Diagnostic printed to stderr; the code decides the process exit status.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn input(message: impl Into<String>) -> Failure {
        Failure {
            code: 2,
            message: message.into(),
        }
    }

    fn verification(message: impl Into<String>) -> Failure {
        Failure {
            code: 1,
            message: message.into(),
        }
    }
}

impl<E: std::error::Error> From<E> for Failure {
    fn from(e: E) -> Failure {
        Failure::input(e.to_string())
    }
}

fn load_matrix(
    matrix: &Option<PathBuf>,
    k: Option<usize>,
    seed: u64,
) -> Result<TropMatrix, Failure> {
    match matrix {
        Some(path) => {
            let text = fs::read_to_string(path)
                .map_err(|e| Failure::input(format!("{}: {e}", path.display())))?;
            Ok(parse_matrix(&text)?)
        }
        None => {
            let k = k.ok_or_else(|| Failure::input("either --matrix or --k is required"))?;
            if k < 2 {
                return Err(Failure::input("--k must be at least 2"));
            }
            Ok(random_generic_matrix(&mut rng(seed), k))
        }
    }
}

fn partition_from(blocks: &[usize], k: usize) -> Result<Partition, Failure> {
    if blocks.len() != k {
        return Err(Failure::input(format!(
            "expected {k} blocks, got {}",
            blocks.len()
        )));
    }
    if blocks.iter().any(|&b| b < 2) {
        return Err(Failure::input("every block must have at least 2 elements"));
    }
    Ok(Partition::from_sizes(blocks)?)
}

fn emit(out: &Option<PathBuf>, text: &str) -> Result<(), Failure> {
    match out {
        Some(path) => {
            fs::write(path, text).map_err(|e| Failure::input(format!("{}: {e}", path.display())))
        }
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn genericity(e: TropicalError) -> Failure {
    Failure::input(e.to_string())
}

fn cmd_realize(
    matrix: Option<PathBuf>,
    k: Option<usize>,
    seed: u64,
    out: Option<PathBuf>,
) -> Result<(), Failure> {
    let v = load_matrix(&matrix, k, seed)?;
    let t = realize_type(&v).map_err(genericity)?;
    emit(&out, &to_json_string(&TypeJson::from(&t))?)?;
    if !t.is_maximal() {
        return Err(Failure::verification(format!(
            "type is not maximal: {} of {} vertices",
            t.vertices.len(),
            polytrope::biconvex::max_vertex_count(t.k)
        )));
    }
    Ok(())
}

#[allow(clippy::too_many_arguments)]
fn cmd_subdivide(
    matrix: Option<PathBuf>,
    k: Option<usize>,
    seed: u64,
    blocks: Vec<usize>,
    samples: usize,
    format: Format,
    out: Option<PathBuf>,
) -> Result<(), Failure> {
    let v = load_matrix(&matrix, k.or(Some(blocks.len())), seed)?;
    let t = realize_type(&v).map_err(genericity)?;
    if !t.is_maximal() {
        return Err(Failure::input("polytrope type is not maximal"));
    }
    let partition = partition_from(&blocks, t.k)?;
    let tiling = build_sigma_star(&t, &partition)?;
    let report = verify_subdivision_with(&tiling, 2026, samples)?;
    let duality = check_duality(&tiling, &t, &partition)?;
    let text = match format {
        Format::Json => {
            let mut value = serde_json::to_value(ReportJson::from(&report))
                .map_err(|e| Failure::input(e.to_string()))?;
            value["duality_pass"] = json!(duality);
            value["type"] = serde_json::to_value(TypeJson::from(&t))
                .map_err(|e| Failure::input(e.to_string()))?;
            to_json_string(&value)?
        }
        Format::Dot => dual_graph_dot(&report.dual),
    };
    emit(&out, &text)?;
    if !report.all_pass() {
        let pinpoint = report
            .unpaired
            .first()
            .map(|(cell, masks)| format!(" (cell {cell}, facet {masks:?})"))
            .unwrap_or_default();
        return Err(Failure::verification(format!(
            "subdivision verification failed{pinpoint}"
        )));
    }
    if !duality {
        return Err(Failure::verification(
            "dual graph does not match the 1-skeleton",
        ));
    }
    Ok(())
}

fn cmd_rank4_demo(blocks: Vec<usize>, seed: u64, out: Option<PathBuf>) -> Result<(), Failure> {
    let partition = partition_from(&blocks, 4)?;
    let coarse = build_tilde(&partition)?;
    let coarse_report = verify_subdivision_with(&coarse, 2026, 48)?;

    let mut splits = Vec::new();
    for (l0, l1) in tilde_third_kind_pairs() {
        let highs: Vec<usize> = (0..4).filter(|&j| j != l0 && j != l1).collect();
        for &h in &highs {
            let (le, ge) = refine_third_kind(&partition, (l0, l1), (l0, h))?;
            let (fits, _) = le.is_face_fitting(&ge)?;
            splits.push(json!({
                "lows": [l0, l1],
                "i": [l0, h],
                "le": MatroidJson::from(le.matroid()),
                "ge": MatroidJson::from(ge.matroid()),
                "halves_fit": fits,
            }));
        }
    }

    // a realized maximal polytrope's subdivision refines the coarse tiling
    let t = realize_type(&random_generic_matrix(&mut rng(seed), 4)).map_err(genericity)?;
    let fine = build_sigma_star(&t, &partition)?;

    // scan the coarse and fine cells; the tree-matroid cells carry the
    // rank-2 non-degenerate flats that make the scan informative
    let family: Vec<polytrope::matroid::Matroid> = coarse
        .cells
        .iter()
        .chain(fine.cells.iter())
        .map(|c| c.matroid().clone())
        .collect();
    let scan = splits_lemma_scan(&family)?;
    let refinement_pass = fine.cells.iter().all(|cell| {
        coarse
            .cells
            .iter()
            .any(|big| cell.matroid().bases().all(|b| big.matroid().is_base(&b)))
    });

    let halves_fit_all = splits
        .iter()
        .all(|s| s["halves_fit"].as_bool().unwrap_or(false));
    let value = json!({
        "tilde_cells": coarse.cells.len(),
        "tilde_all_pass": coarse_report.all_pass(),
        "splits": splits,
        "scan": {
            "scanned": scan.scanned,
            "eligible": scan.eligible,
            "pairs_checked": scan.pairs_checked,
            "violations": scan.violations.len(),
        },
        "refinement_pass": refinement_pass,
    });
    emit(&out, &to_json_string(&value)?)?;
    if coarse.cells.len() != 14 {
        return Err(Failure::verification("expected 14 coarse cells"));
    }
    if !coarse_report.all_pass()
        || !halves_fit_all
        || !scan.violations.is_empty()
        || !refinement_pass
    {
        return Err(Failure::verification("rank-4 demo assertions failed"));
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Realize {
            matrix,
            k,
            seed,
            out,
        } => cmd_realize(matrix, k, seed, out),
        Command::Subdivide {
            matrix,
            k,
            seed,
            blocks,
            samples,
            format,
            out,
        } => cmd_subdivide(matrix, k, seed, blocks, samples, format, out),
        Command::Rank4Demo { blocks, seed, out } => cmd_rank4_demo(blocks, seed, out),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
