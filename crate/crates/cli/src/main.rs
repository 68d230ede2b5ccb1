//! `dplane`: arrangement analysis from the command line.
//!
//! Exit codes: 0 success, 1 usage or parse or IO failure, 2 input fails
//! validation (non-nodal, outside the closed-form hypotheses for `check`,
//! bad orientation list, nothing to render), 3 cross-check verdict failure.

mod format;
mod report;
mod svg;

use std::fmt;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand};
use dplane_core::chamber::{BuildError, ChamberComplex};
use dplane_core::generator::{random_arrangement, GenSpec};
use dplane_core::geometry::{validate, Arrangement};
use dplane_core::gram::{gram_matrix, gram_via_flip_oracle, GramMatrix};
use dplane_core::infinity::{cross_check, prediction, CheckReport, Prediction};
use dplane_core::lattice::{invariants, LatticeInvariants};
use dplane_core::orientation::OrientationAssignment;

use format::{parse_arrangement, serialize_arrangement, ParseError};
use report::{build_report, PredictionBlock, Report};

#[derive(Parser, Debug)]
#[command(
    name = "dplane",
    version,
    about = "Exact intersection-lattice invariants of nodal real line arrangements"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Analyze an arrangement file: complex, Gram matrix, invariants.
    Analyze {
        /// Arrangement file (`a b c` per line).
        input: PathBuf,
        /// `standard` or one sign per bounded chamber, e.g. `+,-,+` or `1,-1,1`.
        #[arg(long, default_value = "standard", allow_hyphen_values = true)]
        orientation: String,
        /// Also recompute the Gram matrix through the base-change oracle.
        #[arg(long)]
        oracle: bool,
        /// Emit the JSON report instead of text.
        #[arg(long)]
        json: bool,
        /// Write to a file instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Generate a random nodal arrangement with a given parallel profile.
    Generate {
        /// Total number of lines (at least 3).
        lines: usize,
        /// Number of parallel pairs (at most lines/2).
        parallel_pairs: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Print the closed-form predictions for N lines with p parallel pairs.
    Predict {
        lines: usize,
        parallel_pairs: usize,
        #[arg(long)]
        json: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Analyze and compare against the closed forms; nonzero exit on mismatch.
    Check {
        input: PathBuf,
        #[arg(long)]
        json: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Render the subdivision as SVG.
    Render {
        input: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Debug)]
enum CliError {
    /// Bad file contents or bad parameters: exit 1.
    Input(String),
    /// Structurally valid input rejected by validation: exit 2.
    Validation(String),
    /// A gating cross-check verdict failed: exit 3.
    CheckFailed(String),
}

impl CliError {
    fn code(&self) -> u8 {
        match self {
            CliError::Input(_) => 1,
            CliError::Validation(_) => 2,
            CliError::CheckFailed(_) => 3,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Input(m) | CliError::Validation(m) | CliError::CheckFailed(m) => {
                write!(f, "{m}")
            }
        }
    }
}

impl From<ParseError> for CliError {
    fn from(e: ParseError) -> Self {
        CliError::Input(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // --help and --version are not failures.
            let ok = matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion);
            let _ = e.print();
            return if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            };
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.code())
        }
    }
}

fn read_input(path: &Path) -> Result<Arrangement, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Input(format!("cannot read {}: {e}", path.display())))?;
    Ok(parse_arrangement(&text)?)
}

fn write_output(out: Option<&Path>, content: &str) -> Result<(), CliError> {
    match out {
        Some(path) => std::fs::write(path, content)
            .map_err(|e| CliError::Input(format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{content}");
            Ok(())
        }
    }
}

fn build_complex(arr: Arrangement) -> Result<ChamberComplex, CliError> {
    ChamberComplex::build(arr).map_err(|e| match e {
        BuildError::NotNodal(..) => CliError::Validation(e.to_string()),
        BuildError::TooFewLines(_) => CliError::Validation(e.to_string()),
    })
}

fn parse_orientation(cc: &ChamberComplex, spec: &str) -> Result<OrientationAssignment, CliError> {
    if spec == "standard" {
        return Ok(OrientationAssignment::standard(cc));
    }
    let mut signs = Vec::new();
    for token in spec.split(',') {
        let sign = match token.trim() {
            "+" | "+1" | "1" => 1,
            "-" | "-1" => -1,
            other => {
                return Err(CliError::Input(format!(
                    "orientation signs are `+`/`1` or `-`/`-1`, found `{other}`"
                )))
            }
        };
        signs.push(sign);
    }
    OrientationAssignment::from_signs(cc, &signs).map_err(|e| CliError::Validation(e.to_string()))
}

struct Analysis {
    arr: Arrangement,
    cc: ChamberComplex,
    orientation: OrientationAssignment,
    gram: GramMatrix,
    inv: LatticeInvariants,
    pred: Option<Prediction>,
    check: Option<CheckReport>,
}

/// Runs the pipeline.  Arrangements that are nodal but outside the
/// closed-form hypotheses still analyze fine; they just carry no
/// prediction or cross-check blocks.
fn analyze_pipeline(arr: Arrangement, orientation_spec: &str) -> Result<Analysis, CliError> {
    let validation = validate(&arr);
    let cc = build_complex(arr.clone())?;
    let orientation = parse_orientation(&cc, orientation_spec)?;
    let gram = gram_matrix(&cc, &orientation);
    let inv = invariants(&gram.mat)
        .map_err(|e| CliError::Validation(format!("invariant computation failed: {e:?}")))?;
    let (pred, check) = if validation.prediction_ready() {
        let pred = prediction(arr.len(), validation.parallel_pairs)
            .map_err(|e| CliError::Validation(e.to_string()))?;
        let check = cross_check(&inv, &pred).map_err(|e| CliError::Validation(e.to_string()))?;
        (Some(pred), Some(check))
    } else {
        (None, None)
    };
    Ok(Analysis {
        arr,
        cc,
        orientation,
        gram,
        inv,
        pred,
        check,
    })
}

fn assemble_report(a: &Analysis, oracle: bool) -> Report {
    let oracle_match = oracle.then(|| {
        let standard = gram_matrix(&a.cc, &OrientationAssignment::standard(&a.cc));
        gram_via_flip_oracle(&a.cc, &standard, &a.orientation).mat == a.gram.mat
    });
    build_report(
        &a.arr,
        &validate(&a.arr),
        &a.cc,
        &a.orientation,
        &a.gram,
        &a.inv,
        a.pred.as_ref(),
        a.check.as_ref(),
        oracle_match,
    )
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.cmd {
        Cmd::Analyze {
            input,
            orientation,
            oracle,
            json,
            out,
        } => {
            let arr = read_input(&input)?;
            let analysis = analyze_pipeline(arr, &orientation)?;
            let report = assemble_report(&analysis, oracle);
            let rendered = if json {
                report.to_json()
            } else {
                report.to_text()
            };
            write_output(out.as_deref(), &rendered)
        }
        Cmd::Generate {
            lines,
            parallel_pairs,
            seed,
            out,
        } => {
            let spec = GenSpec::new(lines, parallel_pairs, seed);
            let arr = random_arrangement(&spec).map_err(|e| CliError::Input(e.to_string()))?;
            write_output(out.as_deref(), &serialize_arrangement(&arr))
        }
        Cmd::Predict {
            lines,
            parallel_pairs,
            json,
            out,
        } => {
            let pred =
                prediction(lines, parallel_pairs).map_err(|e| CliError::Input(e.to_string()))?;
            let block = PredictionBlock::new(&pred);
            let rendered = if json {
                let mut s = serde_json::to_string_pretty(&block).expect("prediction serializes");
                s.push('\n');
                s
            } else {
                predict_text(&block)
            };
            write_output(out.as_deref(), &rendered)
        }
        Cmd::Check { input, json, out } => {
            let arr = read_input(&input)?;
            let validation = validate(&arr);
            if !validation.nodal {
                return Err(CliError::Validation(
                    "cross-check requires a nodal arrangement (three lines meet at a point)"
                        .to_string(),
                ));
            }
            if !validation.at_most_one_parallel {
                return Err(CliError::Validation(
                    "cross-check requires every parallel class to have at most two lines; \
                     the closed forms do not cover this input"
                        .to_string(),
                ));
            }
            let analysis = analyze_pipeline(arr, "standard")?;
            let report = assemble_report(&analysis, false);
            let rendered = if json {
                report.to_json()
            } else {
                report.to_text()
            };
            write_output(out.as_deref(), &rendered)?;
            let check = analysis.check.expect("prediction-ready input has a check");
            if check.passed() {
                Ok(())
            } else {
                Err(CliError::CheckFailed(format!(
                    "cross-check failed: rank/signature match={}, disc subquotient={}",
                    check.rank_signature_match, check.disc_subquotient
                )))
            }
        }
        Cmd::Render { input, out } => {
            let arr = read_input(&input)?;
            if arr.is_empty() {
                return Err(CliError::Validation("no lines to render".to_string()));
            }
            let cc = build_complex(arr)?;
            write_output(out.as_deref(), &svg::render(&cc))
        }
    }
}

fn predict_text(p: &PredictionBlock) -> String {
    format!(
        "prediction for N={} lines, p={} parallel pairs (effective degree {}):\n\
         \x20 bounded chambers {}, nodes {}, gram rank {}, kernel rank {}\n\
         \x20 ambient: rank {}, signature ({}+, {}-)\n\
         \x20 fixed part: rank {}, signature ({}+, {}-), disc {}\n\
         \x20 complement: rank {}, signature ({}+, {}-)\n",
        p.n,
        p.p,
        p.n_effective,
        p.bounded_chambers,
        p.nodes,
        p.gram_rank,
        p.kernel_rank,
        p.ambient_rank,
        p.ambient_signature.0,
        p.ambient_signature.1,
        p.fixed_part_rank,
        p.fixed_part_signature.0,
        p.fixed_part_signature.1,
        p.fixed_part_disc.display,
        p.perp_rank,
        p.perp_signature.0,
        p.perp_signature.1,
    )
}
