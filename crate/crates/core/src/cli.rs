//! Command-line front end. Matrices travel as `{"rows": [["1/2", "i"], ...]}`
//! with every entry in the canonical scalar text format, so nothing is lost
//! between runs.
//!
//! Exit codes: 0 success, 1 usage, parse or other errors, 2 no group
//! inverse (`groupinv`, `block`), 3 a `verify` campaign found a mismatch.
//! Every error is one JSON line on stderr with a stable `"error"` field.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::block::{assemble_m, block_group_inverse, check_conditions, ef_f0_right, BlockShape, Theorem};
use crate::drazin::{drazin, drazin_index, group_inverse};
use crate::error::Error;
use crate::instance::{run_campaign, CampaignConfig};
use crate::matrix::Matrix;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_NOT_GROUP_INVERTIBLE: i32 = 2;
pub const EXIT_MISMATCH: i32 = 3;

#[derive(Debug, Serialize, Deserialize)]
pub struct MatrixFile {
    pub rows: Matrix,
}

#[derive(Parser, Debug)]
#[command(name = "blockinv", version, about = "Exact Drazin and group inverses of anti-triangular block matrices")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Drazin inverse, index and spectral idempotent of a square matrix.
    Drazin { matrix: PathBuf },
    /// Group inverse of a square matrix.
    Groupinv { matrix: PathBuf },
    /// Group inverse of a block matrix via a closed-form representation.
    Block {
        #[arg(long)]
        theorem: String,
        #[arg(long = "E")]
        e: PathBuf,
        #[arg(long = "F")]
        f: PathBuf,
        /// `auto`, or one of EI_F0, EF_I0, EF_F0 (must match the theorem).
        #[arg(long, default_value = "auto")]
        shape: String,
    },
    /// Evaluate a representation's hypotheses on a pair.
    Check {
        #[arg(long)]
        theorem: String,
        #[arg(long = "E")]
        e: PathBuf,
        #[arg(long = "F")]
        f: PathBuf,
    },
    /// Seeded campaign comparing a representation against the direct inverse.
    Verify {
        #[arg(long)]
        theorem: String,
        #[arg(long, default_value_t = 100)]
        trials: usize,
        #[arg(long = "max-n", default_value_t = 4)]
        max_n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Generate pairs that violate the equivalence condition.
        #[arg(long)]
        negative: bool,
        /// Worker threads (defaults to rayon's choice).
        #[arg(long)]
        jobs: Option<usize>,
    },
    /// Reproduce the built-in worked example.
    #[command(name = "example-3.5")]
    WorkedExample,
}

/// A failure that ends the command: exit code plus the JSON error report.
struct Failure {
    code: i32,
    report: Value,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let mut report = json!({ "error": e.kind(), "message": e.to_string() });
        let code = match &e {
            Error::NotGroupInvertible { index } => {
                report["index"] = json!(index);
                EXIT_NOT_GROUP_INVERTIBLE
            }
            Error::BlockNotGroupInvertible { theorem, condition } => {
                report["theorem"] = json!(theorem);
                report["condition"] = json!(condition);
                EXIT_NOT_GROUP_INVERTIBLE
            }
            Error::HypothesisViolated { theorem, condition } => {
                report["theorem"] = json!(theorem);
                report["condition"] = json!(condition);
                EXIT_USAGE
            }
            Error::Parse { offset, .. } => {
                report["offset"] = json!(offset);
                EXIT_USAGE
            }
            _ => EXIT_USAGE,
        };
        Failure { code, report }
    }
}

fn failure(kind: &str, message: impl std::fmt::Display) -> Failure {
    Failure {
        code: EXIT_USAGE,
        report: json!({ "error": kind, "message": message.to_string() }),
    }
}

type CmdResult = std::result::Result<i32, Failure>;

/// Parses `args` (including the program name) and runs the subcommand.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(out, "{e}");
                return EXIT_OK;
            }
            let report = json!({ "error": "UsageError", "message": e.to_string().trim_end() });
            let _ = writeln!(err, "{report}");
            return EXIT_USAGE;
        }
    };
    match dispatch(cli.command, out) {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "{}", f.report);
            f.code
        }
    }
}

fn dispatch(cmd: Command, out: &mut dyn Write) -> CmdResult {
    match cmd {
        Command::Drazin { matrix } => {
            let a = read_matrix(&matrix)?;
            let d = drazin(&a)?;
            emit(out, &json!({ "drazin": d.drazin, "index": d.index, "pi": d.spectral_idempotent }))
        }
        Command::Groupinv { matrix } => {
            let a = read_matrix(&matrix)?;
            let g = group_inverse(&a)?;
            emit(out, &json!({ "group_inverse": g }))
        }
        Command::Block { theorem, e, f, shape } => {
            let theorem: Theorem = theorem.parse()?;
            if shape != "auto" {
                let requested: BlockShape = shape.parse()?;
                if requested != theorem.shape() {
                    return Err(failure(
                        "UsageError",
                        format!("{theorem} applies to {} blocks, not {requested}", theorem.shape()),
                    ));
                }
            }
            let (e, f) = (read_matrix(&e)?, read_matrix(&f)?);
            match block_group_inverse(theorem, &e, &f) {
                Ok(r) => emit(
                    out,
                    &json!({
                        "theorem": theorem,
                        "gamma": r.gamma,
                        "delta": r.delta,
                        "lambda": r.lambda_blk,
                        "xi": r.xi,
                        "assembled": r.assembled,
                        "conditions": r.conditions,
                    }),
                ),
                Err(err @ Error::BlockNotGroupInvertible { .. }) => {
                    let mut fail = Failure::from(err);
                    let index = drazin_index(&assemble_m(&e, &f, theorem.shape())?)?;
                    fail.report["index"] = json!(index);
                    Err(fail)
                }
                Err(other) => Err(other.into()),
            }
        }
        Command::Check { theorem, e, f } => {
            let theorem: Theorem = theorem.parse()?;
            let (e, f) = (read_matrix(&e)?, read_matrix(&f)?);
            emit(out, &check_conditions(&e, &f, theorem)?)
        }
        Command::Verify {
            theorem,
            trials,
            max_n,
            seed,
            negative,
            jobs,
        } => {
            let mut cfg = CampaignConfig::new(theorem.parse()?, trials, max_n, seed);
            cfg.negative = negative;
            let campaign = || run_campaign(&cfg);
            let (outcomes, summary) = match jobs {
                Some(j) => rayon::ThreadPoolBuilder::new()
                    .num_threads(j)
                    .build()
                    .map_err(|e| failure("UsageError", e))?
                    .install(campaign)?,
                None => campaign()?,
            };
            for o in &outcomes {
                writeln_json(out, &serde_json::to_value(o).map_err(|e| failure("IoError", e))?)?;
            }
            emit(out, &json!({ "summary": summary }))?;
            Ok(if summary.clean() { EXIT_OK } else { EXIT_MISMATCH })
        }
        Command::WorkedExample => worked_example(out),
    }
}

fn worked_example(out: &mut dyn Write) -> CmdResult {
    let e = Matrix::from_int_rows([[1, 2], [0, -1]]);
    let f = Matrix::from_str_rows([["i", "i"], ["0", "0"]])?;
    let expected = Matrix::from_str_rows([
        ["0", "1", "-i", "-i"],
        ["0", "-1", "0", "0"],
        ["-i", "-i", "1", "1"],
        ["0", "0", "0", "0"],
    ])?;
    let got = ef_f0_right(&e, &f)?.assembled;
    let io = |e: std::io::Error| failure("IoError", e);
    writeln!(out, "E =\n{e}\nF =\n{f}\ncomputed M^# =\n{got}\nexpected M^# =\n{expected}").map_err(io)?;
    let pass = got == expected;
    writeln!(out, "{}", if pass { "PASS" } else { "FAIL" }).map_err(io)?;
    Ok(if pass { EXIT_OK } else { EXIT_MISMATCH })
}

fn read_matrix(path: &Path) -> std::result::Result<Matrix, Failure> {
    let text = std::fs::read_to_string(path).map_err(|e| failure("IoError", format!("{}: {e}", path.display())))?;
    let file: MatrixFile =
        serde_json::from_str(&text).map_err(|e| failure("ParseError", format!("{}: {e}", path.display())))?;
    if file.rows.rows() == 0 || file.rows.cols() == 0 {
        return Err(failure("ParseError", format!("{}: matrix is empty", path.display())));
    }
    Ok(file.rows)
}

fn writeln_json(out: &mut dyn Write, v: &Value) -> std::result::Result<(), Failure> {
    writeln!(out, "{v}").map_err(|e| failure("IoError", e))
}

fn emit<T: Serialize>(out: &mut dyn Write, v: &T) -> CmdResult {
    writeln_json(out, &serde_json::to_value(v).map_err(|e| failure("IoError", e))?)?;
    Ok(EXIT_OK)
}
