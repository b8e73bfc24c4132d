//! The `imm5` command line: file formats, report rendering and dispatch.
//!
//! Exit codes: 0 when everything checked passes, 1 when an identity fails
//! or the data is inconsistent, 2 for unreadable or malformed input.

mod commands;
pub mod files;
pub mod json_int;
pub mod reports;

use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

pub use commands::{
    act, analyze, cmd_act, cmd_analyze, cmd_embeddings, cmd_invariant, cmd_verify, embeddings,
    invariant, verify_manifold, verify_seifert_data, VerifyOptions, Which,
};

use crate::error::Error;
use crate::sweep::Execution;
use crate::verify::SweepConfig;

pub const SEED_ENV: &str = "IMM5_SEED";
pub const DEFAULT_SEED: u64 = 0x5eed;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "imm5",
    version,
    about = "Regular homotopy classes of immersions of 3-manifolds into ℝ⁵"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Homology, Γ₂, spin structures and the shape of the classification.
    Analyze {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Compute i_a and/or i_b from a Seifert data file.
    Invariant {
        file: PathBuf,
        #[arg(long, conflicts_with = "ib")]
        ia: bool,
        #[arg(long)]
        ib: bool,
        #[arg(long)]
        json: bool,
    },
    /// Connected sum with a sphere immersion of Smale invariant OMEGA.
    Act {
        file: PathBuf,
        #[arg(long)]
        wu: String,
        #[arg(long, allow_hyphen_values = true)]
        i: i64,
        #[arg(long, allow_hyphen_values = true)]
        omega: i64,
        #[arg(long)]
        json: bool,
    },
    /// Regular homotopy classes containing embeddings.
    Embeddings {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Run validators, built-in reproductions and randomised oracles.
    Verify(VerifyArgs),
}

#[derive(Debug, Args)]
#[group(required = true, multiple = true)]
pub struct VerifyArgs {
    /// Manifold or Seifert data file to validate.
    pub file: Option<PathBuf>,
    #[arg(long)]
    pub corollaries: bool,
    #[arg(long)]
    pub oracles: bool,
    /// Oracle seed; defaults to $IMM5_SEED, then a fixed constant.
    #[arg(long, requires = "oracles")]
    pub seed: Option<u64>,
    #[arg(long, default_value_t = 500, requires = "oracles")]
    pub trials: u64,
    #[arg(long, default_value_t = 6, requires = "oracles")]
    pub max_dim: usize,
    /// Run oracle trials on a single thread.
    #[arg(long, requires = "oracles")]
    pub sequential: bool,
    #[arg(long)]
    pub json: bool,
}

/// Seed precedence: explicit flag, then `IMM5_SEED`, then [`DEFAULT_SEED`].
pub fn resolve_seed(flag: Option<u64>, env: Option<&str>) -> Result<u64, Error> {
    if let Some(s) = flag {
        return Ok(s);
    }
    match env {
        Some(v) => v
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("{SEED_ENV}={v:?} is not an unsigned integer"))),
        None => Ok(DEFAULT_SEED),
    }
}

fn emit<T: Serialize + std::fmt::Display>(
    out: &mut dyn Write,
    report: &T,
    json: bool,
) -> std::io::Result<()> {
    if json {
        let text = serde_json::to_string_pretty(report).expect("reports serialize");
        writeln!(out, "{text}")
    } else {
        writeln!(out, "{report}")
    }
}

fn exit_for(e: &Error) -> i32 {
    if e.is_input_error() {
        EXIT_INPUT
    } else {
        EXIT_FAILED
    }
}

/// Runs a parsed command, writing the report to `out` and diagnostics to
/// `err`. Returns the process exit code.
pub fn run(cli: Cli, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let result = dispatch(cli, out);
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_for(&e)
        }
    }
}

fn io_err(e: std::io::Error) -> Error {
    Error::Io(e.to_string())
}

fn dispatch(cli: Cli, out: &mut dyn Write) -> Result<i32, Error> {
    match cli.command {
        Command::Analyze { file, json } => {
            let r = cmd_analyze(&file)?;
            emit(out, &r, json).map_err(io_err)?;
            Ok(EXIT_OK)
        }
        Command::Invariant { file, ia, ib, json } => {
            let which = match (ia, ib) {
                (true, false) => Which::Ia,
                (false, true) => Which::Ib,
                _ => Which::Both,
            };
            let r = cmd_invariant(&file, which)?;
            emit(out, &r, json).map_err(io_err)?;
            Ok(if r.passed() { EXIT_OK } else { EXIT_FAILED })
        }
        Command::Act {
            file,
            wu,
            i,
            omega,
            json,
        } => {
            let r = cmd_act(&file, &wu, i, omega)?;
            emit(out, &r, json).map_err(io_err)?;
            Ok(EXIT_OK)
        }
        Command::Embeddings { file, json } => {
            let r = cmd_embeddings(&file)?;
            emit(out, &r, json).map_err(io_err)?;
            Ok(EXIT_OK)
        }
        Command::Verify(args) => {
            let oracles = if args.oracles {
                let seed = resolve_seed(args.seed, std::env::var(SEED_ENV).ok().as_deref())?;
                let exec = if args.sequential {
                    Execution::Sequential
                } else {
                    Execution::Parallel
                };
                Some(SweepConfig::new(args.trials, args.max_dim, seed).with_exec(exec))
            } else {
                None
            };
            let opts = VerifyOptions {
                file: args.file,
                corollaries: args.corollaries,
                oracles,
            };
            let r = cmd_verify(&opts)?;
            emit(out, &r, args.json).map_err(io_err)?;
            Ok(if r.passed() { EXIT_OK } else { EXIT_FAILED })
        }
    }
}
