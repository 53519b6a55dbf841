//! Command-line front end. `main.rs` only forwards to [`run`]; everything
//! here writes to caller-supplied streams so it can be tested in-process.
//!
//! Exit codes: 0 success, 1 parse or validation error, 2 no nonsingular
//! base point or singular mutation, 3 inconclusive comparison, 4 a check
//! that deviates from the expected result.

mod commands;
mod config;
mod reproduce;

pub use config::{RunConfig, Settings};
pub use reproduce::{reproduce, reproduce_with, Row, QUIVER_TWO, REFERENCE_IMAGES};

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

use crate::algebra::AlgebraError;
use crate::braid::{GroupKind, WordError};
use crate::checker::CheckError;
use crate::cluster::ClusterError;
use crate::representation::EvalError;

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID: i32 = 1;
pub const EXIT_SINGULAR: i32 = 2;
pub const EXIT_INCONCLUSIVE: i32 = 3;
pub const EXIT_DEVIATION: i32 = 4;

#[derive(Debug, Parser)]
#[command(
    name = "braidcluster",
    version,
    about = "Braid group invariants from cluster mutations, in exact arithmetic"
)]
pub struct Cli {
    #[command(flatten)]
    pub opts: GlobalOpts,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Default, Args)]
pub struct GlobalOpts {
    /// Group kind: b, fb, vb or fvb.
    #[arg(long, global = true)]
    pub group: Option<GroupKind>,
    /// Number of strands.
    #[arg(short = 'n', long = "strands", global = true)]
    pub strands: Option<usize>,
    /// Base point, e.g. "1,2,2,1".
    #[arg(long, global = true, allow_hyphen_values = true)]
    pub base: Option<String>,
    /// Seed for the base-point retry stream.
    #[arg(long, global = true)]
    pub seed: Option<u64>,
    /// Print JSON instead of plain text.
    #[arg(long, global = true)]
    pub json: bool,
    /// Largest strand count for symbolic checks (default 6).
    #[arg(long, global = true)]
    pub max_symbolic_n: Option<usize>,
    /// Largest combined word length for symbolic comparison (default 12).
    #[arg(long, global = true)]
    pub max_symbolic_len: Option<usize>,
    /// JSON file with default settings; flags take precedence.
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Image of the base point under one word, a word file or a corpus.
    Invariant {
        #[arg(long, conflicts_with_all = ["word_file", "corpus"])]
        word: Option<String>,
        /// One word per line, `#` starts a comment.
        #[arg(long, conflicts_with = "corpus")]
        word_file: Option<PathBuf>,
        /// JSON array of {name, n, group, word}.
        #[arg(long)]
        corpus: Option<PathBuf>,
    },
    /// Compare two words at a common base point.
    Distinguish {
        word1: String,
        word2: String,
        /// If the images agree, compare the words as rational maps.
        #[arg(long)]
        symbolic: bool,
    },
    /// Check the defining relations, and for virtual kinds the forbidden ones.
    Verify,
    /// Apply a mutation script to a seed.
    Mutate {
        #[arg(long, conflicts_with = "quiver")]
        seed_file: Option<PathBuf>,
        /// Start from the quiver on 3N+1 vertices with symbolic variables.
        #[arg(long, value_name = "N")]
        quiver: Option<usize>,
        /// Comma-separated 1-based vertices, applied left to right.
        #[arg(long)]
        script: String,
        /// Mutate y-variables instead of x-variables.
        #[arg(long)]
        y: bool,
    },
    /// Run the regression table.
    Reproduce,
}

/// A failure with its exit code; the message goes to standard error.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliError {
    pub code: i32,
    pub message: String,
}

impl CliError {
    pub fn invalid(message: impl Into<String>) -> Self {
        CliError {
            code: EXIT_INVALID,
            message: message.into(),
        }
    }
}

fn algebra_code(e: &AlgebraError) -> i32 {
    match e {
        AlgebraError::SingularPoint | AlgebraError::DivisionByZero => EXIT_SINGULAR,
        _ => EXIT_INVALID,
    }
}

impl From<WordError> for CliError {
    fn from(e: WordError) -> Self {
        CliError::invalid(e.to_string())
    }
}

impl From<EvalError> for CliError {
    fn from(e: EvalError) -> Self {
        let code = match e {
            EvalError::SingularPoint { .. } | EvalError::Exhausted(_) => EXIT_SINGULAR,
            _ => EXIT_INVALID,
        };
        CliError {
            code,
            message: e.to_string(),
        }
    }
}

impl From<CheckError> for CliError {
    fn from(e: CheckError) -> Self {
        match e {
            CheckError::Eval(inner) => inner.into(),
            other => CliError::invalid(other.to_string()),
        }
    }
}

impl From<ClusterError> for CliError {
    fn from(e: ClusterError) -> Self {
        let code = match &e {
            ClusterError::Algebra(a) => algebra_code(a),
            _ => EXIT_INVALID,
        };
        CliError {
            code,
            message: e.to_string(),
        }
    }
}

/// Parses `args` (program name first) and runs the command.
pub fn run_with<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => EXIT_OK,
                _ => EXIT_INVALID,
            };
            let text = e.render().to_string();
            if code == EXIT_OK {
                let _ = write!(out, "{text}");
            } else {
                let _ = write!(err, "{text}");
            }
            return code;
        }
    };
    match execute(&cli, out) {
        Ok(code) => code,
        Err(e) => {
            if !e.message.is_empty() {
                let _ = writeln!(err, "error: {}", e.message);
            }
            e.code
        }
    }
}

pub fn run() -> i32 {
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with(std::env::args_os(), &mut stdout.lock(), &mut stderr.lock())
}

fn execute(cli: &Cli, out: &mut dyn Write) -> Result<i32, CliError> {
    let settings = Settings::resolve(&cli.opts)?;
    match &cli.command {
        Command::Invariant {
            word,
            word_file,
            corpus,
        } => commands::invariant(&settings, word.as_deref(), word_file.as_deref(), corpus.as_deref(), out),
        Command::Distinguish { word1, word2, symbolic } => {
            commands::distinguish(&settings, word1, word2, *symbolic, out)
        }
        Command::Verify => commands::verify(&settings, out),
        Command::Mutate {
            seed_file,
            quiver,
            script,
            y,
        } => commands::mutate(&settings, seed_file.as_deref(), *quiver, script, *y, out),
        Command::Reproduce => commands::reproduce(&settings, out),
    }
}
