//! Command line front end: `factors`, `analyze`, `verify` and `search`.
//!
//! Exit codes: `analyze` returns 0 (forced two-periodic), 3 (forced in one
//! direction) or 4 (inconclusive), taking the weakest verdict printed;
//! `verify` returns 0 or 1; `search` returns 0 when something was found and
//! 2 when nothing was found up to the torus bound. Errors exit with 5.

mod commands;
pub mod formats;
pub mod parse;
mod report;

use std::ffi::OsString;
use std::path::PathBuf;

use clap::{ArgGroup, Args, Parser, Subcommand};

use crate::perfect::GridKind;

pub use parse::parse_poly;

pub const EXIT_ERROR: i32 = 5;

#[derive(Debug, Parser)]
#[command(name = "perfcol", version, about = "Forced periodicity of perfect colorings on grid graphs")]
pub struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    /// Worker threads for search.
    #[arg(long, global = true, default_value_t = 1)]
    pub threads: usize,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct ShapeArgs {
    /// JSON file with a list of [i, j] offsets.
    #[arg(long, conflicts_with_all = ["grid", "radius"])]
    pub shape: Option<PathBuf>,
    /// Grid whose radius-r neighborhood is the shape: square, triangular or king.
    #[arg(long, requires = "radius")]
    pub grid: Option<GridKind>,
    /// Neighborhood radius.
    #[arg(long, requires = "grid")]
    pub radius: Option<u32>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Line polynomial factors of a Laurent polynomial.
    Factors {
        /// Polynomial in x and y, e.g. "x^2*y - 1" or "(1 + x^-1)*y".
        #[arg(long, allow_hyphen_values = true)]
        poly: String,
    },
    /// Periodicity verdicts for a shape.
    Analyze {
        #[command(flatten)]
        shape: ShapeArgs,
        /// Covering verdict for b - a = DELTA.
        #[arg(long, allow_negative_numbers = true)]
        delta: Option<i64>,
        /// Coloring verdict for the matrix in this JSON file.
        #[arg(long)]
        matrix: Option<PathBuf>,
        /// Critical values t of f_D - t.
        #[arg(long)]
        parametric: bool,
    },
    /// Check a torus configuration.
    Verify {
        /// Configuration text file.
        #[arg(long)]
        config: PathBuf,
        #[command(flatten)]
        shape: ShapeArgs,
        /// Require a (D, b, a)-covering.
        #[arg(long, num_args = 2, value_names = ["B", "A"], conflicts_with = "matrix")]
        covering: Option<Vec<u64>>,
        /// Require this coloring matrix.
        #[arg(long)]
        matrix: Option<PathBuf>,
        /// Alphabet size (default: largest color + 1).
        #[arg(long)]
        colors: Option<usize>,
        /// Also report complexities for a WxH block window.
        #[arg(long)]
        window: Option<String>,
    },
    /// Enumerate colorings of a torus.
    #[command(group(ArgGroup::new("constraint").required(true).args(["covering", "matrix", "any_perfect"])))]
    Search {
        #[command(flatten)]
        shape: ShapeArgs,
        /// Alphabet size.
        #[arg(long, default_value_t = 2)]
        colors: usize,
        /// Torus size as WxH.
        #[arg(long)]
        torus: String,
        /// (D, b, a)-coverings on two colors.
        #[arg(long, num_args = 2, value_names = ["B", "A"])]
        covering: Option<Vec<u64>>,
        /// Colorings with the matrix in this JSON file.
        #[arg(long)]
        matrix: Option<PathBuf>,
        /// Any perfect coloring.
        #[arg(long)]
        any_perfect: bool,
        /// Stop after this many configurations.
        #[arg(long)]
        limit: Option<usize>,
    },
}

/// Captured result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

/// Parses arguments and runs the command without touching the process.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_ERROR } else { 0 };
            let text = e.render().to_string();
            let (stdout, stderr) = if e.use_stderr() { (String::new(), text) } else { (text, String::new()) };
            return Outcome { stdout, stderr, code };
        }
    };
    match commands::dispatch(&cli) {
        Ok((stdout, code)) => Outcome { stdout, stderr: String::new(), code },
        Err(e) => Outcome { stdout: String::new(), stderr: format!("error: {e}\n"), code: EXIT_ERROR },
    }
}
