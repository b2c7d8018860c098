//! `abctree`: command-line front end for the ABC index toolkit.
//!
//! Exit status: 0 on success, 1 when a checked claim or agreement fails,
//! 2 on usage or input errors.

mod commands;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

/// Environment variable holding the default checkpoint directory.
pub const CHECKPOINT_ENV: &str = "ABCTREE_CHECKPOINT_DIR";

#[derive(Parser, Debug)]
#[command(
    name = "abctree",
    version,
    about = "ABC index of trees and the structure of minimal-ABC trees"
)]
pub struct Cli {
    /// Worker threads for parallel stages (defaults to all cores).
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum TreeFormat {
    Edges,
    Parents,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OutFormat {
    Text,
    Csv,
    Json,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Print the ABC index of a tree.
    Abc {
        #[arg(long)]
        tree: PathBuf,
    },
    /// List or count all trees of an order, optionally with a fixed degree sequence.
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long, value_delimiter = ',')]
        degseq: Option<Vec<usize>>,
        #[arg(long)]
        count_only: bool,
        #[arg(long, value_enum, default_value = "edges")]
        format: TreeFormat,
        /// Write to this file instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Build the greedy tree of a degree sequence.
    Greedy {
        #[arg(long, value_delimiter = ',', required = true)]
        degseq: Vec<usize>,
        #[arg(long, value_enum, default_value = "edges")]
        format: TreeFormat,
        /// Also print the ABC index.
        #[arg(long)]
        abc: bool,
    },
    /// Branch profile and path decomposition of a tree.
    Analyze {
        #[arg(long)]
        tree: PathBuf,
        /// `auto` or a vertex id.
        #[arg(long, default_value = "auto")]
        root: String,
        #[arg(long)]
        json: bool,
    },
    /// Apply a transformation and compare the recomputed and closed-form deltas.
    Transform(TransformArgs),
    /// Degree-only bounds of the transformations over their parameter grids.
    Bounds {
        /// `all` or a case id (T, T1, T2, T3, T41, T42, T5, T6, T7).
        #[arg(long, default_value = "all")]
        case: String,
        /// Emit the full CSV table; otherwise only the exception windows.
        #[arg(long)]
        table: bool,
        /// How far beyond the last window edge the table extends.
        #[arg(long, default_value_t = 10)]
        extra: usize,
    },
    /// Threshold table and monotonicity grids of the difference functions.
    Analytic {
        #[command(subcommand)]
        command: AnalyticCommand,
    },
    /// Exhaustive minimizer search with structural claim checks.
    Verify(VerifyArgs),
    /// Greedy tree against the exhaustive minimum for every degree sequence.
    GreedyCheck {
        #[arg(long, default_value_t = 12)]
        n_max: usize,
    },
    /// Randomized agreement between recomputed and closed-form deltas.
    Agreement {
        #[arg(long, default_value = "all")]
        case: String,
        #[arg(long, default_value_t = 100)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Run every claim checker on its constructed violating tree.
    Controls,
}

#[derive(Args, Debug)]
pub struct TransformArgs {
    #[arg(long)]
    pub tree: PathBuf,
    /// SWITCH, T, T1, T2, T3, T41, T42, T5, T6 or T7.
    #[arg(long)]
    pub case: String,
    #[arg(long)]
    pub u: usize,
    #[arg(long)]
    pub v: usize,
    /// Second edge `x-y` for SWITCH.
    #[arg(long)]
    pub x: Option<usize>,
    #[arg(long)]
    pub y: Option<usize>,
    /// `auto` or a vertex id.
    #[arg(long, default_value = "auto")]
    pub root: String,
    /// `json` or `text`.
    #[arg(long, default_value = "text")]
    pub report: String,
    /// Write the transformed tree here.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    #[arg(long, default_value_t = 10)]
    pub n_min: usize,
    #[arg(long, default_value_t = abc_core::verify::DEFAULT_N_MAX)]
    pub n_max: usize,
    /// Search budget: orders above this are refused (at most the hard cap).
    #[arg(long, default_value_t = abc_core::verify::DEFAULT_N_MAX)]
    pub budget: usize,
    /// `all` or a comma-separated list of claim ids.
    #[arg(long, default_value = "all")]
    pub claims: String,
    /// JSON report path.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// CSV summary path.
    #[arg(long)]
    pub csv: Option<PathBuf>,
    #[arg(long, env = CHECKPOINT_ENV)]
    pub checkpoint: Option<PathBuf>,
    #[arg(long, default_value_t = abc_core::verify::EPSILON)]
    pub epsilon: f64,
    /// Evaluate on the calling thread only.
    #[arg(long)]
    pub sequential: bool,
}

#[derive(Subcommand, Debug)]
pub enum AnalyticCommand {
    /// Smallest d(u) with a negative difference for each d(v).
    Thresholds {
        #[arg(long, value_delimiter = ',', default_values_t = [5, 6, 7, 8])]
        dv: Vec<usize>,
        #[arg(long, value_enum, default_value = "text")]
        out: OutFormat,
    },
    /// Monotonicity of a difference function on a grid.
    Grid {
        /// 5 (increasing in x) or 6 (decreasing in x).
        #[arg(long)]
        lemma: u8,
        #[arg(long, value_enum, default_value = "text")]
        out: OutFormat,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    if let Some(threads) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(threads).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    match commands::dispatch(cli.command) {
        Ok(commands::Outcome::Success) => ExitCode::SUCCESS,
        Ok(commands::Outcome::ClaimFailed) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
