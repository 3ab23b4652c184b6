//! `ltc`: generate constructions, check coverings, compute thresholds and run
//! verification suites.
//!
//! Exit codes: 0 success (or the property holds), 1 a valid negative answer,
//! 2 usage or input errors.

mod commands;
mod range;
mod report;

use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};

use crate::range::NRange;
use crate::report::RunReport;

#[derive(Debug, Parser)]
#[command(
    name = "ltc",
    version,
    about = "Loose-triangle covering toolkit for 3-graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum GenKind {
    C1,
    C2,
    Turan,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum KindArg {
    Codegree,
    Degree,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SuiteArg {
    Lemma31,
    Claim41,
    Claim42,
    Structure,
    Turan,
    Constructions,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Write a construction to a file and print its parameters.
    Gen {
        kind: GenKind,
        #[arg(long)]
        n: usize,
        /// Number of parts, for turan.
        #[arg(long)]
        r: Option<usize>,
        #[arg(long)]
        out: std::path::PathBuf,
    },
    /// Report which vertices lie in a copy of the loose triangle.
    CheckCover {
        path: std::path::PathBuf,
        #[arg(long)]
        vertex: Option<usize>,
        /// Try the link-graph construction before the exact search.
        #[arg(long)]
        fast: bool,
    },
    /// Largest minimum degree among n-vertex graphs with no covering.
    Thresholds {
        kind: KindArg,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        shards: Option<usize>,
        #[arg(long, conflicts_with_all = ["pruned", "randomized"])]
        canonical: bool,
        #[arg(long, conflicts_with = "randomized")]
        pruned: bool,
        #[arg(long)]
        randomized: bool,
        #[arg(long, requires = "randomized")]
        trials: Option<u64>,
        #[arg(long, requires = "randomized")]
        seed: Option<u64>,
    },
    /// Run a verification suite; exits 1 on any violation.
    Verify {
        suite: SuiteArg,
        #[arg(long)]
        trials: Option<u64>,
        #[arg(long)]
        seed: Option<u64>,
        /// A single order or an inclusive range `a..b`.
        #[arg(long)]
        n: Option<NRange>,
        /// Orders for the structure suite, `a..b`.
        #[arg(long)]
        m: Option<NRange>,
    },
}

/// A finished command: what to print and how to exit.
pub struct Outcome {
    pub payload: serde_json::Value,
    pub input: Vec<u8>,
    pub seed: Option<u64>,
    pub code: u8,
}

fn main() -> ExitCode {
    let argv: Vec<String> = std::env::args().collect();
    let cli = Cli::parse();
    let start = Instant::now();
    let result = match cli.command {
        Command::Gen { kind, n, r, out } => commands::gen(kind, n, r, &out),
        Command::CheckCover { path, vertex, fast } => commands::check_cover(&path, vertex, fast),
        Command::Thresholds {
            kind,
            n,
            shards,
            canonical,
            pruned,
            randomized,
            trials,
            seed,
        } => {
            let mode = commands::mode_from_flags(n, canonical, pruned, randomized, trials, seed);
            mode.and_then(|m| commands::thresholds(kind, n, m, shards))
        }
        Command::Verify {
            suite,
            trials,
            seed,
            n,
            m,
        } => commands::verify(suite, trials, seed, n, m),
    };
    match result {
        Ok(out) => {
            let echo = argv.iter().skip(1).cloned().collect();
            let report = RunReport::new(echo, &out.input, out.seed, out.payload, start.elapsed());
            println!("{}", report.to_json());
            ExitCode::from(out.code)
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
