//! `condgraph` command-line interface.
//!
//! Graphs are read as graph6, one per line. Conduction graphs may carry
//! loops, which graph6 cannot encode; they are written as the graph6 of the
//! simple part followed by `;loops=` and a comma-separated vertex list.

mod commands;
mod input;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(name = "condgraph", version, about = "Conduction graphs of molecular graphs, computed exactly")]
#[command(after_help = "Loops are written as `<graph6>;loops=<v1>,<v2>,...`.\n\
Exit codes: 0 success, 1 internal error, 2 input error, 3 verification failure.")]
pub struct Cli {
    #[command(flatten)]
    pub common: Common,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct Common {
    /// graph6 input file, or `-` for stdin.
    #[arg(long = "in", global = true, value_name = "FILE")]
    pub input: Option<String>,
    /// Output file (default stdout).
    #[arg(long, global = true, value_name = "FILE")]
    pub out: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Parallel width for the census.
    #[arg(long, global = true, value_parser = clap::value_parser!(u32).range(1..))]
    pub jobs: Option<u32>,
    #[arg(long, short, global = true)]
    pub verbose: bool,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Csv,
    Graph6,
    Text,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Conduction graph of each input graph.
    Conduct {
        /// graph6 strings; read from --in when absent.
        graphs: Vec<String>,
        /// Also list every device with its verdict and the rule behind it.
        #[arg(long)]
        show_verdicts: bool,
    },
    /// Nullity, flags and class code of each input graph.
    Classify { graphs: Vec<String> },
    /// Enumerate and classify all graphs of one order.
    Census {
        #[arg(long, value_enum, default_value_t = ModeArg::Connected)]
        mode: ModeArg,
        /// Order to enumerate; required unless --ingest is given.
        #[arg(long)]
        n: Option<usize>,
        /// Classify the graphs of this graph6 file instead of enumerating.
        #[arg(long, value_name = "FILE")]
        ingest: Option<PathBuf>,
        /// Drop repeated isomorphism classes from ingested input.
        #[arg(long)]
        dedupe: bool,
        /// Keep a record for every graph, not only the positives.
        #[arg(long)]
        all_records: bool,
        /// Write sharded, resumable output into this directory.
        #[arg(long, value_name = "DIR")]
        out_dir: Option<PathBuf>,
        #[arg(long, default_value_t = 16)]
        shards: u32,
        /// Only process these shards (repeatable).
        #[arg(long = "shard")]
        only_shards: Vec<u32>,
    },
    /// Members of the conduction-isomorphic families.
    Family {
        #[arg(long, value_parser = ["corona", "comb", "radialene", "min_deg2", "large_min_deg", "cdc", "appendix"])]
        name: String,
        /// Family parameter; for corona, the number of iterations.
        #[arg(long)]
        k: Option<usize>,
        /// Base graph (graph6) for corona and cdc.
        #[arg(long)]
        base: Option<String>,
        /// Run the full conduction-isomorphism check and the explicit map.
        #[arg(long)]
        verify: bool,
    },
    /// Canonical forms of the input graphs, or, given two graphs as
    /// arguments, an isomorphism between them.
    Iso { graphs: Vec<String> },
    /// Transmission curve of a device as CSV.
    Transmit {
        /// The graph (graph6); read from --in when absent.
        graph: Option<String>,
        #[arg(long)]
        l: usize,
        #[arg(long)]
        r: usize,
        #[arg(long, default_value_t = 1.0)]
        beta_sq: f64,
        #[arg(long, default_value_t = -3.0, allow_hyphen_values = true)]
        e_min: f64,
        #[arg(long, default_value_t = 3.0, allow_hyphen_values = true)]
        e_max: f64,
        #[arg(long, default_value_t = 121)]
        steps: usize,
    },
    /// Print a named fixture graph.
    Fixture {
        name: Option<String>,
        #[arg(long)]
        list: bool,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum ModeArg {
    Connected,
    Chemical,
    Cubic,
}

/// Failure categories, one per exit code.
#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Internal(String),
    #[error("{0}")]
    Input(String),
    #[error("verification failed: {0}")]
    Verification(String),
}

impl CliError {
    fn code(&self) -> u8 {
        match self {
            CliError::Internal(_) => 1,
            CliError::Input(_) => 2,
            CliError::Verification(_) => 3,
        }
    }
}

impl From<condgraph::Error> for CliError {
    fn from(e: condgraph::Error) -> Self {
        match e {
            condgraph::Error::Internal(_) => CliError::Internal(e.to_string()),
            _ => CliError::Input(e.to_string()),
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Internal(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut buf = Vec::new();
    let result = commands::run(&cli, &mut buf);
    let written = match &cli.common.out {
        Some(p) => std::fs::write(p, &buf),
        None => std::io::stdout().write_all(&buf),
    };
    if let Err(e) = written {
        eprintln!("error: {e}");
        return ExitCode::from(1);
    }
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.code())
        }
    }
}
