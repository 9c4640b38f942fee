mod cache;
mod commands;

use std::fs;
use std::io::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{Context, Result};
use catalan_core::render::Format;
use clap::{Parser, Subcommand};

use cache::Cache;
use commands::{CountMode, DataSource, DrawingKind, Limits, Outcome, RenderRequest, ReportFormat};

#[derive(Parser)]
#[command(
    name = "catalan",
    version,
    about = "Catalan tuples, Catalan tables and the quartic-model N-point functions"
)]
struct Cli {
    /// Lift the default size limits (tuples k <= 12, tables k <= 9, verify N <= 14).
    #[arg(long, global = true)]
    unsafe_limits: bool,

    /// Cache directory for enumerations.
    #[arg(long, global = true, env = "CATALAN_CACHE_DIR")]
    cache_dir: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Catalan tuples of length k, one record per line.
    Tuples {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Catalan tables of length k, one record per line.
    Tables {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// c_k, c_(k+1), d_k, f_k, with optional cross-checks.
    Count {
        #[arg(long)]
        k: usize,
        #[arg(long, value_enum, default_value = "closed")]
        mode: CountMode,
        #[arg(long, value_enum, default_value = "text")]
        format: ReportFormat,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Checks the table expansion against the recursion on random data.
    Verify {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1)]
        trials: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Monomial records for all tables with N points, or for one table.
    Expand {
        #[arg(long, conflicts_with = "table")]
        n: Option<usize>,
        /// Table as nested JSON arrays, e.g. [[0],[1,0],[0]].
        #[arg(long)]
        table: Option<String>,
        /// Model data file; adds exact values and the total.
        #[arg(long, conflicts_with = "seed")]
        data: Option<PathBuf>,
        /// Evaluate on seeded random model data instead of a file.
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Chord diagrams of tables and drawings of a tuple's trees.
    Render {
        #[arg(long)]
        table: Option<String>,
        /// Tuple as a JSON array, e.g. [2,0,1,0].
        #[arg(long)]
        tuple: Option<String>,
        /// Render every table of length k.
        #[arg(long)]
        k: Option<usize>,
        #[arg(long, value_enum, value_delimiter = ',')]
        kind: Vec<DrawingKind>,
        #[arg(long, default_value = "svg")]
        format: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn run(cli: Cli) -> Result<Outcome> {
    let limits = Limits {
        unsafe_limits: cli.unsafe_limits,
    };
    let cache = cli.cache_dir.map(Cache::new);
    let (outcome, out) = match cli.command {
        Command::Tuples { k, out } => (commands::tuples(k, &limits, cache.as_ref())?, out),
        Command::Tables { k, out } => (commands::tables(k, &limits, cache.as_ref())?, out),
        Command::Count {
            k,
            mode,
            format,
            out,
        } => (commands::count(k, mode, format, &limits)?, out),
        Command::Verify {
            n,
            seed,
            trials,
            out,
        } => (commands::verify(n, seed, trials, &limits)?, out),
        Command::Expand {
            n,
            table,
            data,
            seed,
            out,
        } => {
            let source = match (data, seed) {
                (Some(path), _) => Some(DataSource::File(path)),
                (None, Some(seed)) => Some(DataSource::Seed(seed)),
                (None, None) => None,
            };
            (
                commands::expand(n, table.as_deref(), source.as_ref(), &limits)?,
                out,
            )
        }
        Command::Render {
            table,
            tuple,
            k,
            kind,
            format,
            out,
        } => {
            let format: Format = format.parse()?;
            let req = RenderRequest {
                table: table.as_deref(),
                tuple: tuple.as_deref(),
                k,
                kinds: &kind,
                format,
                out: out.as_deref(),
            };
            (commands::render(&req, &limits)?, None)
        }
    };
    match out {
        Some(path) => {
            fs::write(&path, &outcome.stdout)
                .with_context(|| format!("writing {}", path.display()))?;
            Ok(Outcome {
                stdout: String::new(),
                passed: outcome.passed,
            })
        }
        None => Ok(outcome),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(outcome) => {
            let mut stdout = std::io::stdout().lock();
            if stdout
                .write_all(outcome.stdout.as_bytes())
                .and_then(|_| stdout.flush())
                .is_err()
            {
                return ExitCode::from(2);
            }
            if outcome.passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::FAILURE
            }
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            if let Some(catalan_core::Error::LimitExceeded { .. }) = e.downcast_ref() {
                eprintln!("pass --unsafe-limits to go beyond the default limits");
            }
            ExitCode::from(2)
        }
    }
}
