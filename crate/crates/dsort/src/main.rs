//! Command-line front end: sorting, streaming ingestion, suitability
//! analysis, the parallel performance model, weighted-cost comparison, and
//! a randomized benchmark harness.

mod commands;
mod io;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand};
use decision_sort::{ModelError, SortError, DEFAULT_MAX_DOMAIN_BITS};

/// Exit codes, stable across releases:
/// 0 success, 1 parse or usage error, 2 key out of range, 3 duplicate key
/// without --multiset, 4 domain too large, 5 analysis undefined,
/// 6 worker count not a power of two, 7 benchmark generation infeasible.
#[derive(Debug)]
pub struct Failure {
    pub code: u8,
    pub message: String,
}

impl Failure {
    fn new(code: u8, message: impl Into<String>) -> Self {
        Failure {
            code,
            message: message.into(),
        }
    }

    fn usage(message: impl Into<String>) -> Self {
        Failure::new(1, message)
    }
}

impl From<SortError> for Failure {
    fn from(err: SortError) -> Self {
        let code = match err {
            SortError::KeyOutOfRange { .. } => 2,
            SortError::DuplicateKey { .. } => 3,
            SortError::RangeTooLarge { .. } => 4,
            _ => 1,
        };
        Failure::new(code, err.to_string())
    }
}

impl From<ModelError> for Failure {
    fn from(err: ModelError) -> Self {
        let code = match err {
            ModelError::NonPowerOfTwoWorkers { .. } => 6,
            _ => 5,
        };
        Failure::new(code, err.to_string())
    }
}

impl From<std::io::Error> for Failure {
    fn from(err: std::io::Error) -> Self {
        Failure::new(1, err.to_string())
    }
}

#[derive(Parser)]
#[command(
    name = "dsort",
    version,
    about = "Sort integer keys over a known domain without comparisons"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Sort newline-delimited integers from a file or standard input.
    Sort(SortArgs),
    /// Ingest batches separated by "---" lines, printing a sorted snapshot
    /// after each batch.
    Stream(StreamArgs),
    /// Report how suitable a problem size (n, k) is: growth exponent, hit
    /// probability, regime, and exact costs.
    Analyze(AnalyzeArgs),
    /// Evaluate the parallel performance model for (n, k, p) or a rows file.
    Model(ModelArgs),
    /// Compare weighted operation costs against instrumented bubble sort
    /// and quicksort.
    Compare(CompareArgs),
    /// Time the sorts on seeded random inputs and emit CSV.
    Bench(BenchArgs),
}

#[derive(Args)]
struct DomainArgs {
    /// Lower bound of the key domain (inferred from the input if omitted).
    #[arg(long, requires = "upper", allow_hyphen_values = true)]
    lower: Option<i64>,
    /// Upper bound of the key domain.
    #[arg(long, requires = "lower", allow_hyphen_values = true)]
    upper: Option<i64>,
    /// Cap on the number of domain slots.
    #[arg(long, value_name = "BITS", default_value_t = DEFAULT_MAX_DOMAIN_BITS)]
    max_domain_bits: u64,
}

#[derive(Args)]
struct SortArgs {
    /// Input file; standard input if omitted or "-".
    input: Option<PathBuf>,
    /// Output file; standard output if omitted.
    #[arg(short, long)]
    output: Option<PathBuf>,
    #[command(flatten)]
    domain: DomainArgs,
    /// Allow repeated keys (multiset sort).
    #[arg(long)]
    multiset: bool,
    /// Sort with P parallel workers; "auto" picks the hardware parallelism.
    #[arg(long, value_name = "P", num_args = 0..=1, default_missing_value = "auto", value_parser = parse_workers)]
    workers: Option<Workers>,
    /// Print an operation-counter summary as JSON on standard error.
    #[arg(long)]
    stats: bool,
}

#[derive(Args)]
struct StreamArgs {
    /// Input file; standard input if omitted or "-".
    input: Option<PathBuf>,
    /// Output file; standard output if omitted.
    #[arg(short, long)]
    output: Option<PathBuf>,
    /// Lower bound of the key domain (required: later batches must fit the
    /// domain declared up front).
    #[arg(long, allow_hyphen_values = true)]
    lower: i64,
    /// Upper bound of the key domain.
    #[arg(long, allow_hyphen_values = true)]
    upper: i64,
    /// Cap on the number of domain slots.
    #[arg(long, value_name = "BITS", default_value_t = DEFAULT_MAX_DOMAIN_BITS)]
    max_domain_bits: u64,
}

#[derive(Args)]
struct AnalyzeArgs {
    /// Input size n.
    #[arg(value_parser = parse_u128)]
    n: u128,
    /// Domain size k.
    #[arg(value_parser = parse_u128)]
    k: u128,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Args)]
struct ModelArgs {
    /// Input size n.
    #[arg(value_parser = parse_u128, required_unless_present = "rows")]
    n: Option<u128>,
    /// Domain size k.
    #[arg(value_parser = parse_u128, required_unless_present = "rows")]
    k: Option<u128>,
    /// Worker count p (must be a power of two).
    #[arg(required_unless_present = "rows")]
    p: Option<u64>,
    /// File of "n k p" rows; evaluates every row into one table.
    #[arg(long, conflicts_with_all = ["n", "k", "p"])]
    rows: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Args)]
struct CompareArgs {
    /// Input file; standard input if omitted or "-".
    input: Option<PathBuf>,
    /// Output file; standard output if omitted.
    #[arg(short, long)]
    output: Option<PathBuf>,
    #[command(flatten)]
    domain: DomainArgs,
    /// Relative cost of a swap versus a read/write/compare step.
    #[arg(long, default_value_t = 3.0, value_parser = parse_positive_weight)]
    swap_weight: f64,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Args)]
struct BenchArgs {
    /// Comma-separated input sizes.
    #[arg(long, value_delimiter = ',', default_value = "1000,10000,100000")]
    sizes: Vec<usize>,
    /// Domain size as a multiple of n (k = round(factor * n)).
    #[arg(long, default_value_t = 4.0)]
    range_factor: f64,
    /// Seed for the key-set generator; the same seed reproduces the same
    /// key sets and counters.
    #[arg(long, default_value_t = 1)]
    seed: u64,
    /// Output file; standard output if omitted.
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug)]
enum Workers {
    Auto,
    Count(usize),
}

impl Workers {
    fn resolve(self) -> usize {
        match self {
            Workers::Auto => std::thread::available_parallelism().map_or(1, |p| p.get()),
            Workers::Count(count) => count,
        }
    }
}

fn parse_workers(raw: &str) -> Result<Workers, String> {
    if raw == "auto" {
        return Ok(Workers::Auto);
    }
    match raw.parse::<usize>() {
        Ok(0) => Err("worker count must be at least 1".to_string()),
        Ok(count) => Ok(Workers::Count(count)),
        Err(_) => Err(format!("expected a worker count or \"auto\", got {raw:?}")),
    }
}

fn parse_u128(raw: &str) -> Result<u128, String> {
    raw.parse::<u128>()
        .map_err(|_| format!("expected a non-negative integer, got {raw:?}"))
}

fn parse_positive_weight(raw: &str) -> Result<f64, String> {
    let weight: f64 = raw
        .parse()
        .map_err(|_| format!("expected a number, got {raw:?}"))?;
    if weight > 0.0 {
        Ok(weight)
    } else {
        Err("weight must be positive".to_string())
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            // Help and version requests are not failures.
            if matches!(
                err.kind(),
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion
            ) {
                print!("{err}");
                return ExitCode::SUCCESS;
            }
            eprint!("{err}");
            return ExitCode::from(1);
        }
    };

    let result = match cli.command {
        Command::Sort(args) => commands::sort(args),
        Command::Stream(args) => commands::stream(args),
        Command::Analyze(args) => commands::analyze(args),
        Command::Model(args) => commands::model(args),
        Command::Compare(args) => commands::compare(args),
        Command::Bench(args) => commands::bench(args),
    };

    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(failure) => {
            eprintln!("dsort: {}", failure.message);
            ExitCode::from(failure.code)
        }
    }
}
