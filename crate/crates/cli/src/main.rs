use std::fs;
use std::io::{self, Write};
use std::ops::RangeInclusive;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use dompoly::{Family, HARD_CAP};

mod commands;
mod output;

#[derive(Parser, Debug)]
#[command(name = "dompoly", version, about = "Exact domination polynomials of graphs and cactus chains")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Compute D(G, x) for a chain family member or an edge-list file.
    Compute(ComputeArgs),
    /// Cross-check every chain identity against exhaustive enumeration.
    Verify(VerifyArgs),
    /// Print the dominating-set counts D(X_n, 1) of a family.
    Sequence(SequenceArgs),
    /// Time the oracle against the chain recurrences.
    Bench(BenchArgs),
}

#[derive(Args, Debug, Clone)]
struct CommonArgs {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Largest graph the enumeration oracle accepts.
    #[arg(long, default_value_t = dompoly::DEFAULT_CAP, value_parser = parse_cap)]
    cap: usize,
    /// Worker threads for enumeration.
    #[arg(long, env = "DOMPOLY_THREADS")]
    threads: Option<usize>,
    /// Write to this file instead of stdout.
    #[arg(long, short)]
    output: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct ComputeArgs {
    /// Chain family: T, Q, O, Q+e, Qtri, Q2, Qp, O+e, Otri, O2, Op.
    #[arg(long, value_parser = parse_family, conflicts_with = "file", requires = "n")]
    family: Option<Family>,
    /// Index `N` or inclusive range `A..B`.
    #[arg(long, value_parser = parse_range)]
    n: Option<RangeInclusive<usize>>,
    /// Edge-list file.
    #[arg(long, required_unless_present = "family")]
    file: Option<PathBuf>,
    /// Defaults to `recurrence` for families and `oracle` for files.
    #[arg(long, value_enum)]
    method: Option<MethodArg>,
    #[command(flatten)]
    common: CommonArgs,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    /// Largest chain index checked.
    #[arg(long, default_value_t = 6)]
    max_n: usize,
    /// Check only the chain this family belongs to.
    #[arg(long, value_parser = parse_family)]
    family: Option<Family>,
    /// Also list the literal forms and rejected gadget constructions.
    #[arg(long)]
    literal_paper: bool,
    #[command(flatten)]
    common: CommonArgs,
}

#[derive(Args, Debug)]
struct SequenceArgs {
    #[arg(long, value_parser = parse_family)]
    family: Family,
    #[arg(long)]
    max_n: usize,
    #[command(flatten)]
    common: CommonArgs,
}

#[derive(Args, Debug)]
struct BenchArgs {
    #[arg(long, value_parser = parse_family, default_value = "T")]
    family: Family,
    /// Index `N` or inclusive range `A..B`.
    #[arg(long, value_parser = parse_range, default_value = "1..8")]
    n: RangeInclusive<usize>,
    /// Timed runs per cell; the fastest is reported.
    #[arg(long, default_value_t = 3, value_parser = clap::value_parser!(u32).range(1..))]
    repeat: u32,
    #[command(flatten)]
    common: CommonArgs,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum MethodArg {
    Oracle,
    Vertex,
    Edge,
    Product,
    Recurrence,
}

impl MethodArg {
    fn name(self) -> &'static str {
        match self {
            MethodArg::Oracle => "oracle",
            MethodArg::Vertex => "vertex",
            MethodArg::Edge => "edge",
            MethodArg::Product => "product",
            MethodArg::Recurrence => "recurrence",
        }
    }
}

fn parse_family(s: &str) -> Result<Family, String> {
    s.parse::<Family>().map_err(|e| e.to_string())
}

fn parse_cap(s: &str) -> Result<usize, String> {
    let cap: usize = s.parse().map_err(|e| format!("{e}"))?;
    if cap > HARD_CAP {
        return Err(format!("cap {cap} exceeds the hard limit {HARD_CAP}"));
    }
    Ok(cap)
}

fn parse_range(s: &str) -> Result<RangeInclusive<usize>, String> {
    let num = |t: &str| t.trim().parse::<usize>().map_err(|e| format!("bad index {t:?}: {e}"));
    let (a, b) = match s.split_once("..") {
        Some((a, b)) => (num(a)?, num(b.strip_prefix('=').unwrap_or(b))?),
        None => {
            let n = num(s)?;
            (n, n)
        }
    };
    if a > b {
        return Err(format!("empty range {s}"));
    }
    Ok(a..=b)
}

/// Failure classes, each with its own exit status.
#[derive(Debug)]
enum Failure {
    Usage(String),
    Mismatch,
    Cap(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Usage(_) => 1,
            Failure::Mismatch => 2,
            Failure::Cap(_) => 3,
        }
    }
}

impl From<dompoly::Error> for Failure {
    fn from(e: dompoly::Error) -> Self {
        match e {
            dompoly::Error::CapExceeded { .. } => Failure::Cap(e.to_string()),
            other => Failure::Usage(other.to_string()),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn emit(common: &CommonArgs, text: &str) -> Result<(), Failure> {
    match &common.output {
        Some(path) => fs::write(path, text)
            .map_err(|e| Failure::Usage(format!("cannot write {}: {e}", path.display()))),
        None => {
            let mut out = io::stdout().lock();
            out.write_all(text.as_bytes())?;
            out.flush()?;
            Ok(())
        }
    }
}

fn configure_threads(common: &CommonArgs) -> Result<(), Failure> {
    if let Some(t) = common.threads {
        rayon::ThreadPoolBuilder::new()
            .num_threads(t)
            .build_global()
            .map_err(|e| Failure::Usage(format!("thread pool: {e}")))?;
    }
    Ok(())
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Compute(args) => {
            configure_threads(&args.common)?;
            let text = commands::compute(&args)?;
            emit(&args.common, &text)
        }
        Command::Verify(args) => {
            configure_threads(&args.common)?;
            let (text, ok) = commands::verify(&args)?;
            emit(&args.common, &text)?;
            if ok {
                Ok(())
            } else {
                Err(Failure::Mismatch)
            }
        }
        Command::Sequence(args) => {
            configure_threads(&args.common)?;
            let text = commands::sequence(&args)?;
            emit(&args.common, &text)
        }
        Command::Bench(args) => {
            configure_threads(&args.common)?;
            let text = commands::bench(&args)?;
            emit(&args.common, &text)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            match &f {
                Failure::Usage(msg) | Failure::Cap(msg) => eprintln!("error: {msg}"),
                Failure::Mismatch => eprintln!("verification failed: some adopted identities do not match"),
            }
            ExitCode::from(f.code())
        }
    }
}
