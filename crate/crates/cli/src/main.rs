//! `pkern`: tables, cross-checks, benchmarks and truncated-series reports
//! for the composition kernels.

/// `println!` that ends the process quietly once stdout is closed, so piping
/// into `head` does not turn into a panic.
macro_rules! outln {
    ($($arg:tt)*) => {
        $crate::emit(&format!($($arg)*))
    };
}

mod bench;
mod cache;
mod commands;
mod verify;

use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use partition_kernels::{Error, KernelKind, Method};

#[derive(Parser)]
#[command(name = "pkern", version, about = "Exact composition kernels and derived sequences")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print K(n) for n = 1..=upto.
    Table(TableArgs),
    /// Print a single K(n).
    Kernel(KernelArgs),
    /// Cross-check every method and oracle.
    Verify(VerifyArgs),
    /// Time each method at each n.
    Bench(BenchArgs),
    /// Even-index Bernoulli numbers B_2, B_4, ...
    Bernoulli(SeqArgs),
    /// Even-index Euler numbers E_2, E_4, ...
    Euler(SeqArgs),
    /// Gamma-expansion coefficients a_1, a_2, ...
    ACoeff(SeqArgs),
    /// Evaluate a truncated expansion against its reference.
    Eval(EvalArgs),
    /// List the compositions of n, one per line.
    Compositions(CompositionsArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    B,
    E,
}

impl From<Kind> for KernelKind {
    fn from(k: Kind) -> Self {
        match k {
            Kind::B => KernelKind::B,
            Kind::E => KernelKind::E,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Recursion,
    Compositions,
    Determinant,
}

impl From<MethodArg> for Method {
    fn from(m: MethodArg) -> Self {
        match m {
            MethodArg::Recursion => Method::Recursion,
            MethodArg::Compositions => Method::Compositions,
            MethodArg::Determinant => Method::Determinant,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Plain,
    Json,
    Csv,
}

#[derive(Args)]
struct TableArgs {
    #[arg(long, value_enum)]
    kind: Kind,
    #[arg(long)]
    upto: usize,
    #[arg(long, value_enum, default_value = "recursion")]
    method: MethodArg,
    #[arg(long, value_enum, default_value = "plain")]
    format: Format,
    /// Allow the composition sum beyond n = 22.
    #[arg(long)]
    force: bool,
}

#[derive(Args)]
struct KernelArgs {
    #[arg(long, value_enum)]
    kind: Kind,
    #[arg(long)]
    n: usize,
    #[arg(long, value_enum, default_value = "recursion")]
    method: MethodArg,
    #[arg(long)]
    force: bool,
}

#[derive(Args)]
struct VerifyArgs {
    /// Depth for the exact (recursion, determinant, oracle) checks.
    #[arg(long)]
    exact: usize,
    /// Depth for the checks that enumerate compositions.
    #[arg(long)]
    brute: usize,
    #[arg(long)]
    force: bool,
}

#[derive(Args)]
struct BenchArgs {
    #[arg(long, value_enum, default_value = "b")]
    kind: Kind,
    #[arg(long)]
    upto: usize,
    #[arg(long, default_value_t = 5)]
    repeats: usize,
    #[arg(long, value_enum, default_value = "csv")]
    format: Format,
}

#[derive(Args)]
struct SeqArgs {
    #[arg(long)]
    upto: usize,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
}

#[derive(Clone, Copy, ValueEnum)]
enum Function {
    Gamma,
    Digamma,
    Polygamma,
    Hurwitz,
}

#[derive(Args)]
struct EvalArgs {
    #[arg(value_enum)]
    function: Function,
    #[arg(long, allow_hyphen_values = true)]
    x: f64,
    /// Polygamma order.
    #[arg(long)]
    y: Option<usize>,
    /// Hurwitz shift.
    #[arg(long)]
    m0: Option<usize>,
    #[arg(long)]
    terms: usize,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
    /// Working precision in decimal digits.
    #[arg(long, default_value_t = partition_kernels::specfun::DEFAULT_DIGITS)]
    digits: usize,
}

#[derive(Args)]
struct CompositionsArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    force: bool,
}

/// Why a command stopped; each maps to one exit code.
#[derive(Debug)]
pub enum Failure {
    /// A cross-check found differing values.
    Mismatch,
    /// Bad flags, bounds or arguments.
    Usage(String),
    /// Refused an enumeration beyond the brute-force limit.
    TooLarge(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Mismatch => 1,
            Failure::Usage(_) => 2,
            Failure::TooLarge(_) => 3,
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

pub fn emit(line: &str) {
    let mut out = std::io::stdout().lock();
    if writeln!(out, "{line}").is_err() {
        std::process::exit(0);
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let _ = e.print();
            return ExitCode::from(if code == 0 { 0 } else { 2 });
        }
    };
    let result = match cli.command {
        Command::Table(a) => commands::table(a),
        Command::Kernel(a) => commands::kernel(a),
        Command::Verify(a) => verify::run(a),
        Command::Bench(a) => bench::run(a),
        Command::Bernoulli(a) => commands::bernoulli(a),
        Command::Euler(a) => commands::euler(a),
        Command::ACoeff(a) => commands::a_coeff(a),
        Command::Eval(a) => commands::eval(a),
        Command::Compositions(a) => commands::compositions(a),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            match &f {
                Failure::Mismatch => {}
                Failure::Usage(msg) | Failure::TooLarge(msg) => eprintln!("error: {msg}"),
            }
            ExitCode::from(f.code())
        }
    }
}
