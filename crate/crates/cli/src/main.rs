use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

mod bench;
mod commands;

use commands::{CliError, Output};

#[derive(Parser, Debug)]
#[command(
    name = "sqfree",
    version,
    about = "Exact square-free factorization over the rationals"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Square-free factorization f = P_1 P_2^2 ... P_m^m.
    Factor(PolyArgs),
    /// The multiplicity polynomial M_f and its ingredients.
    Mf(PolyArgs),
    /// Degrees of the components, read from the characteristic polynomial of M_f(C_f0).
    Forecast(PolyArgs),
    /// Run every method and check structure and agreement.
    Verify(PolyArgs),
    /// Time the methods on seeded random instances.
    Bench(BenchArgs),
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    Companion,
    Tobey,
    Yun,
    All,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum CoeffArg {
    Integer,
    Rational,
}

#[derive(Args, Debug, Clone)]
pub struct PolyArgs {
    /// Polynomial in x, e.g. "x^4 - 4*x + 3"; `-` reads standard input.
    pub poly: String,
    #[arg(long, value_enum, default_value_t = MethodArg::Companion)]
    pub method: MethodArg,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Also print C_f0 and M_f(C_f0).
    #[arg(long)]
    pub show_matrix: bool,
}

#[derive(Args, Debug, Clone)]
pub struct BenchArgs {
    #[arg(long)]
    pub seed: u64,
    #[arg(long, default_value_t = 10)]
    pub trials: usize,
    #[arg(long, default_value_t = 1)]
    pub min_degree: usize,
    #[arg(long, default_value_t = 20)]
    pub max_degree: usize,
    #[arg(long, default_value_t = 5)]
    pub max_mult: usize,
    #[arg(long, value_enum, default_value_t = CoeffArg::Integer)]
    pub coeffs: CoeffArg,
    #[arg(long, value_enum, default_value_t = MethodArg::Companion)]
    pub method: MethodArg,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Write CSV (or JSON) here instead of standard output.
    #[arg(long)]
    pub output: Option<PathBuf>,
    /// Report 0 for every timing so output is byte-identical across runs.
    #[arg(long)]
    pub no_timing: bool,
}

fn read_poly(arg: &str) -> Result<String, CliError> {
    if arg != "-" {
        return Ok(arg.to_string());
    }
    let mut buf = String::new();
    std::io::stdin()
        .read_to_string(&mut buf)
        .map_err(|e| CliError::Io(e.to_string()))?;
    Ok(buf)
}

fn run(cli: Cli) -> Result<Output, CliError> {
    match cli.command {
        Command::Factor(args) => commands::run_factor(&read_poly(&args.poly)?, &args),
        Command::Mf(args) => commands::run_mf(&read_poly(&args.poly)?, &args),
        Command::Forecast(args) => commands::run_forecast(&read_poly(&args.poly)?, &args),
        Command::Verify(args) => commands::run_verify(&read_poly(&args.poly)?, &args),
        Command::Bench(args) => bench::run_bench(&args),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(out) => {
            for w in &out.warnings {
                eprintln!("warning: {w}");
            }
            print!("{}", out.stdout);
            if out.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(3)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
