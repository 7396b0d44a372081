//! `lagrass`: exact rank tables, block reports, matrix export, and
//! Lagrangian kernel checks for the contraction relations.

use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use lagrass::plucker::FormConvention;
use lagrass_cli::commands::{self, MatrixFormat, DEFAULT_MAX_N};
use lagrass_cli::CliError;

#[derive(Parser)]
#[command(
    name = "lagrass",
    version,
    about = "Exact linear algebra for the relations cutting out the Lagrangian Grassmannian"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ConventionArg {
    /// All coefficients +1; reproduces the published rank table.
    Plain,
    /// Koszul signs; the convention Lagrangian Pluecker vectors satisfy.
    Signed,
}

impl From<ConventionArg> for FormConvention {
    fn from(value: ConventionArg) -> Self {
        match value {
            ConventionArg::Plain => FormConvention::Plain,
            ConventionArg::Signed => FormConvention::Signed,
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum FormatArg {
    Mtx,
    Csv,
}

impl From<FormatArg> for MatrixFormat {
    fn from(value: FormatArg) -> Self {
        match value {
            FormatArg::Mtx => MatrixFormat::Mtx,
            FormatArg::Csv => MatrixFormat::Csv,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Rank, nullity, and per-block ranks over a list of characteristics.
    Table {
        #[arg(long, default_value_t = 6)]
        n: u32,
        /// Comma-separated characteristics: 0 or primes.
        #[arg(long, value_delimiter = ',', default_value = "0,2,3,5,7")]
        chars: Vec<u64>,
        #[arg(long, value_enum, default_value_t = ConventionArg::Plain)]
        convention: ConventionArg,
        /// Size guard; sizes above this are refused (exit 4).
        #[arg(long, default_value_t = DEFAULT_MAX_N)]
        max_n: u32,
        #[arg(long)]
        json: bool,
    },
    /// Export the relation matrix (Matrix Market or CSV), byte-exact.
    Matrix {
        #[arg(long, default_value_t = 6)]
        n: u32,
        #[arg(long, value_enum, default_value_t = ConventionArg::Plain)]
        convention: ConventionArg,
        #[arg(long, value_enum, default_value_t = FormatArg::Mtx)]
        format: FormatArg,
        /// Output path; prints to stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, default_value_t = DEFAULT_MAX_N)]
        max_n: u32,
    },
    /// Census of pivot indices by number of contained dual pairs.
    Partition {
        #[arg(long, default_value_t = 6)]
        n: u32,
        #[arg(long, default_value_t = DEFAULT_MAX_N)]
        max_n: u32,
        #[arg(long)]
        json: bool,
    },
    /// Connected components of the relation matrix.
    Blocks {
        #[arg(long, default_value_t = 6)]
        n: u32,
        #[arg(long, value_enum, default_value_t = ConventionArg::Plain)]
        convention: ConventionArg,
        #[arg(long, default_value_t = DEFAULT_MAX_N)]
        max_n: u32,
        #[arg(long)]
        json: bool,
    },
    /// Sample random Lagrangians and check kernel membership.
    /// Exits 1 unless every sample passes under the chosen convention.
    Verify {
        #[arg(long, default_value_t = 6)]
        n: u32,
        /// Field characteristic to sample over (prime).
        #[arg(long, default_value_t = 5)]
        p: u64,
        #[arg(long, default_value_t = 100)]
        samples: u32,
        /// Base seed; sample i uses seed + i.
        #[arg(long, default_value_t = 7)]
        seed: u64,
        /// Transvections applied per sample.
        #[arg(long, default_value_t = 40)]
        steps: u32,
        /// Convention under test. Signed is the one Lagrangians satisfy
        /// in every characteristic; plain coincides with it mod 2.
        #[arg(long, value_enum, default_value_t = ConventionArg::Signed)]
        convention: ConventionArg,
        #[arg(long, default_value_t = DEFAULT_MAX_N)]
        max_n: u32,
        #[arg(long)]
        json: bool,
    },
    /// Rank drops across several sizes and characteristics.
    Scan {
        /// Comma-separated sizes.
        #[arg(long, value_delimiter = ',', default_value = "2,3,4,5,6,7")]
        ns: Vec<u32>,
        #[arg(long, value_delimiter = ',', default_value = "0,2,3,5,7")]
        chars: Vec<u64>,
        #[arg(long, value_enum, default_value_t = ConventionArg::Plain)]
        convention: ConventionArg,
        #[arg(long, default_value_t = DEFAULT_MAX_N)]
        max_n: u32,
        #[arg(long)]
        json: bool,
    },
}

/// Writes to stdout, treating a closed pipe as a clean exit.
fn print_out(text: &str) -> Result<(), CliError> {
    use std::io::Write;
    let mut out = std::io::stdout().lock();
    match out.write_all(text.as_bytes()).and_then(|_| out.flush()) {
        Ok(()) => Ok(()),
        Err(e) if e.kind() == std::io::ErrorKind::BrokenPipe => std::process::exit(0),
        Err(e) => Err(CliError::Io(format!("writing to stdout failed: {e}"))),
    }
}

fn emit<T: Serialize>(
    report: &T,
    render: impl Fn(&T) -> String,
    json: bool,
) -> Result<(), CliError> {
    if json {
        let text = serde_json::to_string_pretty(report)
            .map_err(|e| CliError::Io(format!("json encoding failed: {e}")))?;
        print_out(&format!("{text}\n"))
    } else {
        print_out(&render(report))
    }
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Table { n, chars, convention, max_n, json } => {
            let report = commands::table_report(n, &chars, convention.into(), max_n)?;
            emit(&report, |r| r.render(), json)
        }
        Command::Matrix { n, convention, format, out, max_n } => {
            commands::write_matrix(n, convention.into(), format.into(), out.as_deref(), max_n)
        }
        Command::Partition { n, max_n, json } => {
            let report = commands::partition_report(n, max_n)?;
            emit(&report, |r| r.render(), json)
        }
        Command::Blocks { n, convention, max_n, json } => {
            let report = commands::blocks_report(n, convention.into(), max_n)?;
            emit(&report, |r| r.render(), json)
        }
        Command::Verify { n, p, samples, seed, steps, convention, max_n, json } => {
            let report = commands::verify_report(n, p, samples, seed, steps, max_n)?;
            emit(&report, |r| r.render(), json)?;
            let convention: FormConvention = convention.into();
            let passed = report.pass_count(&convention.to_string());
            if passed != report.samples {
                return Err(CliError::VerificationFailed(format!(
                    "{passed}/{} samples in the kernel under the {convention} convention",
                    report.samples
                )));
            }
            Ok(())
        }
        Command::Scan { ns, chars, convention, max_n, json } => {
            let report = commands::scan_report(&ns, &chars, convention.into(), max_n)?;
            emit(&report, |r| r.render(), json)
        }
    }
}

fn main() {
    let cli = Cli::parse();
    if let Err(e) = run(cli) {
        eprintln!("error: {e}");
        std::process::exit(e.exit_code());
    }
}
