use std::process::ExitCode;

use alcove_cli::commands::{self, Method};
use alcove_cli::suites::{self, Suite, VerifyArgs};
use alcove_cli::{load_limits, CliError, Report};
use clap::{Parser, Subcommand, ValueEnum};

#[derive(Parser)]
#[command(name = "alcove", version, about = "Dominant alcoves, abelian ideals and powers of the Euler product")]
struct Cli {
    /// Print a check table instead of the JSON report.
    #[arg(long, global = true)]
    summary: bool,
    /// Lift every scale guard.
    #[arg(long, global = true)]
    allow_big: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Series,
    Alcove,
    Both,
}

#[derive(Subcommand)]
enum Command {
    /// Coefficients of prod (1 - x^n)^dim g.
    Coeffs {
        #[arg(long = "type")]
        ty: String,
        #[arg(long, default_value_t = 12)]
        kmax: usize,
        #[arg(long, value_enum, default_value = "series")]
        method: MethodArg,
    },
    /// Dominant alcoves up to a length.
    Alcoves {
        #[arg(long = "type")]
        ty: String,
        #[arg(long, default_value_t = 6)]
        max_length: u32,
        /// Keep only alcoves inside twice the fundamental alcove.
        #[arg(long)]
        wf2_only: bool,
    },
    /// Abelian ideals of the Borel subalgebra and their alcoves.
    Ideals {
        #[arg(long = "type")]
        ty: String,
    },
    /// The universal polynomials f_k(s).
    Fk {
        #[arg(long, default_value_t = 6)]
        kmax: usize,
        #[arg(long, allow_hyphen_values = true)]
        eval: Option<i64>,
        /// Probe f_k(24) for zeros.
        #[arg(long)]
        lehmer: bool,
    },
    /// m-cores and the type A correspondence.
    Mcore {
        #[arg(long)]
        m: usize,
        /// Comma-separated parts, e.g. 3,2,1.
        #[arg(long)]
        partition: Option<String>,
        #[arg(long, default_value_t = 3)]
        kmax: usize,
        #[arg(long, default_value_t = 6)]
        max_length: u32,
    },
    /// Run a verification suite.
    Verify {
        #[arg(long)]
        suite: String,
        #[arg(long = "type")]
        ty: Option<String>,
        #[arg(long)]
        kmax: Option<usize>,
        #[arg(long)]
        max_length: Option<u32>,
        #[arg(long)]
        cas: Option<u64>,
        #[arg(long)]
        m: Option<usize>,
    },
}

fn run(cli: &Cli) -> Result<Report, CliError> {
    let limits = load_limits(cli.allow_big)?;
    match &cli.command {
        Command::Coeffs { ty, kmax, method } => {
            let method = match method {
                MethodArg::Series => Method::Series,
                MethodArg::Alcove => Method::Alcove,
                MethodArg::Both => Method::Both,
            };
            commands::coeffs(ty, *kmax, method, &limits)
        }
        Command::Alcoves { ty, max_length, wf2_only } => {
            commands::alcoves(ty, *max_length, *wf2_only, &limits)
        }
        Command::Ideals { ty } => commands::ideals(ty),
        Command::Fk { kmax, eval, lehmer } => commands::fk(*kmax, *eval, *lehmer, &limits),
        Command::Mcore { m, partition, kmax, max_length } => {
            commands::mcore(*m, partition.as_deref(), *kmax, *max_length, &limits)
        }
        Command::Verify { suite, ty, kmax, max_length, cas, m } => {
            let suite: Suite = suite.parse()?;
            let args = VerifyArgs {
                type_label: ty.clone(),
                kmax: *kmax,
                max_length: *max_length,
                cas: *cas,
                m: *m,
            };
            suites::run(suite, &args, &limits)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(report) => {
            if cli.summary {
                print!("{}", report.to_summary());
            } else {
                print!("{}", report.to_canonical());
            }
            if report.passed() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
