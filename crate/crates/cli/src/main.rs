//! `starfact`: count, list and trace factorisations in the symmetric group,
//! evaluate group-algebra expressions and run the verification suites.

mod algebra;
mod bounds;
mod count;
mod output;
mod trace;
mod verify;

use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use starfact::{Partition, Permutation};

use bounds::{CliError, CliResult, Limits};
use output::{Format, Report};

#[derive(Parser)]
#[command(name = "starfact", version, about = "Star and monotone factorisations in the symmetric group")]
struct Cli {
    #[arg(long, value_enum, default_value = "text", global = true)]
    format: Format,

    /// Worker threads; defaults to one per core.
    #[arg(long, env = "STARFACT_THREADS", global = true)]
    threads: Option<usize>,

    /// Lift the default size bounds.
    #[arg(long, global = true)]
    unsafe_bounds: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Count factorisations of one target by every applicable method.
    Count(count::CountArgs),
    /// List factorisations of one target.
    List(count::ListArgs),
    /// Run a verification suite.
    Verify(verify::VerifyArgs),
    /// Apply a bijection and print the Hurwitz moves it makes.
    Trace(trace::TraceArgs),
    /// Evaluate an expression in the group algebra and decompose it.
    Algebra(algebra::AlgebraArgs),
    /// Tabulate star counts, monotone double counts and closed forms.
    Table(count::TableArgs),
    /// Exploratory computations on the transitivity operator.
    Experiment(algebra::ExperimentArgs),
}

/// A target given either as a permutation or as a cycle type.
#[derive(Args, Serialize, Clone, Debug)]
pub struct TargetArgs {
    /// Target permutation in cycle notation, e.g. "(1 2)(3)".
    #[arg(long, conflicts_with = "partition")]
    pub target: Option<String>,

    /// Cycle type of the target, e.g. "[3,1]"; a fixed representative is
    /// used.
    #[arg(long)]
    pub partition: Option<String>,

    /// Degree, when the target does not mention its largest symbol.
    #[arg(long)]
    pub n: Option<usize>,
}

impl TargetArgs {
    pub fn resolve(&self) -> CliResult<Permutation> {
        match (&self.target, &self.partition) {
            (Some(t), _) => Ok(Permutation::parse(t, self.n)?),
            (None, Some(p)) => {
                let lambda: Partition = p.parse()?;
                if let Some(n) = self.n {
                    if n != lambda.size() {
                        return Err(CliError::Usage(format!("partition {lambda} is not a partition of {n}")));
                    }
                }
                Ok(lambda.representative()?)
            }
            (None, None) => Err(CliError::Usage("one of --target or --partition is required".into())),
        }
    }
}

fn config_of<T: Serialize>(args: &T) -> serde_json::Value {
    serde_json::to_value(args).expect("arguments serialise")
}

fn run(cli: &Cli) -> CliResult<Report> {
    let limits = Limits {
        enforce: !cli.unsafe_bounds,
    };
    match &cli.command {
        Command::Count(a) => count::count(a, limits),
        Command::List(a) => count::list(a, limits),
        Command::Verify(a) => verify::verify(a, limits),
        Command::Trace(a) => trace::trace(a),
        Command::Algebra(a) => algebra::algebra(a, limits),
        Command::Table(a) => count::table(a, limits),
        Command::Experiment(a) => algebra::experiment(a, limits),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(threads) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(threads).build_global() {
            eprintln!("error: cannot start {threads} threads: {e}");
            return ExitCode::from(2);
        }
    }
    match run(&cli) {
        Ok(report) => {
            let mut out = std::io::stdout().lock();
            // a closed pipe is not worth a panic
            let _ = out.write_all(report.render(cli.format).as_bytes());
            if report.pass {
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
