//! `realroot-lab`: exact-arithmetic transforms, Sturm certificates,
//! certified counterexample reproduction and identity sweeps for
//! real-rooted polynomials. Every command emits a JSON report.

mod commands;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use realroot_core::Error;

use report::{Outcome, Report};

#[derive(Parser)]
#[command(name = "realroot-lab", version, about, disable_help_subcommand = true)]
struct Cli {
    /// Write the JSON report to this file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Apply a coefficient transform (s_r, s_tilde_r, f_d, j, u_alpha,
    /// v_alpha, compose, gamma) to a polynomial file
    Transform(TransformArgs),
    /// Reproduce a certified counterexample (s6, s6tilde)
    Counterexample(CounterexampleArgs),
    /// Verify a closed-form identity cell-by-cell over bounded ranges
    Identity(IdentityArgs),
    /// Certify a property: real-rooted, ms, rapid, laguerre-poly
    Check(CheckArgs),
    /// Exploratory batch sweeps; results are empirical, never theorems
    Sweep(SweepArgs),
}

#[derive(Args)]
struct TransformArgs {
    /// One of: s_r, s_tilde_r, f_d, j, u_alpha, v_alpha, compose, gamma
    op: String,
    /// Input polynomial file (shared JSON coefficient format)
    input: PathBuf,
    /// Shift parameter for s_r / s_tilde_r
    #[arg(long)]
    r: Option<usize>,
    /// Minor size for f_d
    #[arg(long)]
    d: Option<usize>,
    /// Alpha support as "j:value,..." with rational values
    #[arg(long)]
    alpha: Option<String>,
    /// Sequence spec for the diagonal action, e.g. shifted-factorial:2
    #[arg(long)]
    gamma: Option<String>,
    /// Second polynomial file for compose
    #[arg(long)]
    with: Option<PathBuf>,
    /// Weight the composition by k!
    #[arg(long)]
    factorial: bool,
    /// Also classify the output by Sturm sequences
    #[arg(long)]
    classify: bool,
}

#[derive(Args)]
struct CounterexampleArgs {
    /// s6 or s6tilde
    name: String,
    /// Truncation order override (disables automatic escalation)
    #[arg(long)]
    n: Option<usize>,
    /// Evaluation point override, as a rational (defaults: -43 / -56)
    #[arg(long)]
    x0: Option<String>,
}

#[derive(Args)]
struct IdentityArgs {
    /// One of: stanley, mace, j-binomial, s4-closed-form, fd-exp, j-exp,
    /// pochhammer
    name: String,
    #[arg(long)]
    n_max: Option<usize>,
    #[arg(long)]
    d_max: Option<usize>,
    #[arg(long)]
    k_max: Option<usize>,
}

#[derive(Args)]
struct CheckArgs {
    /// One of: real-rooted, ms, rapid, laguerre-poly
    kind: String,
    /// Input polynomial file (real-rooted, laguerre-poly)
    input: Option<PathBuf>,
    /// Sequence spec for ms, e.g. shifted-factorial:4
    #[arg(long)]
    gamma: Option<String>,
    /// Pólya–Schur horizon N (ms)
    #[arg(long, default_value_t = 10)]
    horizon: usize,
    /// Sequence spec for rapid, e.g. 2powk2
    #[arg(long)]
    seq: Option<String>,
    /// Rapid-decrease alpha, rational (rapid)
    #[arg(long)]
    alpha: Option<String>,
    /// Number of checked indices (rapid)
    #[arg(long = "K", default_value_t = 50)]
    k_cap: usize,
    /// Laguerre expression order n (laguerre-poly)
    #[arg(long, default_value_t = 1)]
    order: usize,
    /// Sample points, comma-separated rationals (laguerre-poly)
    #[arg(long)]
    samples: Option<String>,
}

#[derive(Args)]
struct SweepArgs {
    /// sr or rapid-image
    kind: String,
    #[arg(long, default_value_t = 1)]
    r_min: usize,
    #[arg(long, default_value_t = 4)]
    r_max: usize,
    /// Largest family index n (sr)
    #[arg(long, default_value_t = 20)]
    n_max: usize,
    /// Polynomial family: binomial or exp-truncation (sr)
    #[arg(long, default_value = "binomial")]
    family: String,
    /// Sweep s_tilde_r instead of s_r
    #[arg(long)]
    tilde: bool,
    /// Base sequence spec (rapid-image)
    #[arg(long, default_value = "2powk2")]
    seq: String,
    /// Checked indices per cell (rapid-image)
    #[arg(long = "K", default_value_t = 50)]
    k_cap: usize,
    /// Alpha for rapid-image, rational
    #[arg(long, default_value = "2")]
    alpha: String,
}

fn configure_threads() {
    if let Ok(raw) = std::env::var("REALROOT_LAB_THREADS") {
        match raw.trim().parse::<usize>() {
            Ok(n) if n >= 1 => {
                let _ = rayon::ThreadPoolBuilder::new()
                    .num_threads(n)
                    .build_global();
            }
            _ => eprintln!("warning: ignoring invalid REALROOT_LAB_THREADS={raw:?}"),
        }
    }
}

fn main() -> ExitCode {
    configure_threads();
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Transform(args) => commands::transform::run(args),
        Command::Counterexample(args) => commands::counterexample::run(args),
        Command::Identity(args) => commands::identity::run(args),
        Command::Check(args) => commands::check::run(args),
        Command::Sweep(args) => commands::sweep::run(args),
    };
    match result {
        Ok((report, outcome)) => {
            if let Err(err) = report.write(cli.out.as_deref()) {
                eprintln!("error: cannot write report: {err}");
                return ExitCode::from(2);
            }
            ExitCode::from(outcome.code() as u8)
        }
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(exit_for(&err).code() as u8)
        }
    }
}

/// Library errors map onto the exit-code contract.
fn exit_for(err: &Error) -> Outcome {
    match err {
        Error::NotCertified(_) => Outcome::Uncertified,
        _ => Outcome::InputError,
    }
}

type CommandResult = Result<(Report, Outcome), Error>;
