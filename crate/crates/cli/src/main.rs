//! `primorial-gap`: scan prime and primorial inequalities from the command line.

mod output;

use std::path::PathBuf;
use std::process::ExitCode;
use std::sync::Arc;
use std::time::Duration;

use clap::{ArgGroup, Args, Parser, Subcommand};
use serde::Serialize;

use primorial_gap::bounds::{solve_x0, AlphaProfile, RootTarget, DEFAULT_TOL};
use primorial_gap::primes::CACHE_ENV;
use primorial_gap::suite::{self, Evaluator, NRange};
use primorial_gap::{primorial, Alpha, EngineConfig, Error, PrimeEngine};

use output::{Document, Format};

#[derive(Parser, Debug)]
#[command(
    name = "primorial-gap",
    version,
    about = "Exact checks of prime-gap and primorial inequalities"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    output: Format,

    /// Directory for the persisted prime table.
    #[arg(long, env = CACHE_ENV, global = true)]
    cache_dir: Option<PathBuf>,

    /// Emit one verdict per index (`n,holds` rows in CSV).
    #[arg(long, global = true)]
    per_n: bool,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// List the registered inequalities.
    List,
    /// Scan one inequality over an inclusive range `lo..hi`.
    Verify {
        #[arg(long)]
        spec: String,
        #[arg(long)]
        range: NRange,
    },
    /// Scan every registered inequality over its full range.
    Suite {
        #[arg(long, default_value_t = 300)]
        budget_secs: u64,
    },
    /// Count primes between p_{n+1} and p_1...p_{n+1}.
    Theorem(TheoremArgs),
    /// Roots of both threshold functions for one alpha.
    X0 {
        #[arg(long)]
        alpha: Alpha,
        #[arg(long, default_value_t = DEFAULT_TOL)]
        tol: f64,
    },
    /// Number of primes up to x.
    Pi {
        #[arg(long)]
        x: u64,
    },
    /// Product of the first n primes.
    Primorial {
        #[arg(long)]
        n: u64,
    },
}

#[derive(Args, Debug)]
#[command(group(ArgGroup::new("form").required(true).args(["linear", "alpha"])))]
struct TheoremArgs {
    /// At least n primes.
    #[arg(long)]
    linear: bool,
    /// At least [n^alpha] primes beyond x0(alpha), 1 < alpha < 2.
    #[arg(long)]
    alpha: Option<Alpha>,
    #[arg(long, default_value_t = 11)]
    max: u64,
}

#[derive(Serialize)]
struct X0Doc {
    alpha: f64,
    tol: f64,
    theorem: AlphaProfile,
    lemma3: AlphaProfile,
    threshold: u64,
}

#[derive(Serialize)]
struct PiDoc {
    x: u64,
    pi: u64,
}

#[derive(Serialize)]
struct PrimorialDoc {
    n: u64,
    p_n: u64,
    digits: usize,
    primorial: String,
}

fn engine(cli: &Cli) -> Arc<PrimeEngine> {
    let mut config = EngineConfig::from_env();
    if let Some(dir) = &cli.cache_dir {
        config.cache_dir = Some(dir.clone());
    }
    Arc::new(PrimeEngine::new(config))
}

fn run(cli: &Cli) -> Result<(Document, bool), Error> {
    let eval = Evaluator::new(engine(cli));
    Ok(match &cli.command {
        Command::List => (Document::List(suite::registry()), true),
        Command::Verify { spec, range } => {
            let report = suite::verify(&eval, spec, *range)?;
            let ok = report.all_hold;
            (Document::Reports(vec![report], false), ok)
        }
        Command::Suite { budget_secs } => {
            let reports = suite::run_suite(&eval, Duration::from_secs(*budget_secs))?;
            let ok = !reports.iter().any(|r| r.asserted_failure());
            (Document::Reports(reports, true), ok)
        }
        Command::Theorem(args) => {
            let report = match &args.alpha {
                Some(alpha) => suite::verify_theorem_alpha(&eval, alpha, args.max)?,
                None => suite::verify_theorem_linear(&eval, args.max)?,
            };
            let ok = report.all_hold;
            (Document::Reports(vec![report], false), ok)
        }
        Command::X0 { alpha, tol } => {
            let theorem = solve_x0(alpha.value(), RootTarget::Theorem, *tol)?;
            let lemma3 = solve_x0(alpha.value(), RootTarget::Lemma3, *tol)?;
            let doc = X0Doc {
                alpha: alpha.value(),
                tol: *tol,
                threshold: theorem.threshold(),
                theorem,
                lemma3,
            };
            (Document::value(&doc), true)
        }
        Command::Pi { x } => (
            Document::value(&PiDoc {
                x: *x,
                pi: eval.engine().pi_fast(*x)?,
            }),
            true,
        ),
        Command::Primorial { n } => {
            let value = primorial(eval.engine(), *n)?.to_string();
            let p_n = eval.engine().nth_prime(*n)?;
            let doc = PrimorialDoc {
                n: *n,
                p_n,
                digits: value.len(),
                primorial: value,
            };
            (Document::value(&doc), true)
        }
    })
}

fn exit_code(err: &Error) -> u8 {
    match err {
        Error::Domain(_) | Error::Resource(_) | Error::UnknownSpec { .. } | Error::NoRoot(_) => 2,
        _ => 1,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok((doc, ok)) => {
            if let Err(e) = output::emit(&doc, cli.output, cli.per_n) {
                eprintln!("error: writing output: {e}");
                return ExitCode::from(2);
            }
            if ok {
                ExitCode::SUCCESS
            } else {
                doc.describe_failures();
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
