//! Command-line driver for the verification suites.
//!
//! Exit codes: 0 when every check passes, 1 when a check fails, 2 on a
//! usage error.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use sklyanin::suite::{run, Report, Status, Suite, SuiteConfig};
use sklyanin::Error;

#[derive(Parser)]
#[command(
    name = "sklyanin",
    version,
    about = "Verification suites for 3-dimensional Sklyanin algebras"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    opts: Opts,
}

#[derive(Subcommand, Clone, Copy)]
enum Command {
    /// Central element identity, centrality, Heisenberg symmetry, Hilbert series.
    Theorem1,
    /// Hesse group law, the [-2]p closed form and the same-curve property.
    Curve,
    /// Certified torsion points of each requested order.
    Torsion,
    /// Cyclic representations built from torsion orbits.
    Reps,
    /// Tangent spaces, normal weights and invariant rings for the blow-up.
    Blowup,
    /// Every suite above.
    All,
}

#[derive(Args)]
struct Opts {
    #[arg(long, global = true, default_value_t = 1)]
    seed: u64,
    #[arg(long, global = true, default_value_t = 20)]
    trials: usize,
    /// Orders of the cyclic representations, comma separated.
    #[arg(long, global = true, value_delimiter = ',', default_values_t = [2u32, 4, 5])]
    n: Vec<u32>,
    #[arg(long, global = true, default_value_t = 1e-9)]
    tol_membership: f64,
    #[arg(long, global = true, default_value_t = 1e-9)]
    tol_rank: f64,
    #[arg(long, global = true, default_value_t = 53)]
    precision_bits: usize,
    /// Write the JSON report here instead of standard output.
    #[arg(long, global = true, value_name = "PATH")]
    json: Option<PathBuf>,
    /// Suppress the per-check summary.
    #[arg(long, global = true)]
    quiet: bool,
    /// Record wall-clock time in the report.
    #[arg(long, global = true, hide = true)]
    timing: bool,
    /// Negative control: perturb the central element.
    #[arg(long, global = true, hide = true)]
    corrupt_c3: bool,
}

fn suite(c: Command) -> Suite {
    match c {
        Command::Theorem1 => Suite::Theorem1,
        Command::Curve => Suite::Curve,
        Command::Torsion => Suite::Torsion,
        Command::Reps => Suite::Reps,
        Command::Blowup => Suite::Blowup,
        Command::All => Suite::All,
    }
}

fn summary(report: &Report) {
    for c in &report.checks {
        let tag = match c.status {
            Status::Pass => "pass",
            Status::Fail => "FAIL",
            Status::Mismatch => "mismatch",
            Status::Info => "info",
        };
        eprintln!("{tag:>8}  {}", c.name);
        if let Some(err) = c.data.get("error") {
            eprintln!("          {err}");
        }
    }
    let failed = report.failures().count();
    eprintln!(
        "{}: {} checks, {failed} failed",
        report.suite,
        report.checks.len()
    );
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(2)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    let o = cli.opts;
    let cfg = SuiteConfig {
        seed: o.seed,
        trials: o.trials,
        n: o.n,
        tol_membership: o.tol_membership,
        tol_rank: o.tol_rank,
        precision_bits: o.precision_bits,
        corrupt_c3: o.corrupt_c3,
        timing: o.timing,
    };
    let report = match run(suite(cli.command), &cfg) {
        Ok(r) => r,
        Err(Error::Usage(msg)) => {
            eprintln!("error: {msg}");
            return ExitCode::from(2);
        }
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(1);
        }
    };
    let text = report.to_json();
    match &o.json {
        Some(path) => {
            if let Err(e) = std::fs::write(path, text + "\n") {
                eprintln!("error: cannot write {}: {e}", path.display());
                return ExitCode::from(2);
            }
        }
        None => println!("{text}"),
    }
    if !o.quiet {
        summary(&report);
    }
    if report.passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
