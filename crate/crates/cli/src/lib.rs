//! The `tenk` command line: solve, verify, simulate and export the game.
//!
//! Exit codes: 0 on success, 1 when a verification check disagrees, 2 for
//! usage errors, 3 for file or network errors.

use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use tenk_core::oracle::monte_carlo_value;
use tenk_core::value::{to_decimal, to_f64};
use tenk_core::variants::minimal_geometric_base;
use tenk_core::{
    export_table, render_published_table, run_verification, solve_backward, solve_pig, solve_restricted,
    ActionSubset, ExportFormat, Solution, VerifyOptions,
};

pub const EXIT_MISMATCH: u8 = 1;
pub const EXIT_IO: u8 = 3;

/// Where exports go when `--out` is not given.
pub const OUT_DIR_ENV: &str = "TENK_OUT_DIR";

#[derive(Debug, Parser)]
#[command(name = "tenk", version, about = "Exact solver for one turn of Ten Thousand")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Solve the game exactly, print the value of a turn and write the policy.
    Solve {
        #[command(flatten)]
        output: OutputArgs,
        /// Decimal places for printed values.
        #[arg(long, default_value_t = 10)]
        precision: u32,
        /// Also print the value table in the published layout.
        #[arg(long)]
        table: bool,
    },
    /// Run every independent check of the solved table.
    Verify {
        /// Allowed gap between value iteration and the exact values.
        #[arg(long, default_value_t = 1e-8)]
        tolerance: f64,
        /// Leave a check out of the exit status (it is still printed).
        #[arg(long = "skip", value_name = "CHECK")]
        skip: Vec<String>,
    },
    /// Estimate the value of a turn by simulating the optimal policy.
    Simulate {
        #[command(flatten)]
        variant: VariantArgs,
        #[arg(long, default_value_t = 1_000_000)]
        episodes: u64,
        #[arg(long, default_value_t = 20240601)]
        seed: u64,
        #[arg(long, default_value_t = 6)]
        precision: u32,
    },
    /// Solve the one-die game of Pig.
    Pig {
        #[arg(long, default_value_t = 2)]
        precision: u32,
    },
    /// Solve games restricted to a subset of the actions.
    Variants {
        /// One subset such as `s,r,m5`; without it the six nested subsets are solved.
        #[arg(long)]
        actions: Option<ActionSubset>,
        #[arg(long, default_value_t = 10)]
        precision: u32,
    },
    /// Write the solved table for a variant.
    Export {
        #[command(flatten)]
        variant: VariantArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Start the advisor service.
    Serve {
        #[arg(long, default_value_t = 8080)]
        port: u16,
        /// Keep sessions in this directory across restarts.
        #[arg(long)]
        log_dir: Option<PathBuf>,
    },
}

#[derive(Debug, Args)]
pub struct VariantArgs {
    /// Allowed actions, e.g. `s,r,m5`, or `all`.
    #[arg(long, default_value = "all")]
    pub actions: ActionSubset,
}

#[derive(Debug, Args)]
pub struct OutputArgs {
    /// Output file; defaults to `policy-<variant>.<format>` in $TENK_OUT_DIR or the current directory.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// `csv` or `json`; defaults to the extension of `--out`, then csv.
    #[arg(long)]
    pub format: Option<ExportFormat>,
}

enum Failure {
    Mismatch,
    Io(String),
}

impl From<tenk_core::Error> for Failure {
    fn from(e: tenk_core::Error) -> Self {
        Failure::Io(e.to_string())
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Io(e.to_string())
    }
}

type Outcome = Result<(), Failure>;

/// Parses `args` and runs the command, writing results to `out`.
pub fn run<I, T>(args: I, out: &mut dyn Write) -> ExitCode
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(e.exit_code() as u8);
        }
    };
    match execute(cli.command, out) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Mismatch) => ExitCode::from(EXIT_MISMATCH),
        Err(Failure::Io(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_IO)
        }
    }
}

fn execute(command: Command, out: &mut dyn Write) -> Outcome {
    match command {
        Command::Solve { output, precision, table } => {
            let solution = solve_backward();
            writeln!(out, "{}", to_decimal(solution.initial_value(), precision))?;
            if table {
                write!(out, "{}", render_published_table(&solution))?;
            }
            write_export(&solution, &ActionSubset::all(), &output)
        }
        Command::Verify { tolerance, skip } => verify(tolerance, &skip, out),
        Command::Simulate { variant, episodes, seed, precision } => {
            if episodes == 0 {
                return Err(Failure::Io("--episodes must be at least 1".into()));
            }
            let solution = solve_variant(&variant.actions);
            let est = monte_carlo_value(&solution, episodes, seed)?;
            let p = precision as usize;
            writeln!(out, "variant {}", variant.actions)?;
            writeln!(out, "episodes {} seed {seed}", est.episodes)?;
            writeln!(out, "mean {:.p$} +- {:.p$}", est.mean, est.std_error)?;
            let exact = to_f64(solution.initial_value());
            writeln!(out, "exact {exact:.p$} ({:+.2} standard errors)", (est.mean - exact) / est.std_error)?;
            Ok(())
        }
        Command::Pig { precision } => {
            let pig = solve_pig();
            writeln!(out, "tau*={}", pig.threshold)?;
            writeln!(out, "V(0)={}", to_decimal(&pig.value(0), precision))?;
            writeln!(out, "geometric solutions exist for bases above {:.6}", minimal_geometric_base())?;
            Ok(())
        }
        Command::Variants { actions, precision } => {
            let subsets = match actions {
                Some(a) => vec![a],
                None => ActionSubset::nested_rows(),
            };
            for subset in &subsets {
                let value = to_decimal(solve_variant(subset).initial_value(), precision);
                if subsets.len() == 1 {
                    writeln!(out, "{value}")?;
                } else {
                    writeln!(out, "{:<24} {value}", format!("{{{subset}}}"))?;
                }
            }
            Ok(())
        }
        Command::Export { variant, output } => {
            let solution = solve_variant(&variant.actions);
            write_export(&solution, &variant.actions, &output)
        }
        Command::Serve { port, log_dir } => serve(port, log_dir.as_deref()),
    }
}

fn solve_variant(subset: &ActionSubset) -> Solution {
    if subset.is_full() {
        solve_backward()
    } else {
        solve_restricted(subset)
    }
}

fn verify(tolerance: f64, skip: &[String], out: &mut dyn Write) -> Outcome {
    let options = VerifyOptions { tolerance, ..Default::default() };
    let report = run_verification(&solve_backward(), &options);
    if let Some(unknown) = skip.iter().find(|s| !report.checks.iter().any(|c| c.name == s.as_str())) {
        return Err(Failure::Io(format!("no check named `{unknown}`")));
    }
    write!(out, "{report}")?;
    let failed = report.failures().filter(|c| !skip.iter().any(|s| s == c.name)).count();
    writeln!(out, "{} of {} checks pass", report.checks.len() - report.failures().count(), report.checks.len())?;
    if failed == 0 {
        Ok(())
    } else {
        Err(Failure::Mismatch)
    }
}

/// The export path and format from the flags, the environment and the variant.
pub fn resolve_output(output: &OutputArgs, variant: &ActionSubset) -> (PathBuf, ExportFormat) {
    let format = output
        .format
        .or_else(|| output.out.as_deref().map(ExportFormat::from_path))
        .unwrap_or(ExportFormat::Csv);
    let path = output.out.clone().unwrap_or_else(|| {
        let dir = std::env::var_os(OUT_DIR_ENV).map_or_else(|| PathBuf::from("."), PathBuf::from);
        let name = variant.to_string().replace(',', "-");
        dir.join(format!("policy-{name}.{}", format.extension()))
    });
    (path, format)
}

fn write_export(solution: &Solution, variant: &ActionSubset, output: &OutputArgs) -> Outcome {
    let (path, format) = resolve_output(output, variant);
    export_table(solution, variant, format, &path)
        .map_err(|e| Failure::Io(format!("cannot write {}: {e}", path.display())))?;
    eprintln!("wrote {}", path.display());
    Ok(())
}

fn serve(port: u16, log_dir: Option<&Path>) -> Outcome {
    let solution = solve_backward();
    let state = match log_dir {
        Some(dir) => tenk_advisor::AppState::with_event_log(solution, dir).map_err(|e| Failure::Io(e.to_string()))?,
        None => tenk_advisor::AppState::new(solution),
    };
    let runtime = tokio::runtime::Runtime::new()?;
    runtime.block_on(async {
        let listener = tokio::net::TcpListener::bind(("127.0.0.1", port)).await?;
        eprintln!("advisor listening on http://{}", listener.local_addr()?);
        tenk_advisor::serve(listener, state).await
    })?;
    Ok(())
}
