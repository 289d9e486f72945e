use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use eigenlab::verify::{self, emit, emit_to_path, plan, Format, RunConfig, Target};
use eigenlab::Error;

const EXIT_FAILED: u8 = 1;
const EXIT_CONFIG: u8 = 2;
const EXIT_RUNTIME: u8 = 3;

/// Numerical verification of eigenfamilies on compact symmetric spaces.
#[derive(Parser)]
#[command(name = "eigenlab", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the selected claim suites and write a report.
    Verify {
        #[command(flatten)]
        run: RunArgs,
        #[arg(long, env = "EIGENLAB_FORMAT", default_value = "json-lines")]
        format: Format,
        /// Output file; standard output when absent.
        #[arg(long, env = "EIGENLAB_OUT")]
        out: Option<PathBuf>,
    },
    /// List targets and the ids of the claims they produce.
    List,
    /// Print the table of eigenvalues with measured values alongside.
    Table {
        #[command(flatten)]
        run: RunArgs,
        #[arg(long, env = "EIGENLAB_OUT")]
        out: Option<PathBuf>,
    },
}

#[derive(Args)]
struct RunArgs {
    /// Comma-separated targets, or `all`.
    #[arg(long, env = "EIGENLAB_SPACE", default_value = "all")]
    space: String,
    #[arg(long, env = "EIGENLAB_M")]
    m: Option<usize>,
    #[arg(long, env = "EIGENLAB_N")]
    n: Option<usize>,
    #[arg(long, env = "EIGENLAB_SAMPLES", default_value_t = 100)]
    samples: usize,
    /// Replaces every claim's tolerance.
    #[arg(long, env = "EIGENLAB_TOL")]
    tol: Option<f64>,
    #[arg(long, env = "EIGENLAB_SEED", default_value_t = 0)]
    seed: u64,
}

impl RunArgs {
    fn config(&self) -> Result<RunConfig, Error> {
        Ok(RunConfig {
            targets: verify::parse_targets(&self.space)?,
            m: self.m,
            n: self.n,
            samples: self.samples,
            tol: self.tol,
            seed: self.seed,
        })
    }
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Io(_) | Error::Json(_) => EXIT_RUNTIME,
        _ => EXIT_CONFIG,
    }
}

fn run_and_write(cfg: &RunConfig, format: Format, out: Option<&PathBuf>) -> Result<bool, Error> {
    let report = verify::run(cfg)?;
    match out {
        Some(path) => emit_to_path(&report, format, path)?,
        None => emit(&report, format, &mut io::stdout().lock())?,
    }
    let passed = report.claims.iter().filter(|c| c.pass).count();
    eprintln!(
        "{passed}/{} claims pass, wall time {:.2} s",
        report.claims.len(),
        report.wall_time
    );
    Ok(report.all_pass())
}

fn list() -> Result<(), Error> {
    let mut out = io::stdout().lock();
    let jobs = plan(&RunConfig::default())?;
    for target in Target::all() {
        writeln!(out, "{:<16} {}", target.slug(), target.description())?;
        for job in jobs.iter().filter(|j| j.target() == target) {
            let prefix = job.id_prefix();
            for name in target.claim_names() {
                writeln!(out, "    {prefix}.{name}")?;
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Verify { run, format, out } => run.config().and_then(|cfg| run_and_write(&cfg, *format, out.as_ref())),
        Command::Table { run, out } => run.config().and_then(|mut cfg| {
            cfg.targets.retain(|t| matches!(t, Target::Space(_)));
            run_and_write(&cfg, Format::HumanTable, out.as_ref())
        }),
        Command::List => list().map(|()| true),
    };
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(EXIT_FAILED),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
