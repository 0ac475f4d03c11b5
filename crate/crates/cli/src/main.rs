use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use itdual_cli::{commands, workers_from_env, CliError, Overrides, RunConfig, WORKERS_ENV};

/// Transmission eigenvalues of a penetrable disk from scattering phases.
#[derive(Parser)]
#[command(name = "itdual", version, about)]
struct Cli {
    /// TOML run configuration; missing keys take the defaults.
    #[arg(long, global = true)]
    config: Option<PathBuf>,

    /// No progress or summary output.
    #[arg(long, short, global = true)]
    quiet: bool,

    #[command(flatten)]
    overrides: Overrides,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Phases of every mode on the k grid: phases.csv, star.csv.
    Sweep,
    /// Determinant roots in the window: roots.csv.
    Roots,
    /// Events on the extremal-phase track, checked against the roots: detected.csv.
    Detect,
    /// Radial eigenfunction profile at a root and its ladder: profile.csv, ladder.csv.
    Eigfun,
    /// Unitarity, circle, Wronskian and Cayley checks on the configured grid.
    Verify,
    /// Print the effective configuration.
    Config,
}

fn load(cli: &Cli) -> Result<RunConfig, CliError> {
    let mut cfg = match &cli.config {
        Some(path) => RunConfig::load(path)?,
        None => RunConfig::default(),
    };
    cli.overrides.apply(&mut cfg);
    Ok(cfg)
}

fn run(cli: &Cli) -> Result<(), CliError> {
    let cfg = load(cli)?;
    let out = cfg.output_path.clone();
    let summary = match cli.command {
        Command::Sweep => commands::sweep(&cfg, &out, cli.quiet)?,
        Command::Roots => commands::roots(&cfg, &out)?,
        Command::Detect => commands::detect(&cfg, &out, cli.quiet)?,
        Command::Eigfun => commands::eigfun(&cfg, &out)?,
        Command::Verify => commands::verify(&cfg, cli.quiet)?,
        Command::Config => {
            cfg.validate()?;
            print!("{}", cfg.to_toml_string());
            return Ok(());
        }
    };
    if !cli.quiet {
        println!("{summary}");
    }
    Ok(())
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = Cli::parse();

    let workers = match workers_from_env() {
        Ok(w) => w,
        Err(e) => {
            eprintln!("itdual: config error: {e}");
            return ExitCode::from(2);
        }
    };
    let pool = match rayon::ThreadPoolBuilder::new().num_threads(workers.unwrap_or(0)).build() {
        Ok(p) => p,
        Err(e) => {
            eprintln!("itdual: cannot start {WORKERS_ENV} = {workers:?} workers: {e}");
            return ExitCode::from(1);
        }
    };

    match pool.install(|| run(&cli)) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("itdual: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
