use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::Parser;
use serde_json::{json, Value};

use qframes_cli::config::parse_rational;
use qframes_cli::{run, CliError, Command, Format, RunConfig, EXIT_ASSERTION};

#[derive(Debug, Parser)]
#[command(name = "qframes", version, about = "Normal forms and checks for braided SU_q(2) copies")]
struct Cli {
    #[arg(long, global = true, default_value_t = 2)]
    n_spin: usize,
    #[arg(long, global = true, default_value_t = 2)]
    n_sg: usize,
    /// Append a rotation copy.
    #[arg(long, global = true)]
    rotation: bool,
    /// Truncation order of eps = 1 - q expansions.
    #[arg(long, global = true, default_value_t = 2)]
    order: usize,
    /// Numeric q such as 99/100; bound commands only. Omit to keep q symbolic.
    #[arg(long, global = true)]
    q: Option<String>,
    #[arg(long, global = true, default_value_t = 7)]
    seed: u64,
    #[arg(long, global = true, default_value_t = 1000)]
    samples: u64,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Add elapsed wall time to JSON reports (makes them non-reproducible).
    #[arg(long, global = true)]
    timing: bool,
    #[command(subcommand)]
    cmd: Command,
}

fn config(cli: &Cli) -> Result<RunConfig, CliError> {
    Ok(RunConfig {
        n_spin: cli.n_spin,
        n_sg: cli.n_sg,
        with_rotation: cli.rotation,
        eps_order: cli.order,
        q: cli.q.as_deref().map(parse_rational).transpose()?,
        seed: cli.seed,
        samples: cli.samples,
        format: cli.format,
    })
}

fn execute(cli: &Cli) -> Result<bool, CliError> {
    let cfg = config(cli)?;
    let start = Instant::now();
    let mut outcome = run(&cfg, &cli.cmd)?;
    if cli.timing {
        if let Value::Object(m) = &mut outcome.report {
            m.insert("timing".into(), json!({"elapsed_ms": start.elapsed().as_secs_f64() * 1e3}));
        }
    }
    let text = outcome.render(cfg.format)?;
    match &cli.out {
        Some(path) => std::fs::write(path, text)?,
        None => print!("{text}"),
    }
    Ok(outcome.pass)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match execute(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(EXIT_ASSERTION as u8),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
