use std::fs::{self, File};
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use sagnac_wigner_cli::output::{write_csv, write_human};
use sagnac_wigner_cli::{run_single, run_sweep, CliError, SweepConfig};

#[derive(Parser)]
#[command(
    name = "sagnac-wigner",
    version,
    about = "Wigner rotation and Sagnac interferometer calculations"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate one parameter point.
    Single(Common),
    /// Evaluate a one-dimensional parameter sweep.
    Sweep(Common),
    /// Check a configuration and print its canonical form.
    Validate(Common),
}

#[derive(Args)]
struct Common {
    /// Configuration file (`key = value` lines).
    #[arg(long)]
    config: Option<PathBuf>,

    /// Override a configuration key, e.g. `--set r_si=0.1:10`.
    #[arg(long = "set", value_name = "KEY=VALUE")]
    overrides: Vec<String>,

    /// Output path; `-` or omitted for stdout.
    #[arg(long)]
    out: Option<String>,

    #[arg(long, value_enum, default_value_t = Format::Csv)]
    format: Format,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Csv,
    Human,
}

fn load(c: &Common) -> Result<SweepConfig, CliError> {
    let mut cfg = match &c.config {
        Some(path) => {
            let text = fs::read_to_string(path)
                .map_err(|e| CliError::config("--config", format!("{}: {e}", path.display())))?;
            SweepConfig::parse(&text)?
        }
        None => SweepConfig::default(),
    };
    for o in &c.overrides {
        cfg.apply_override(o)?;
    }
    cfg.validate()?;
    Ok(cfg)
}

fn sink(out: &Option<String>) -> Result<Box<dyn Write>, CliError> {
    Ok(match out.as_deref() {
        None | Some("-") | Some("stdout") => Box::new(BufWriter::new(io::stdout().lock())),
        Some(path) => Box::new(BufWriter::new(File::create(path)?)),
    })
}

fn run(cli: Cli) -> Result<(), CliError> {
    let (c, cfg, records) = match &cli.command {
        Command::Validate(c) => {
            let cfg = load(c)?;
            let mut w = sink(&c.out)?;
            writeln!(w, "{}", cfg.canonical())?;
            w.flush()?;
            return Ok(());
        }
        Command::Single(c) => {
            let cfg = load(c)?;
            let rec = run_single(&cfg)?;
            (c, cfg, vec![rec])
        }
        Command::Sweep(c) => {
            let cfg = load(c)?;
            let recs = run_sweep(&cfg)?;
            (c, cfg, recs)
        }
    };
    let mut w = sink(&c.out)?;
    match c.format {
        Format::Csv => write_csv(&mut w, &cfg, &records)?,
        Format::Human => write_human(&mut w, &cfg, &records)?,
    }
    w.flush()?;
    Ok(())
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("sagnac-wigner: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
