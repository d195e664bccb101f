use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use primdec_cli::{run_file, validate_file, RunOutcome, EXIT_USAGE};
use primdec_core::primdec::{PrimdecConfig, DEFAULT_BOUND};

#[derive(Parser)]
#[command(name = "primdec", version, about = "Primary decomposition of ideals and modules over Q[x1..xn]")]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Run a script and print the results.
    Run {
        file: PathBuf,
        /// Emit a JSON array instead of text.
        #[arg(long)]
        json: bool,
        /// Largest prime power tried per primary component.
        #[arg(long, default_value_t = DEFAULT_BOUND)]
        bound: usize,
    },
    /// Run a script and compare its results with an expected JSON file.
    Validate { file: PathBuf, expected: PathBuf },
}

fn seed() -> Result<u64, String> {
    match std::env::var("PRIMDEC_SEED") {
        Ok(s) => s
            .trim()
            .parse()
            .map_err(|_| format!("PRIMDEC_SEED must be a non-negative integer, got '{s}'")),
        Err(_) => Ok(0),
    }
}

fn finish(o: RunOutcome) -> ExitCode {
    let _ = std::io::stdout().write_all(o.stdout.as_bytes());
    let _ = std::io::stderr().write_all(o.stderr.as_bytes());
    ExitCode::from(o.code as u8)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let _ = e.print();
            return ExitCode::from(code as u8);
        }
    };
    let seed = match seed() {
        Ok(s) => s,
        Err(m) => {
            eprintln!("{m}");
            return ExitCode::from(EXIT_USAGE as u8);
        }
    };
    match cli.command {
        Cmd::Run { file, json, bound } => {
            if bound == 0 {
                eprintln!("--bound must be at least 1");
                return ExitCode::from(EXIT_USAGE as u8);
            }
            finish(run_file(&file, json, PrimdecConfig { seed, bound }))
        }
        Cmd::Validate { file, expected } => finish(validate_file(
            &file,
            &expected,
            PrimdecConfig {
                seed,
                bound: DEFAULT_BOUND,
            },
        )),
    }
}
