use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use ritz_bounds::harness::{
    self, emit_csv, run_experiment, write_csv, ExperimentConfig, HarnessError,
};
use ritz_bounds::optimize_shift;

#[derive(Parser)]
#[command(
    name = "ritz-bounds",
    version,
    about = "Ritz value convergence data and bounds"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run an experiment config and write its CSV.
    Run { config: PathBuf },
    /// Regenerate the 46-value comparison data into `<out>/figure1.csv`.
    Figure1 {
        #[arg(long, default_value = ".")]
        out: PathBuf,
    },
    /// Choose the shift that reaches a target error in the fewest matrix-vector products.
    OptimizeShift {
        config: PathBuf,
        #[arg(long)]
        target: usize,
        #[arg(long)]
        error: f64,
    },
}

fn main() -> ExitCode {
    let result = match Cli::parse().command {
        Command::Run { config } => {
            ExperimentConfig::load(&config).and_then(|c| run(&c, c.output.clone()))
        }
        Command::Figure1 { out } => std::fs::create_dir_all(&out)
            .map_err(|e| HarnessError::io(&out, e))
            .and_then(|()| {
                let path = out.join("figure1.csv");
                run(&harness::figure1_config(), Some(path.clone()))?;
                eprintln!("wrote {}", path.display());
                Ok(())
            }),
        Command::OptimizeShift {
            config,
            target,
            error,
        } => optimize(&config, target, error),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("ritz-bounds: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}

fn run(config: &ExperimentConfig, output: Option<PathBuf>) -> Result<(), HarnessError> {
    let out = run_experiment(config)?;
    for w in &out.warnings {
        eprintln!("warning: {w}");
    }
    match output {
        Some(path) => emit_csv(&out.records, &path),
        None => write_csv(&out.records, std::io::stdout().lock())
            .map_err(|e| HarnessError::io(Path::new("<stdout>"), e)),
    }
}

fn optimize(path: &Path, target: usize, error: f64) -> Result<(), HarnessError> {
    let resolved = ExperimentConfig::load(path)?
        .resolve()
        .map_err(|e| e.with_path(path))?;
    if target == 0 || target > resolved.spectrum.len() {
        return Err(HarnessError::config(format!(
            "--target must be in 1..={}",
            resolved.spectrum.len()
        )));
    }
    let choice = optimize_shift(
        &resolved.spectrum,
        &resolved.overlaps,
        target,
        error,
        resolved.max_dim,
    )?;
    let mut stdout = std::io::stdout().lock();
    let io = |e| HarnessError::io(Path::new("<stdout>"), e);
    writeln!(stdout, "target {target}").map_err(io)?;
    writeln!(stdout, "shift {}", choice.shift).map_err(io)?;
    writeln!(stdout, "ambient_dim {}", choice.ambient_dim).map_err(io)?;
    writeln!(stdout, "bound {:.16e}", choice.bound).map_err(io)?;
    writeln!(stdout, "converged {}", choice.converged).map_err(io)?;
    if !choice.converged {
        eprintln!(
            "warning: target error {error:e} not reached within dimension {}",
            resolved.max_dim
        );
    }
    Ok(())
}
