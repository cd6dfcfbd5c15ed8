//! Experiment driver: config in, convergence records and CSV out.

mod config;
mod csv;
mod run;

pub use config::{
    ExperimentConfig, OptimizeSpec, OverlapSource, ResolvedConfig, ShiftPolicy, SpectrumSource,
    TargetSpec,
};
pub use csv::{emit_csv, parse_csv, write_csv, CSV_HEADER};
pub use run::{run_experiment, ConvergenceRecord, ExperimentOutput};

use std::path::{Path, PathBuf};

/// The preset that regenerates the 46-value comparison figure.
pub const FIGURE1_CONFIG: &str = include_str!("../../data/figure1.json");

pub fn figure1_config() -> ExperimentConfig {
    ExperimentConfig::from_json(FIGURE1_CONFIG).expect("bundled preset parses")
}

#[derive(Debug, thiserror::Error)]
pub enum HarnessError {
    #[error("config error{}: {message}", path_suffix(.path))]
    Config {
        path: Option<PathBuf>,
        message: String,
    },

    #[error("I/O error on {}: {source}", .path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

fn path_suffix(path: &Option<PathBuf>) -> String {
    path.as_ref()
        .map(|p| format!(" in {}", p.display()))
        .unwrap_or_default()
}

impl HarnessError {
    pub fn config(message: impl Into<String>) -> Self {
        HarnessError::Config {
            path: None,
            message: message.into(),
        }
    }

    pub fn io(path: &Path, source: std::io::Error) -> Self {
        HarnessError::Io {
            path: path.to_path_buf(),
            source,
        }
    }

    pub fn with_path(self, p: &Path) -> Self {
        match self {
            HarnessError::Config { message, .. } => HarnessError::Config {
                path: Some(p.to_path_buf()),
                message,
            },
            other => other,
        }
    }

    /// 1 for configuration problems, 2 for I/O failures.
    pub fn exit_code(&self) -> i32 {
        match self {
            HarnessError::Config { .. } => 1,
            HarnessError::Io { .. } => 2,
        }
    }
}

impl From<crate::Error> for HarnessError {
    fn from(e: crate::Error) -> Self {
        HarnessError::config(e.to_string())
    }
}
