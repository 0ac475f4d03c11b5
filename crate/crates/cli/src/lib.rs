//! Front end for `itdual-core`: phase sweeps, determinant roots, duality
//! detection, eigenfunction profiles and an invariant checker, all writing
//! CSV tables into an output directory.

pub mod commands;
pub mod config;
pub mod output;
pub mod verify;

use std::fmt;
use std::io;

pub use config::{ConfigError, Overrides, RegimeChoice, RunConfig};

/// Environment variable holding the worker-thread count.
pub const WORKERS_ENV: &str = "ITDUAL_WORKERS";

#[derive(Debug)]
pub enum CliError {
    Config(ConfigError),
    Numeric(itdual_core::Error),
    Io(io::Error),
    /// `verify` ran but at least one family failed.
    VerifyFailed(usize),
}

impl CliError {
    /// 0 success, 1 IO or failed verification, 2 configuration, 3 numerics.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Config(_) => 2,
            CliError::Numeric(_) => 3,
            CliError::Io(_) | CliError::VerifyFailed(_) => 1,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Config(e) => write!(f, "config error: {e}"),
            CliError::Numeric(e) => write!(f, "numeric failure {e}"),
            CliError::Io(e) => write!(f, "io error: {e}"),
            CliError::VerifyFailed(n) => write!(f, "{n} invariant families failed"),
        }
    }
}

impl std::error::Error for CliError {}

impl From<ConfigError> for CliError {
    fn from(e: ConfigError) -> Self {
        CliError::Config(e)
    }
}

impl From<itdual_core::Error> for CliError {
    fn from(e: itdual_core::Error) -> Self {
        if e.is_input_error() {
            CliError::Config(ConfigError(e.to_string()))
        } else {
            CliError::Numeric(e)
        }
    }
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        CliError::Io(e)
    }
}

/// Reads the worker count from [`WORKERS_ENV`]; `None` keeps rayon's default.
pub fn workers_from_env() -> Result<Option<usize>, ConfigError> {
    match std::env::var(WORKERS_ENV) {
        Err(_) => Ok(None),
        Ok(s) => match s.trim().parse::<usize>() {
            Ok(n) if n > 0 => Ok(Some(n)),
            _ => Err(ConfigError(format!("{WORKERS_ENV} must be a positive integer, got {s:?}"))),
        },
    }
}
