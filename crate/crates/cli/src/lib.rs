//! Library side of the `alcove` command: every subcommand builds a
//! [`Report`], and `main` only parses flags and prints.

pub mod commands;
pub mod report;
pub mod suites;

use std::path::Path;

use alcove_core::{CartanType, Limits, RootSystem};

pub use report::{Report, Status};

/// Environment variable naming a JSON file that overrides [`Limits`].
pub const CONFIG_ENV: &str = "ALCOVE_CONFIG";

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Core(#[from] alcove_core::Error),
    #[error("{0}")]
    Usage(String),
    #[error("config {path}: {msg}")]
    Config { path: String, msg: String },
}

pub type CliResult<T> = Result<T, CliError>;

/// Default limits, overridden by the file named in `ALCOVE_CONFIG` (missing
/// keys keep their defaults), or lifted entirely by `allow_big`.
pub fn load_limits(allow_big: bool) -> CliResult<Limits> {
    if allow_big {
        return Ok(Limits::unbounded());
    }
    match std::env::var_os(CONFIG_ENV) {
        None => Ok(Limits::default()),
        Some(p) => read_limits(Path::new(&p)),
    }
}

pub fn read_limits(path: &Path) -> CliResult<Limits> {
    let err = |msg: String| CliError::Config {
        path: path.display().to_string(),
        msg,
    };
    let text = std::fs::read_to_string(path).map_err(|e| err(e.to_string()))?;
    serde_json::from_str(&text).map_err(|e| err(e.to_string()))
}

pub fn root_system(label: &str) -> CliResult<RootSystem> {
    let ty: CartanType = label.parse()?;
    Ok(RootSystem::new(ty)?)
}

pub(crate) fn guard(what: &'static str, count: impl Into<u128>, ceiling: impl Into<u128>) -> CliResult<()> {
    let (count, ceiling) = (count.into(), ceiling.into());
    if count > ceiling {
        Err(alcove_core::Error::ScaleExceeded {
            what,
            count,
            ceiling,
        }
        .into())
    } else {
        Ok(())
    }
}
