//! Configuration, sweep engine and report writers behind the
//! `sagnac-wigner` command-line tool.

pub mod config;
pub mod engine;
pub mod error;
pub mod output;

pub use config::{Output, Param, Spacing, SweepConfig};
pub use engine::{evaluate_point, run_single, run_sweep, Record};
pub use error::CliError;
