//! Evaluation of single points and one-dimensional sweeps.

use rayon::prelude::*;
use sagnac_wigner::units::omega_to_geometric;
use sagnac_wigner::{SagnacReport, SagnacSetup, SplitMode};

use crate::config::{grid, Param, SweepConfig};
use crate::error::CliError;

/// One evaluated grid point, SI inputs alongside the geometric ones used.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Record {
    pub omega_hz: f64,
    pub r_m: f64,
    pub v_over_c: f64,
    pub upsilon_rad: f64,
    /// `ω/c` (1/m).
    pub omega_per_m: f64,
    pub report: SagnacReport,
}

pub fn evaluate_point(
    omega_hz: f64,
    r_m: f64,
    v_over_c: f64,
    upsilon_rad: f64,
    mode: SplitMode,
) -> Result<Record, CliError> {
    let omega_per_m = omega_to_geometric(omega_hz);
    let report = SagnacSetup {
        r: r_m,
        omega: omega_per_m,
        v: v_over_c,
        upsilon: upsilon_rad,
        mode,
    }
    .evaluate()?;
    Ok(Record {
        omega_hz,
        r_m,
        v_over_c,
        upsilon_rad,
        omega_per_m,
        report,
    })
}

fn fixed(key: &str, p: Param) -> Result<f64, CliError> {
    match p {
        Param::Fixed(x) => Ok(x),
        Param::Range { .. } => Err(CliError::config(key, "`single` takes scalar values only")),
    }
}

pub fn run_single(cfg: &SweepConfig) -> Result<Record, CliError> {
    cfg.validate()?;
    evaluate_point(
        fixed("omega_si", cfg.omega_si)?,
        fixed("r_si", cfg.r_si)?,
        fixed("v_over_c", cfg.v_over_c)?,
        fixed("upsilon", cfg.upsilon)?,
        cfg.mode,
    )
}

/// Evaluate every grid point of the swept parameter in parallel; records
/// come back in grid order.
pub fn run_sweep(cfg: &SweepConfig) -> Result<Vec<Record>, CliError> {
    cfg.validate()?;
    let (key, range) = cfg
        .swept()
        .ok_or_else(|| CliError::config("sweep", "exactly one parameter must be a range"))?;
    let Param::Range {
        start,
        stop,
        points,
    } = range
    else {
        unreachable!("swept() only returns ranges")
    };
    let values = grid(start, stop, points.unwrap_or(cfg.grid_points), cfg.spacing);

    let pick = |name: &str, p: Param, x: f64| match p {
        Param::Fixed(v) => v,
        Param::Range { .. } if name == key => x,
        Param::Range { .. } => unreachable!("validated: a single range"),
    };
    values
        .par_iter()
        .map(|&x| {
            evaluate_point(
                pick("omega_si", cfg.omega_si, x),
                pick("r_si", cfg.r_si, x),
                pick("v_over_c", cfg.v_over_c, x),
                pick("upsilon", cfg.upsilon, x),
                cfg.mode,
            )
        })
        .collect()
}
