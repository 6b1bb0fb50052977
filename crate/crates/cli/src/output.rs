//! CSV and plain-text renderings of evaluated records.

use std::io::{self, Write};

use sagnac_wigner::units::length_to_seconds;

use crate::config::{Output, SweepConfig};
use crate::engine::Record;

/// Entropies below this are written as 0 with the underflow flag set.
pub const ENTROPY_FLOOR: f64 = 1e-300;

fn columns(cfg: &SweepConfig) -> Vec<&'static str> {
    let mut cols = vec![
        "omega_hz",
        "omega_per_m",
        "r_m",
        "v_over_c",
        "upsilon_rad",
        "alpha_rad",
    ];
    for o in &cfg.outputs {
        cols.extend_from_slice(match o {
            Output::Theta => &["theta_per_m"][..],
            Output::Lambda => &["lambda_per_m"],
            Output::Chi => &["chi_per_m"],
            Output::DeltaTau => &["delta_tau_s", "delta_tau_m"],
            Output::Visibility => &["visibility"],
            Output::Deficit => &["visibility_deficit"],
            Output::Entropy => &["entropy_bits", "entropy_underflow"],
            Output::Probabilities => &["p_plus", "p_minus"],
        });
    }
    cols
}

/// Entropy as reported, plus whether it was floored.
pub fn reported_entropy(s: f64) -> (f64, bool) {
    if s > 0.0 && s < ENTROPY_FLOOR {
        (0.0, true)
    } else {
        (s, false)
    }
}

fn num(x: f64) -> String {
    format!("{x:.16e}")
}

fn row(cfg: &SweepConfig, rec: &Record) -> Vec<String> {
    let rep = &rec.report;
    let out = &rep.output;
    let mut cells = vec![
        num(rec.omega_hz),
        num(rec.omega_per_m),
        num(rec.r_m),
        num(rec.v_over_c),
        num(rec.upsilon_rad),
        num(out.wigner_angle_diff),
    ];
    for o in &cfg.outputs {
        match o {
            Output::Theta => cells.push(num(rep.theta_13)),
            Output::Lambda => cells.push(num(rep.lambda_13)),
            Output::Chi => cells.push(num(rep.chi_13)),
            Output::DeltaTau => {
                cells.push(num(length_to_seconds(rep.delta_tau)));
                cells.push(num(rep.delta_tau));
            }
            Output::Visibility => cells.push(num(out.visibility)),
            Output::Deficit => cells.push(num(out.visibility_deficit)),
            Output::Entropy => {
                let (s, flag) = reported_entropy(out.entropy);
                cells.push(num(s));
                cells.push(u8::from(flag).to_string());
            }
            Output::Probabilities => {
                cells.push(num(out.p_plus));
                cells.push(num(out.p_minus));
            }
        }
    }
    cells
}

pub fn write_csv<W: Write>(w: &mut W, cfg: &SweepConfig, records: &[Record]) -> io::Result<()> {
    writeln!(w, "# config: {}", cfg.canonical())?;
    writeln!(w, "{}", columns(cfg).join(","))?;
    for rec in records {
        writeln!(w, "{}", row(cfg, rec).join(","))?;
    }
    Ok(())
}

pub fn write_human<W: Write>(w: &mut W, cfg: &SweepConfig, records: &[Record]) -> io::Result<()> {
    writeln!(w, "config: {}", cfg.canonical())?;
    let cols = columns(cfg);
    let width = cols.iter().map(|c| c.len()).max().unwrap_or(0);
    for (i, rec) in records.iter().enumerate() {
        writeln!(w)?;
        if records.len() > 1 {
            writeln!(w, "point {} of {}", i + 1, records.len())?;
        }
        for (name, value) in cols.iter().zip(row(cfg, rec)) {
            let shown = match value.parse::<f64>() {
                Ok(x) if *name != "entropy_underflow" => format!("{x:.6e}"),
                _ => value,
            };
            writeln!(w, "  {name:<width$}  {shown}")?;
        }
    }
    Ok(())
}
