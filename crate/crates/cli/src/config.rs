//! Run configuration: a flat `key = value` file plus `--set` overrides.
//!
//! ```text
//! # Deficit against rotation rate
//! omega_si    = 0:100:41
//! r_si        = 3
//! v_over_c    = 6e-6
//! outputs     = deficit,entropy
//! ```
//!
//! Any numeric parameter may instead be a range `start:stop[:points]`.

use std::fmt;
use std::str::FromStr;

use sagnac_wigner::units::SPEED_OF_LIGHT;
use sagnac_wigner::SplitMode;

use crate::error::CliError;

/// A numeric parameter: fixed, or a grid between two endpoints.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Param {
    Fixed(f64),
    Range {
        start: f64,
        stop: f64,
        points: Option<usize>,
    },
}

impl Param {
    pub fn is_range(&self) -> bool {
        matches!(self, Param::Range { .. })
    }

    /// Smallest and largest value the parameter takes.
    pub fn bounds(&self) -> (f64, f64) {
        match *self {
            Param::Fixed(x) => (x, x),
            Param::Range { start, stop, .. } => (start.min(stop), start.max(stop)),
        }
    }

    fn parse(key: &str, s: &str) -> Result<Self, CliError> {
        let num = |t: &str| -> Result<f64, CliError> {
            let x: f64 = t
                .trim()
                .parse()
                .map_err(|_| CliError::config(key, format!("`{t}` is not a number")))?;
            if x.is_finite() {
                Ok(x)
            } else {
                Err(CliError::config(key, "value must be finite"))
            }
        };
        let parts: Vec<&str> = s.split(':').collect();
        match parts.as_slice() {
            [x] => Ok(Param::Fixed(num(x)?)),
            [a, b] => Ok(Param::Range {
                start: num(a)?,
                stop: num(b)?,
                points: None,
            }),
            [a, b, n] => {
                let points = n
                    .trim()
                    .parse()
                    .map_err(|_| CliError::config(key, format!("`{n}` is not a point count")))?;
                Ok(Param::Range {
                    start: num(a)?,
                    stop: num(b)?,
                    points: Some(points),
                })
            }
            _ => Err(CliError::config(
                key,
                "expected `value` or `start:stop[:points]`",
            )),
        }
    }
}

impl fmt::Display for Param {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Param::Fixed(x) => write!(f, "{x:?}"),
            Param::Range {
                start,
                stop,
                points: Some(n),
            } => write!(f, "{start:?}:{stop:?}:{n}"),
            Param::Range {
                start,
                stop,
                points: None,
            } => write!(f, "{start:?}:{stop:?}"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Output {
    Theta,
    Lambda,
    Chi,
    DeltaTau,
    Visibility,
    Deficit,
    Entropy,
    Probabilities,
}

impl Output {
    pub const ALL: [Output; 8] = [
        Output::Theta,
        Output::Lambda,
        Output::Chi,
        Output::DeltaTau,
        Output::Visibility,
        Output::Deficit,
        Output::Entropy,
        Output::Probabilities,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Output::Theta => "theta",
            Output::Lambda => "lambda",
            Output::Chi => "chi",
            Output::DeltaTau => "delta_tau",
            Output::Visibility => "visibility",
            Output::Deficit => "deficit",
            Output::Entropy => "entropy",
            Output::Probabilities => "probabilities",
        }
    }
}

impl FromStr for Output {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Output::ALL
            .into_iter()
            .find(|o| o.name() == s)
            .ok_or_else(|| format!("unknown output `{s}`"))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Spacing {
    Linear,
    Log,
}

fn mode_name(m: SplitMode) -> &'static str {
    match m {
        SplitMode::NonEntangling => "non-entangling",
        SplitMode::Entangling => "entangling",
    }
}

/// Parsed configuration. SI units: `omega_si` in rad/s, `r_si` in metres.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepConfig {
    pub omega_si: Param,
    pub r_si: Param,
    pub v_over_c: Param,
    pub upsilon: Param,
    pub grid_points: usize,
    pub mode: SplitMode,
    /// Sorted, without duplicates.
    pub outputs: Vec<Output>,
    pub spacing: Spacing,
}

impl Default for SweepConfig {
    fn default() -> Self {
        Self {
            omega_si: Param::Fixed(10.0),
            r_si: Param::Fixed(3.0),
            v_over_c: Param::Fixed(6e-6),
            upsilon: Param::Fixed(0.0),
            grid_points: 50,
            mode: SplitMode::NonEntangling,
            outputs: Output::ALL.to_vec(),
            spacing: Spacing::Linear,
        }
    }
}

pub const KEYS: [&str; 8] = [
    "omega_si",
    "r_si",
    "v_over_c",
    "upsilon",
    "grid_points",
    "mode",
    "outputs",
    "spacing",
];

impl SweepConfig {
    /// Parse a config file body on top of the defaults.
    pub fn parse(text: &str) -> Result<Self, CliError> {
        let mut cfg = Self::default();
        let mut seen = Vec::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (key, value) = line.split_once('=').ok_or_else(|| {
                CliError::config(
                    "config",
                    format!("line {}: expected `key = value`", lineno + 1),
                )
            })?;
            let key = key.trim();
            if seen.contains(&key) {
                return Err(CliError::config(
                    key,
                    format!("line {}: key given twice", lineno + 1),
                ));
            }
            cfg.set(key, value.trim())?;
            seen.push(key);
        }
        Ok(cfg)
    }

    /// Parse the canonical one-line echo produced by [`SweepConfig::canonical`].
    pub fn parse_canonical(line: &str) -> Result<Self, CliError> {
        let body = line.split_whitespace().collect::<Vec<_>>().join("\n");
        Self::parse(&body)
    }

    /// Apply a single `key = value` assignment.
    pub fn set(&mut self, key: &str, value: &str) -> Result<(), CliError> {
        match key {
            "omega_si" => self.omega_si = Param::parse(key, value)?,
            "r_si" => self.r_si = Param::parse(key, value)?,
            "v_over_c" => self.v_over_c = Param::parse(key, value)?,
            "upsilon" => self.upsilon = Param::parse(key, value)?,
            "grid_points" => {
                self.grid_points = value
                    .parse()
                    .map_err(|_| CliError::config(key, format!("`{value}` is not a point count")))?
            }
            "mode" => {
                self.mode = match value.to_ascii_lowercase().replace('_', "-").as_str() {
                    "non-entangling" | "nonentangling" => SplitMode::NonEntangling,
                    "entangling" => SplitMode::Entangling,
                    _ => {
                        return Err(CliError::config(
                            key,
                            "expected `non-entangling` or `entangling`",
                        ))
                    }
                }
            }
            "outputs" => {
                let mut outs = if value == "all" {
                    Output::ALL.to_vec()
                } else {
                    value
                        .split(',')
                        .map(|s| s.trim())
                        .filter(|s| !s.is_empty())
                        .map(|s| s.parse::<Output>().map_err(|e| CliError::config(key, e)))
                        .collect::<Result<Vec<_>, _>>()?
                };
                outs.sort();
                outs.dedup();
                self.outputs = outs;
            }
            "spacing" => {
                self.spacing = match value {
                    "linear" => Spacing::Linear,
                    "log" => Spacing::Log,
                    _ => return Err(CliError::config(key, "expected `linear` or `log`")),
                }
            }
            _ => {
                return Err(CliError::config(
                    key,
                    format!("unknown key; expected one of {}", KEYS.join(", ")),
                ))
            }
        }
        Ok(())
    }

    /// Apply a `key=value` override from the command line.
    pub fn apply_override(&mut self, assignment: &str) -> Result<(), CliError> {
        let (k, v) = assignment.split_once('=').ok_or_else(|| {
            CliError::config("--set", format!("`{assignment}` is not `key=value`"))
        })?;
        self.set(k.trim(), v.trim())
    }

    fn params(&self) -> [(&'static str, Param); 4] {
        [
            ("omega_si", self.omega_si),
            ("r_si", self.r_si),
            ("v_over_c", self.v_over_c),
            ("upsilon", self.upsilon),
        ]
    }

    /// The parameter being swept, if any.
    pub fn swept(&self) -> Option<(&'static str, Param)> {
        self.params().into_iter().find(|(_, p)| p.is_range())
    }

    /// Check every constraint that can be checked before running.
    pub fn validate(&self) -> Result<(), CliError> {
        let ranges: Vec<&str> = self
            .params()
            .iter()
            .filter(|(_, p)| p.is_range())
            .map(|(k, _)| *k)
            .collect();
        if ranges.len() > 1 {
            return Err(CliError::config(
                ranges[1],
                format!(
                    "only one parameter may be a range, found {}",
                    ranges.join(", ")
                ),
            ));
        }
        if let Some((
            key,
            Param::Range {
                start,
                stop,
                points,
            },
        )) = self.swept()
        {
            let n = points.unwrap_or(self.grid_points);
            if n < 2 {
                return Err(CliError::config(
                    key,
                    format!("a range needs at least 2 points, got {n}"),
                ));
            }
            if start == stop {
                return Err(CliError::config(key, "range endpoints must differ"));
            }
            if self.spacing == Spacing::Log && (start <= 0.0 || stop <= 0.0) {
                return Err(CliError::config(
                    key,
                    "log spacing needs positive endpoints",
                ));
            }
        }
        if self.outputs.is_empty() {
            return Err(CliError::config("outputs", "select at least one output"));
        }

        let (r_min, r_max) = self.r_si.bounds();
        if r_min <= 0.0 {
            return Err(CliError::config(
                "r_si",
                format!("radius must be > 0, got {r_min}"),
            ));
        }
        let (v_min, v_max) = self.v_over_c.bounds();
        let v_abs = v_min.abs().max(v_max.abs());
        if v_abs >= 1.0 {
            return Err(CliError::config(
                "v_over_c",
                format!("|v/c| must be < 1, got {v_abs}"),
            ));
        }
        let (w_min, w_max) = self.omega_si.bounds();
        let wr = w_min.abs().max(w_max.abs()) * r_max / SPEED_OF_LIGHT;
        if wr >= 1.0 {
            return Err(CliError::config(
                "omega_si",
                format!("light-cylinder bound ωr/c < 1 violated: ωr/c = {wr}"),
            ));
        }
        Ok(())
    }

    /// Single-line, whitespace-separated echo that parses back to `self`.
    pub fn canonical(&self) -> String {
        let outputs: Vec<&str> = self.outputs.iter().map(|o| o.name()).collect();
        let spacing = match self.spacing {
            Spacing::Linear => "linear",
            Spacing::Log => "log",
        };
        format!(
            "omega_si={} r_si={} v_over_c={} upsilon={} grid_points={} mode={} outputs={} spacing={}",
            self.omega_si,
            self.r_si,
            self.v_over_c,
            self.upsilon,
            self.grid_points,
            mode_name(self.mode),
            outputs.join(","),
            spacing,
        )
    }

    pub fn wants(&self, o: Output) -> bool {
        self.outputs.contains(&o)
    }
}

/// Grid values of a range; endpoints are reproduced exactly.
pub fn grid(start: f64, stop: f64, n: usize, spacing: Spacing) -> Vec<f64> {
    let last = (n - 1) as f64;
    (0..n)
        .map(|k| {
            if k == 0 {
                return start;
            }
            if k == n - 1 {
                return stop;
            }
            let s = k as f64 / last;
            match spacing {
                Spacing::Linear => start + (stop - start) * s,
                Spacing::Log => (start.ln() + (stop.ln() - start.ln()) * s).exp(),
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_file_with_comments() {
        let cfg = SweepConfig::parse(
            "# header\n omega_si = 0:100:5  # Hz\nr_si=3\n\noutputs = entropy, deficit\nmode = entangling\n",
        )
        .unwrap();
        assert_eq!(
            cfg.omega_si,
            Param::Range {
                start: 0.0,
                stop: 100.0,
                points: Some(5)
            }
        );
        assert_eq!(cfg.r_si, Param::Fixed(3.0));
        assert_eq!(cfg.outputs, vec![Output::Deficit, Output::Entropy]);
        assert_eq!(cfg.mode, SplitMode::Entangling);
        cfg.validate().unwrap();
    }

    #[test]
    fn canonical_round_trips() {
        let mut cfg = SweepConfig::parse("r_si = 0.1:10\nspacing = log\nv_over_c=0.1").unwrap();
        cfg.apply_override("grid_points=7").unwrap();
        let echo = cfg.canonical();
        assert_eq!(SweepConfig::parse_canonical(&echo).unwrap(), cfg);
        assert!(echo.contains("r_si=0.1:10.0 "));
    }

    #[test]
    fn rejects_bad_input() {
        assert!(SweepConfig::parse("nonsense").is_err());
        assert!(SweepConfig::parse("colour = red").is_err());
        assert!(SweepConfig::parse("r_si = 1\nr_si = 2").is_err());
        assert!(SweepConfig::parse("r_si = abc").is_err());
        assert!(SweepConfig::parse("r_si = 1:2:3:4").is_err());
        assert!(SweepConfig::parse("outputs = theta,spin").is_err());
        assert!(SweepConfig::parse("v_over_c = inf").is_err());
    }

    #[test]
    fn validation_bounds() {
        let check = |body: &str| SweepConfig::parse(body).unwrap().validate();
        assert!(check("r_si = 0").is_err());
        assert!(check("v_over_c = 1").is_err());
        assert!(check("v_over_c = -0.5:0.99").is_ok());
        assert!(check("omega_si = 1e8\nr_si = 3").is_err());
        assert!(check("omega_si = 0:1e8\nr_si = 1").is_ok());
        assert!(check("omega_si = 0:10\nr_si = 1:2").is_err());
        assert!(check("omega_si = 0:10:1").is_err());
        assert!(check("omega_si = 0:10\ngrid_points = 1").is_err());
        assert!(check("omega_si = 0:10\nspacing = log").is_err());
        assert!(check("outputs = ").is_err());
        let e = check("omega_si = 2e8\nr_si = 3").unwrap_err();
        assert!(e.to_string().contains("light-cylinder"));
    }

    #[test]
    fn grids_hit_endpoints() {
        assert_eq!(grid(0.0, 1.0, 2, Spacing::Linear), vec![0.0, 1.0]);
        let g = grid(0.1, 10.0, 3, Spacing::Log);
        assert_eq!(g[0], 0.1);
        assert_eq!(g[2], 10.0);
        assert!((g[1] - 1.0).abs() < 1e-15);
        let l = grid(0.0, 100.0, 41, Spacing::Linear);
        assert!(l.windows(2).all(|w| w[1] > w[0]));
    }
}
