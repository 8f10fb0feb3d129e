//! Run configuration: JSON documents, named presets and their validation.
//!
//! All quantities are in units of `ω1`.

use std::f64::consts::PI;
use std::path::{Path, PathBuf};

use serde::Deserialize;

use crate::bath::{BathConfig, BathTopology};
use crate::error::{Error, Result};
use crate::gaussian::{normal_mode_basis, OscillatorPair};

/// Weak-coupling damping rate used throughout the presets.
pub const DEFAULT_GAMMA0: f64 = 0.02 / PI;
pub const DEFAULT_CUTOFF: f64 = 20.0;
pub const DEFAULT_SQUEEZING: f64 = 2.0;
pub const DEFAULT_STRIDE: usize = 40;
/// Default step as a fraction of the fastest normal-mode period scale.
pub const DEFAULT_STEP_RATIO: f64 = 0.005;
const MAX_STEP_RATIO: f64 = 0.01;

/// Temperature and squeezing grid of a phase-diagram run.
#[derive(Debug, Clone, Copy, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PhaseGrid {
    pub t_min: f64,
    pub t_max: f64,
    pub t_points: usize,
    pub r_min: f64,
    pub r_max: f64,
    pub r_points: usize,
}

impl Default for PhaseGrid {
    fn default() -> Self {
        PhaseGrid {
            t_min: 0.01,
            t_max: 2.0,
            t_points: 60,
            r_min: 0.0,
            r_max: 3.0,
            r_points: 60,
        }
    }
}

impl PhaseGrid {
    pub fn temperatures(&self) -> Vec<f64> {
        crate::phase::linspace(self.t_min, self.t_max, self.t_points)
    }

    pub fn squeezings(&self) -> Vec<f64> {
        crate::phase::linspace(self.r_min, self.r_max, self.r_points)
    }

    /// Parses `TxR`, e.g. `60x60`, keeping the ranges.
    pub fn with_shape(self, shape: &str) -> Result<Self> {
        let bad = || Error::Config {
            location: "--grid".into(),
            message: format!("expected TxR with positive integers, got `{shape}`"),
        };
        let (t, r) = shape.split_once(['x', 'X']).ok_or_else(bad)?;
        let t_points: usize = t.trim().parse().map_err(|_| bad())?;
        let r_points: usize = r.trim().parse().map_err(|_| bad())?;
        if t_points == 0 || r_points == 0 {
            return Err(bad());
        }
        Ok(PhaseGrid {
            t_points,
            r_points,
            ..self
        })
    }

    fn validate(&self) -> Result<()> {
        let fail = |message: String| Error::Config {
            location: "grid".into(),
            message,
        };
        if self.t_points == 0 || self.r_points == 0 {
            return Err(fail("t_points and r_points must be ≥ 1".into()));
        }
        let ordered = |lo: f64, hi: f64, n: usize| {
            lo.is_finite() && hi.is_finite() && (lo < hi || (n == 1 && lo <= hi))
        };
        if !ordered(self.t_min, self.t_max, self.t_points) || self.t_min < 0.0 {
            return Err(fail(format!(
                "need 0 ≤ t_min < t_max, got [{}, {}]",
                self.t_min, self.t_max
            )));
        }
        if !ordered(self.r_min, self.r_max, self.r_points) || self.r_min < 0.0 || self.r_max > 10.0
        {
            return Err(fail(format!(
                "need 0 ≤ r_min < r_max ≤ 10, got [{}, {}]",
                self.r_min, self.r_max
            )));
        }
        Ok(())
    }
}

/// Fully resolved and validated run parameters.
#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub preset: Option<String>,
    pub pair: OscillatorPair,
    pub bath: BathConfig,
    pub initial_r: f64,
    pub t_end: f64,
    pub dt: f64,
    pub sample_stride: usize,
    pub output_path: Option<PathBuf>,
    pub grid: PhaseGrid,
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawConfig {
    preset: Option<String>,
    omega1: Option<f64>,
    omega2: Option<f64>,
    lambda: Option<f64>,
    topology: Option<BathTopology>,
    gamma0: Option<f64>,
    temperature: Option<f64>,
    cutoff: Option<f64>,
    initial_r: Option<f64>,
    t_end: Option<f64>,
    dt: Option<f64>,
    sample_stride: Option<usize>,
    output_path: Option<PathBuf>,
    grid: Option<PhaseGrid>,
}

/// Preset names with one-line descriptions.
pub const PRESETS: &[(&str, &str)] = &[
    ("fig1_left", "detuned oscillators (ω2 = 1.2), common bath, T = 1: sudden death, full thermalization"),
    ("fig1_right", "identical oscillators, separate baths, T = 1: sudden death, full thermalization"),
    ("fig2_left", "identical oscillators, common bath, T = 0.1: stationary entanglement and twin correlations"),
    ("fig2_right", "identical oscillators, common bath, T = 1: stationary entanglement, transient twin correlations"),
    ("fig3", "identical coupled oscillators (λ = 0.2), common bath, T = 0.1: persistent oscillations"),
    ("fig4", "phase diagram over T ∈ [0.01, 2], r ∈ [0, 3] for identical uncoupled oscillators, common bath"),
];

fn preset_raw(name: &str) -> Result<RawConfig> {
    let base = |omega2: f64, lambda: f64, topology: BathTopology, temperature: f64| RawConfig {
        preset: Some(name.to_string()),
        omega2: Some(omega2),
        lambda: Some(lambda),
        topology: Some(topology),
        temperature: Some(temperature),
        ..RawConfig::default()
    };
    Ok(match name {
        "fig1_left" => base(1.2, 0.0, BathTopology::Common, 1.0),
        "fig1_right" => base(1.0, 0.0, BathTopology::Separate, 1.0),
        "fig2_left" => base(1.0, 0.0, BathTopology::Common, 0.1),
        "fig2_right" => base(1.0, 0.0, BathTopology::Common, 1.0),
        "fig3" => base(1.0, 0.2, BathTopology::Common, 0.1),
        "fig4" => RawConfig {
            grid: Some(PhaseGrid::default()),
            ..base(1.0, 0.0, BathTopology::Common, 0.1)
        },
        other => {
            let known: Vec<&str> = PRESETS.iter().map(|(n, _)| *n).collect();
            return Err(Error::Config {
                location: "preset".into(),
                message: format!("unknown preset `{other}` (known: {})", known.join(", ")),
            });
        }
    })
}

/// Expands a named preset.
pub fn preset(name: &str) -> Result<RunConfig> {
    resolve(preset_raw(name)?)
}

/// Reads and validates a JSON configuration file.
pub fn parse_config(path: &Path) -> Result<RunConfig> {
    let text = std::fs::read_to_string(path).map_err(|source| Error::Io {
        path: path.to_path_buf(),
        source,
    })?;
    parse_config_str(&text, &path.display().to_string())
}

/// Parses a JSON document. Keys given explicitly override those of the
/// optional `preset`.
pub fn parse_config_str(text: &str, location: &str) -> Result<RunConfig> {
    let raw: RawConfig = serde_json::from_str(text).map_err(|e| Error::Config {
        location: format!("{location}:{}:{}", e.line(), e.column()),
        message: e.to_string(),
    })?;
    let merged = match raw.preset.as_deref() {
        Some(name) => overlay(preset_raw(name)?, raw),
        None => raw,
    };
    resolve(merged)
}

fn overlay(base: RawConfig, top: RawConfig) -> RawConfig {
    RawConfig {
        preset: top.preset.or(base.preset),
        omega1: top.omega1.or(base.omega1),
        omega2: top.omega2.or(base.omega2),
        lambda: top.lambda.or(base.lambda),
        topology: top.topology.or(base.topology),
        gamma0: top.gamma0.or(base.gamma0),
        temperature: top.temperature.or(base.temperature),
        cutoff: top.cutoff.or(base.cutoff),
        initial_r: top.initial_r.or(base.initial_r),
        t_end: top.t_end.or(base.t_end),
        dt: top.dt.or(base.dt),
        sample_stride: top.sample_stride.or(base.sample_stride),
        output_path: top.output_path.or(base.output_path),
        grid: top.grid.or(base.grid),
    }
}

fn required<T>(value: Option<T>, key: &str) -> Result<T> {
    value.ok_or_else(|| Error::Config {
        location: key.to_string(),
        message: format!("missing required key `{key}` (or give a `preset`)"),
    })
}

fn resolve(raw: RawConfig) -> Result<RunConfig> {
    let pair = OscillatorPair::new(
        raw.omega1.unwrap_or(1.0),
        required(raw.omega2, "omega2")?,
        raw.lambda.unwrap_or(0.0),
    )?;
    let bath = BathConfig {
        topology: required(raw.topology, "topology")?,
        gamma0: raw.gamma0.unwrap_or(DEFAULT_GAMMA0),
        temperature: required(raw.temperature, "temperature")?,
        cutoff: raw.cutoff.unwrap_or(DEFAULT_CUTOFF),
    };
    bath.validate(&pair)?;
    let omega_plus = normal_mode_basis(&pair)?.omega_plus;

    let initial_r = raw.initial_r.unwrap_or(DEFAULT_SQUEEZING);
    if !(initial_r.is_finite() && (0.0..=10.0).contains(&initial_r)) {
        return Err(Error::param(
            "initial_r",
            format!("must be in [0, 10], got {initial_r}"),
        ));
    }
    let t_end = raw.t_end.unwrap_or(30.0 / bath.gamma0);
    if !(t_end.is_finite() && t_end > 0.0) {
        return Err(Error::param(
            "t_end",
            format!("must be finite and > 0, got {t_end}"),
        ));
    }
    let dt = raw.dt.unwrap_or(DEFAULT_STEP_RATIO / omega_plus);
    if !(dt.is_finite() && dt > 0.0 && dt <= MAX_STEP_RATIO / omega_plus) {
        return Err(Error::param(
            "dt",
            format!(
                "must satisfy 0 < dt ≤ 0.01/ω+ = {}, got {dt}",
                MAX_STEP_RATIO / omega_plus
            ),
        ));
    }
    let sample_stride = raw.sample_stride.unwrap_or(DEFAULT_STRIDE);
    if sample_stride == 0 {
        return Err(Error::param("sample_stride", "must be ≥ 1"));
    }
    let grid = raw.grid.unwrap_or_default();
    grid.validate()?;

    Ok(RunConfig {
        preset: raw.preset,
        pair,
        bath,
        initial_r,
        t_end,
        dt,
        sample_stride,
        output_path: raw.output_path,
        grid,
    })
}
