//! Scenario runners and their CSV outputs.

use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::{Path, PathBuf};

use crate::bath::{build_generator, evolve, steady_state};
use crate::config::RunConfig;
use crate::error::{Error, Result};
use crate::gaussian::{tms_state, CovarianceState};
use crate::phase::{boundaries, scan_phase_diagram, Boundary, PhaseDiagram};
use crate::quantifiers::IndicatorRecord;

pub const EVOLVE_HEADER: [&str; 6] = ["t", "EN", "discord", "mutual_info", "d", "d_display"];
pub const PHASE_HEADER: [&str; 6] = ["T", "r", "entangled", "twin", "min_d", "asymptotic_EN"];
pub const BOUNDARY_HEADER: [&str; 3] = ["r", "T_entangled_boundary", "T_twin_boundary"];
pub const STEADY_HEADER: [&str; 4] = ["x1", "p1", "x2", "p2"];

/// Twelve significant digits in scientific notation; `-0` prints as `0`.
pub fn format_number(value: f64) -> String {
    format!("{:.11e}", value + 0.0)
}

/// Indicators sampled along a trajectory.
#[derive(Debug, Clone, PartialEq)]
pub struct IndicatorSeries {
    pub times: Vec<f64>,
    pub records: Vec<IndicatorRecord>,
}

impl IndicatorSeries {
    pub fn iter(&self) -> impl Iterator<Item = (f64, &IndicatorRecord)> {
        self.times.iter().copied().zip(self.records.iter())
    }
}

/// Evolves the configured two-mode squeezed state and evaluates the
/// indicators at every sample.
pub fn evolve_indicators(config: &RunConfig) -> Result<IndicatorSeries> {
    let generator = build_generator(&config.pair, &config.bath)?;
    let trajectory = evolve(
        &tms_state(config.initial_r)?,
        &generator,
        config.t_end,
        config.dt,
        config.sample_stride,
    )?;
    Ok(IndicatorSeries {
        records: trajectory
            .states
            .iter()
            .map(IndicatorRecord::evaluate)
            .collect(),
        times: trajectory.times,
    })
}

fn output_path(config: &RunConfig) -> Result<&Path> {
    config.output_path.as_deref().ok_or_else(|| Error::Config {
        location: "output_path".into(),
        message: "no output path given (set `output_path` or pass --out)".into(),
    })
}

fn create(path: &Path) -> Result<csv::Writer<BufWriter<File>>> {
    let file = File::create(path).map_err(|source| Error::Io {
        path: path.to_path_buf(),
        source,
    })?;
    Ok(csv::Writer::from_writer(BufWriter::new(file)))
}

fn write_rows<I, R>(path: &Path, header: &[&str], rows: I) -> Result<()>
where
    I: IntoIterator<Item = R>,
    R: IntoIterator<Item = String>,
{
    let csv_err = |source| Error::Csv {
        path: path.to_path_buf(),
        source,
    };
    let mut writer = create(path)?;
    writer.write_record(header).map_err(csv_err)?;
    for row in rows {
        writer.write_record(row).map_err(csv_err)?;
    }
    let mut inner = writer.into_inner().map_err(|e| Error::Io {
        path: path.to_path_buf(),
        source: e.into_error(),
    })?;
    inner.flush().map_err(|source| Error::Io {
        path: path.to_path_buf(),
        source,
    })
}

pub fn write_evolve_csv(path: &Path, series: &IndicatorSeries) -> Result<()> {
    write_rows(
        path,
        &EVOLVE_HEADER,
        series.iter().map(|(t, r)| {
            [
                t,
                r.log_negativity,
                r.discord,
                r.mutual_information,
                r.twin_d,
                r.d_display(),
            ]
            .map(format_number)
        }),
    )
}

pub fn write_phase_csv(path: &Path, diagram: &PhaseDiagram) -> Result<()> {
    write_rows(
        path,
        &PHASE_HEADER,
        diagram.points.iter().map(|p| {
            [
                format_number(p.temperature),
                format_number(p.squeezing),
                p.entangled.to_string(),
                p.twin.to_string(),
                format_number(p.min_d),
                format_number(p.asymptotic_en),
            ]
        }),
    )
}

pub fn write_boundary_csv(path: &Path, rows: &[Boundary]) -> Result<()> {
    let cell = |v: Option<f64>| v.map(format_number).unwrap_or_default();
    write_rows(
        path,
        &BOUNDARY_HEADER,
        rows.iter()
            .map(|b| [format_number(b.squeezing), cell(b.entangled), cell(b.twin)]),
    )
}

/// Runs `evolve` and writes the indicator CSV to the configured path.
pub fn run_evolve(config: &RunConfig) -> Result<IndicatorSeries> {
    let path = output_path(config)?;
    let series = evolve_indicators(config)?;
    write_evolve_csv(path, &series)?;
    Ok(series)
}

/// Sibling path for the boundary table: `grid.csv` → `grid_boundary.csv`.
pub fn boundary_path(grid_path: &Path) -> PathBuf {
    let stem = grid_path
        .file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_default();
    let ext = grid_path
        .extension()
        .map(|e| format!(".{}", e.to_string_lossy()))
        .unwrap_or_default();
    grid_path.with_file_name(format!("{stem}_boundary{ext}"))
}

/// Scans the configured grid and its boundaries, writing both CSVs.
pub fn run_phase_diagram(config: &RunConfig) -> Result<(PhaseDiagram, Vec<Boundary>)> {
    let path = output_path(config)?;
    let diagram = scan_phase_diagram(
        &config.grid.temperatures(),
        &config.grid.squeezings(),
        &config.pair,
        &config.bath,
    )?;
    let edges = boundaries(&diagram, &config.pair, &config.bath)?;
    write_phase_csv(path, &diagram)?;
    write_boundary_csv(&boundary_path(path), &edges)?;
    Ok((diagram, edges))
}

/// Solves for the stationary state and writes its covariance matrix.
pub fn run_steady(config: &RunConfig) -> Result<CovarianceState> {
    let path = output_path(config)?;
    let state = steady_state(&build_generator(&config.pair, &config.bath)?)?;
    let m = state.matrix();
    write_rows(
        path,
        &STEADY_HEADER,
        (0..4).map(|i| (0..4).map(move |j| format_number(m[(i, j)]))),
    )?;
    Ok(state)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::config::preset;

    #[test]
    fn number_format() {
        assert_eq!(format_number(1.0), "1.00000000000e0");
        assert_eq!(format_number(-0.0), "0.00000000000e0");
        assert_eq!(format_number(-2.5e-7), "-2.50000000000e-7");
    }

    #[test]
    fn boundary_sibling() {
        assert_eq!(
            boundary_path(Path::new("out/grid.csv")),
            PathBuf::from("out/grid_boundary.csv")
        );
        assert_eq!(
            boundary_path(Path::new("grid")),
            PathBuf::from("grid_boundary")
        );
    }

    #[test]
    fn short_evolve_writes_expected_layout() {
        let dir = tempfile::tempdir().unwrap();
        let mut config = preset("fig2_right").unwrap();
        config.t_end = 1.0;
        config.sample_stride = 50;
        config.output_path = Some(dir.path().join("run.csv"));
        let series = run_evolve(&config).unwrap();
        let text = std::fs::read_to_string(dir.path().join("run.csv")).unwrap();
        let mut lines = text.lines();
        assert_eq!(
            lines.next().unwrap(),
            "t,EN,discord,mutual_info,d,d_display"
        );
        assert_eq!(lines.count(), series.times.len());
    }

    #[test]
    fn missing_output_path() {
        let config = preset("fig2_right").unwrap();
        assert!(matches!(run_evolve(&config), Err(Error::Config { .. })));
    }
}
