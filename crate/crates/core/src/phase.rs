//! Asymptotic twin correlations and entanglement of identical uncoupled
//! oscillators in a common bath, and the `(T, r)` phase diagram.

use std::f64::consts::TAU;

use rayon::prelude::*;

use crate::bath::{AsymptoticOrbit, BathConfig};
use crate::error::{Error, Result};
use crate::gaussian::{tms_state, CovarianceState, OscillatorPair};
use crate::quantifiers::{negativity_exponent, twin_variance};

/// Points of the coarse phase grid over one period.
pub const PHASE_GRID: usize = 720;
/// Final bracket width of the golden-section refinement.
pub const PHASE_TOLERANCE: f64 = 1e-6;
/// Below this, `min d` counts as negative and `E_N` as zero.
pub const INDICATOR_THRESHOLD: f64 = 1e-9;
/// Bracket width of boundary bisection in temperature.
pub const BOUNDARY_TOLERANCE: f64 = 1e-3;

/// Minimizes a `2π`-periodic function: coarse grid, then golden section
/// around the best grid point. Ties resolve to the smallest phase.
pub fn minimize_over_phase(f: impl Fn(f64) -> f64) -> (f64, f64) {
    let step = TAU / PHASE_GRID as f64;
    let (mut best_phase, mut best) = (0.0, f(0.0));
    for k in 1..PHASE_GRID {
        let phase = k as f64 * step;
        let value = f(phase);
        if value < best {
            best_phase = phase;
            best = value;
        }
    }

    let inv_phi = (5f64.sqrt() - 1.0) / 2.0;
    let (mut lo, mut hi) = (best_phase - step, best_phase + step);
    let mut x1 = hi - inv_phi * (hi - lo);
    let mut x2 = lo + inv_phi * (hi - lo);
    let (mut f1, mut f2) = (f(x1), f(x2));
    while hi - lo > PHASE_TOLERANCE {
        if f1 <= f2 {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - inv_phi * (hi - lo);
            f1 = f(x1);
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + inv_phi * (hi - lo);
            f2 = f(x2);
        }
    }
    let (phase, value) = if f1 <= f2 { (x1, f1) } else { (x2, f2) };
    if value < best {
        (phase.rem_euclid(TAU), value)
    } else {
        (best_phase, best)
    }
}

/// Twin-correlation verdict along an asymptotic orbit.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TwinVerdict {
    pub twin: bool,
    pub min_d: f64,
    /// Free-mode angle at which `d` is smallest.
    pub phase: f64,
    /// `RHS − LHS` of the mode-variance inequality
    /// `⟨X−²⟩(2⟨X+²⟩−1) + ⟨P−²⟩(2⟨P+²⟩−1) + 1 < ⟨X+²⟩ + ⟨P+²⟩`
    /// at that angle; positive when the inequality holds.
    pub inequality_margin: f64,
}

impl TwinVerdict {
    /// Whether the inequality and the Wick evaluation agree on the sign.
    pub fn inequality_agrees(&self) -> bool {
        let holds = self.inequality_margin > 0.0;
        let negative = self.min_d < 0.0;
        holds == negative
            || (self.inequality_margin.abs() < INDICATOR_THRESHOLD
                && self.min_d.abs() < INDICATOR_THRESHOLD)
    }
}

/// Entanglement verdict along an asymptotic orbit.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EntanglementVerdict {
    pub entangled: bool,
    /// Largest logarithmic negativity over the orbit, zero unless entangled.
    pub asymptotic_en: f64,
    pub phase: f64,
}

/// `RHS − LHS` of the twin inequality, written in normal-mode variances.
pub fn twin_inequality_margin(orbit: &AsymptoticOrbit, phase: f64) -> f64 {
    let plus = orbit.plus_block();
    let minus = orbit.minus_block(phase);
    let (xp, pp) = (plus[(0, 0)], plus[(1, 1)]);
    let (xm, pm) = (minus[(0, 0)], minus[(1, 1)]);
    let lhs = xm * (2.0 * xp - 1.0) + pm * (2.0 * pp - 1.0) + 1.0;
    xp + pp - lhs
}

pub fn twin_on_orbit(orbit: &AsymptoticOrbit) -> TwinVerdict {
    let (phase, min_d) = minimize_over_phase(|phase| twin_variance(&orbit.state_at(phase)));
    TwinVerdict {
        twin: min_d < -INDICATOR_THRESHOLD,
        min_d,
        phase,
        inequality_margin: twin_inequality_margin(orbit, phase),
    }
}

pub fn entanglement_on_orbit(orbit: &AsymptoticOrbit) -> EntanglementVerdict {
    let (phase, neg) = minimize_over_phase(|phase| -negativity_exponent(&orbit.state_at(phase)));
    let entangled = -neg > INDICATOR_THRESHOLD;
    EntanglementVerdict {
        entangled,
        asymptotic_en: if entangled { -neg } else { 0.0 },
        phase,
    }
}

fn orbit_from_tms(
    r: f64,
    temperature: f64,
    pair: &OscillatorPair,
    bath: &BathConfig,
) -> Result<AsymptoticOrbit> {
    let bath = BathConfig {
        temperature,
        ..*bath
    };
    AsymptoticOrbit::new(pair, &bath, &tms_state(r)?)
}

/// Twin correlations in the long-time state reached from a two-mode
/// squeezed state of squeezing `r` at temperature `temperature`.
pub fn asymptotic_twin_predicate(
    r: f64,
    temperature: f64,
    pair: &OscillatorPair,
    bath: &BathConfig,
) -> Result<TwinVerdict> {
    Ok(twin_on_orbit(&orbit_from_tms(r, temperature, pair, bath)?))
}

pub fn asymptotic_entanglement_predicate(
    r: f64,
    temperature: f64,
    pair: &OscillatorPair,
    bath: &BathConfig,
) -> Result<EntanglementVerdict> {
    Ok(entanglement_on_orbit(&orbit_from_tms(
        r,
        temperature,
        pair,
        bath,
    )?))
}

/// Both verdicts for an arbitrary initial state.
pub fn classify(
    initial: &CovarianceState,
    pair: &OscillatorPair,
    bath: &BathConfig,
) -> Result<(TwinVerdict, EntanglementVerdict)> {
    let orbit = AsymptoticOrbit::new(pair, bath, initial)?;
    Ok((twin_on_orbit(&orbit), entanglement_on_orbit(&orbit)))
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhasePoint {
    pub temperature: f64,
    pub squeezing: f64,
    pub entangled: bool,
    pub twin: bool,
    pub min_d: f64,
    pub asymptotic_en: f64,
    pub inequality_agrees: bool,
}

/// Verdicts on a `T × r` grid, stored row-major with temperature outermost.
#[derive(Debug, Clone, PartialEq)]
pub struct PhaseDiagram {
    pub t_grid: Vec<f64>,
    pub r_grid: Vec<f64>,
    pub points: Vec<PhasePoint>,
}

/// Boundary temperatures for one squeezing value; `None` where the grid
/// holds no sign change to bisect.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Boundary {
    pub squeezing: f64,
    pub entangled: Option<f64>,
    pub twin: Option<f64>,
}

impl PhaseDiagram {
    pub fn point(&self, t_index: usize, r_index: usize) -> &PhasePoint {
        &self.points[t_index * self.r_grid.len() + r_index]
    }

    /// Points sharing the squeezing `r_grid[r_index]`, by increasing `T`.
    pub fn column(&self, r_index: usize) -> impl Iterator<Item = &PhasePoint> {
        (0..self.t_grid.len()).map(move |i| self.point(i, r_index))
    }
}

/// `n` evenly spaced values from `start` to `end` inclusive.
pub fn linspace(start: f64, end: f64, n: usize) -> Vec<f64> {
    match n {
        0 => Vec::new(),
        1 => vec![start],
        _ => (0..n)
            .map(|k| start + (end - start) * k as f64 / (n - 1) as f64)
            .collect(),
    }
}

fn check_grid(name: &'static str, grid: &[f64]) -> Result<()> {
    if grid.is_empty() {
        return Err(Error::param(name, "grid is empty"));
    }
    if grid.iter().any(|v| !v.is_finite()) || grid.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::param(
            name,
            "grid must be finite and strictly increasing",
        ));
    }
    Ok(())
}

/// Evaluates both verdicts on every grid point. Points run in parallel on the
/// current rayon pool; the result does not depend on scheduling.
pub fn scan_phase_diagram(
    t_grid: &[f64],
    r_grid: &[f64],
    pair: &OscillatorPair,
    bath: &BathConfig,
) -> Result<PhaseDiagram> {
    check_grid("t_grid", t_grid)?;
    check_grid("r_grid", r_grid)?;
    let points = (0..t_grid.len() * r_grid.len())
        .into_par_iter()
        .map(|k| {
            let (temperature, squeezing) = (t_grid[k / r_grid.len()], r_grid[k % r_grid.len()]);
            let orbit = orbit_from_tms(squeezing, temperature, pair, bath)?;
            let twin = twin_on_orbit(&orbit);
            let ent = entanglement_on_orbit(&orbit);
            Ok(PhasePoint {
                temperature,
                squeezing,
                entangled: ent.entangled,
                twin: twin.twin,
                min_d: twin.min_d,
                asymptotic_en: ent.asymptotic_en,
                inequality_agrees: twin.inequality_agrees(),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(PhaseDiagram {
        t_grid: t_grid.to_vec(),
        r_grid: r_grid.to_vec(),
        points,
    })
}

/// Locates, per squeezing value, the temperature where each verdict turns
/// false: the last grid point where it holds and the next one bracket a
/// bisection down to [`BOUNDARY_TOLERANCE`].
pub fn boundaries(
    diagram: &PhaseDiagram,
    pair: &OscillatorPair,
    bath: &BathConfig,
) -> Result<Vec<Boundary>> {
    diagram
        .r_grid
        .par_iter()
        .enumerate()
        .map(|(j, &r)| {
            let column: Vec<&PhasePoint> = diagram.column(j).collect();
            let twin = bisect_column(&diagram.t_grid, column.iter().map(|p| p.twin), |t| {
                asymptotic_twin_predicate(r, t, pair, bath).map(|v| v.twin)
            })?;
            let entangled =
                bisect_column(&diagram.t_grid, column.iter().map(|p| p.entangled), |t| {
                    asymptotic_entanglement_predicate(r, t, pair, bath).map(|v| v.entangled)
                })?;
            Ok(Boundary {
                squeezing: r,
                entangled,
                twin,
            })
        })
        .collect()
}

fn bisect_column(
    t_grid: &[f64],
    flags: impl Iterator<Item = bool>,
    holds: impl Fn(f64) -> Result<bool>,
) -> Result<Option<f64>> {
    let flags: Vec<bool> = flags.collect();
    let Some(last) = flags.iter().rposition(|&f| f) else {
        return Ok(None);
    };
    if last + 1 == flags.len() {
        return Ok(None);
    }
    let (mut lo, mut hi) = (t_grid[last], t_grid[last + 1]);
    while hi - lo > BOUNDARY_TOLERANCE {
        let mid = (lo + hi) / 2.0;
        if holds(mid)? {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(Some((lo + hi) / 2.0))
}
