//! Equilibrium second moments of a single oscillator damped by an
//! Ohmic–Drude bath, computed beyond the weak-coupling Gibbs state.
//!
//! With memory kernel `γ̂(ν) = ΓΛ/(Λ+ν)` the reduced-state moments are
//! Matsubara sums over `ν_n = 2πTn`. The `n = 0` terms and the undamped part
//! are summed in closed form (`coth`), the damped remainder explicitly up to a
//! cutoff, and the rest of the series as an integral.

use std::f64::consts::PI;

const ZERO_TEMPERATURE: f64 = 1e-8;
const HEAD_SPAN: f64 = 50.0;
const MAX_HEAD_TERMS: f64 = 200_000.0;
const TAIL_TOLERANCE: f64 = 1e-14;

/// Dimensionless equilibrium variances `(ω⟨x²⟩, ⟨p²⟩/ω)` of an oscillator of
/// frequency `omega` with damping `damping` and Drude cutoff `cutoff` at
/// temperature `temperature`.
///
/// Both tend to `coth(ω/2T)/2` as `damping → 0`. At low temperature the
/// position variance drops below the vacuum value 1/2.
pub fn damped_mode_moments(omega: f64, damping: f64, cutoff: f64, temperature: f64) -> (f64, f64) {
    let w2 = omega * omega;
    let kernel = |nu: f64| damping * cutoff / (cutoff + nu);
    let gx = |nu: f64| {
        let free = w2 + nu * nu;
        1.0 / (free + nu * kernel(nu)) - 1.0 / free
    };
    let gp = |nu: f64| {
        let free = w2 + nu * nu;
        let damped = nu * kernel(nu);
        (w2 + damped) / (free + damped) - w2 / free
    };

    if temperature < ZERO_TEMPERATURE {
        let x = half_line_integral(&gx, 0.0) / PI;
        let p = half_line_integral(&gp, 0.0) / PI;
        return (0.5 + omega * x, 0.5 + p / omega);
    }

    let spacing = 2.0 * PI * temperature;
    let terms = (HEAD_SPAN * omega.max(cutoff) / spacing)
        .ceil()
        .min(MAX_HEAD_TERMS) as usize;
    let (mut sx, mut sp) = (0.0, 0.0);
    for n in 1..=terms {
        let nu = spacing * n as f64;
        sx += gx(nu);
        sp += gp(nu);
    }
    // Midpoint rule: the sum of f(ν_n) for n > N equals ∫ f / spacing from
    // ν_N + spacing/2 up to O(f'' spacing²).
    let start = spacing * (terms as f64 + 0.5);
    let sx = 2.0 * temperature * sx + half_line_integral(&gx, start) / PI;
    let sp = 2.0 * temperature * sp + half_line_integral(&gp, start) / PI;

    let coth = 1.0 / (omega / (2.0 * temperature)).tanh();
    (coth / 2.0 + omega * sx, coth / 2.0 + sp / omega)
}

fn half_line_integral(f: &impl Fn(f64) -> f64, start: f64) -> f64 {
    let mapped = |s: f64| {
        let gap = 1.0 - s;
        let v = f(start + s / gap) / (gap * gap);
        if v.is_finite() {
            v
        } else {
            0.0
        }
    };
    quadrature::integrate(mapped, 0.0, 1.0, TAIL_TOLERANCE).integral
}

#[cfg(test)]
mod tests {
    use super::*;

    const GAMMA0: f64 = 0.02 / PI;

    #[test]
    fn matches_reference_values() {
        // Independent evaluation (direct Matsubara sums, adaptive quadrature).
        let table = [
            (0.0, 0.498115, 0.510515),
            (0.1, 0.498309, 0.510568),
            (0.3, 0.536198, 0.547289),
            (1.0, 1.081891, 1.089434),
        ];
        for (t, u, w) in table {
            let (x, p) = damped_mode_moments(1.0, 2.0 * GAMMA0, 20.0, t);
            assert!((x - u).abs() < 2e-6, "T={t}: {x} vs {u}");
            assert!((p - w).abs() < 2e-6, "T={t}: {p} vs {w}");
        }
    }

    #[test]
    fn weak_damping_limit_is_thermal() {
        for t in [0.0f64, 0.2, 1.0, 3.0] {
            let thermal = if t == 0.0 {
                0.5
            } else {
                0.5 / (0.5 / t).tanh()
            };
            let (x, p) = damped_mode_moments(1.0, 1e-7, 20.0, t);
            assert!((x - thermal).abs() < 1e-6 && (p - thermal).abs() < 1e-6);
        }
    }

    #[test]
    fn zero_temperature_is_continuous() {
        let (x0, p0) = damped_mode_moments(1.0, 2.0 * GAMMA0, 20.0, 0.0);
        let (x1, p1) = damped_mode_moments(1.0, 2.0 * GAMMA0, 20.0, 0.01);
        assert!((x0 - x1).abs() < 1e-5 && (p0 - p1).abs() < 1e-5);
    }

    #[test]
    fn uncertainty_principle_holds() {
        for t in [0.0, 0.05, 0.155, 0.5, 2.0] {
            let (x, p) = damped_mode_moments(1.0, 2.0 * GAMMA0, 20.0, t);
            assert!(x * p >= 0.25, "T={t}: {}", x * p);
        }
    }
}
