//! Gaussian dynamics of two harmonic oscillators damped by common or separate
//! thermal baths, and the quantumness indicators tracked along the way:
//! logarithmic negativity, Gaussian discord, mutual information and the
//! twin-oscillator variance.

pub mod bath;
pub mod config;
pub mod error;
pub mod gaussian;
pub mod phase;
pub mod quantifiers;
pub mod runner;

pub use bath::{
    asymptotic_state, build_generator, evolve, steady_state, AsymptoticOrbit, BathConfig,
    BathTopology, Generator, Trajectory,
};
pub use config::{parse_config, preset, RunConfig};
pub use error::{Error, Result};
pub use gaussian::{
    normal_mode_basis, rotate_to_modes, symplectic_eigenvalues, tms_state, CovarianceState,
    NormalMode, NormalModeBasis, OscillatorPair,
};
pub use phase::{
    asymptotic_entanglement_predicate, asymptotic_twin_predicate, scan_phase_diagram, PhaseDiagram,
    PhasePoint,
};
pub use quantifiers::{
    gaussian_discord, log_negativity, mutual_information, twin_variance, IndicatorRecord, Party,
};
