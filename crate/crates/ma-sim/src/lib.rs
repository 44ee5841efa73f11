//! Monte Carlo benchmark harness for movable-antenna placement.
//!
//! Drives seeded sweeps over grid resolution, antenna count, aperture
//! length, and path count, comparing the optimal and heuristic movable
//! placements against fixed-antenna baselines, and emits plot-ready CSV.

pub mod config;
pub mod experiment;
pub mod format;
pub mod profile;
pub mod solve;

pub use experiment::{
    default_scenario, run_sweep, run_trial, scheme_feasibility, trial_rng, write_sweep_csv,
    ExperimentKind, ExperimentSpec, Scheme, SkippedCell, SweepResult, SweepRow, TrialConfig,
    TrialRng,
};
pub use format::{db_to_linear, format_sig6, linear_to_db};
