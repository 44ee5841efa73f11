//! Placement of movable antennas on a discretized linear aperture.
//!
//! A multipath field-response channel is sampled on a uniform grid of
//! candidate positions. Selecting antenna positions under a minimum-spacing
//! constraint to maximize the received power is solved exactly by a
//! fixed-hop shortest-path dynamic program on a DAG, approximately by a
//! linear-time sequential-update heuristic, and is compared against
//! fixed-position baselines with and without antenna selection.
//!
//! The crate is `no_std` (alloc required). All randomness comes from
//! caller-provided generators, so every result is a pure function of its
//! inputs.
#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod baseline;
pub mod channel;
pub mod error;
pub mod graph;
pub mod grid;
pub mod heuristic;
pub mod power;
pub mod selection;
pub mod solver;

pub use baseline::{
    fpa_as_grid_init, fpa_as_select, fpa_candidate_positions, fpa_no_as_positions, AntennaLayout,
    LayoutProvenance,
};
pub use channel::{
    channel_gains, draw_power_fractions, field_response, GainProfile, PathSet, ScenarioConfig,
};
pub use error::Error;
pub use graph::PointGraph;
pub use grid::SamplingGrid;
pub use heuristic::{sequential_update, HeuristicState, SequentialUpdate};
pub use power::{mrt_received_power, MrtPower};
pub use selection::Selection;
pub use solver::{
    brute_force_oracle, brute_force_oracle_with_cap, feasible_combinations,
    fixed_hop_shortest_path, hop_table, solve_optimal, BruteForceResult, DpTable, HopPath,
    DEFAULT_ENUMERATION_CAP,
};
