//! Error type shared across the crate.

use core::fmt;

/// Errors from grid construction, channel draws, and the placement solvers.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Error {
    /// A parameter that must be strictly positive and finite was not.
    NonPositive { name: &'static str },
    /// A count parameter that must be at least one was zero.
    ZeroCount { name: &'static str },
    /// A power gain was negative or not finite.
    InvalidGain { index: usize },
    /// A path set failed validation.
    InvalidPathSet { reason: &'static str },
    /// A selection index lies outside `1..=points`.
    IndexOutOfRange { index: usize, points: usize },
    /// Two selected indices are closer than the minimum separation.
    SpacingViolation {
        lower: usize,
        upper: usize,
        min_separation: usize,
    },
    /// No feasible placement exists: fitting `antennas` points spaced
    /// `min_separation` apart needs at least `(antennas-1)*min_separation + 1`
    /// points.
    Infeasible {
        points: usize,
        antennas: usize,
        min_separation: usize,
    },
    /// Fewer than two hops requested from the fixed-hop solver.
    TooFewHops { hops: usize },
    /// The graph has no source-to-sink path with the requested hop count.
    NoPath { hops: usize },
    /// Brute-force enumeration would exceed the configured cap.
    EnumerationCapExceeded { combinations: u128, cap: u64 },
    /// A fixed layout of `antennas` spaced by the minimum distance does not
    /// fit in the aperture.
    LayoutTooLarge { antennas: usize },
    /// More antennas requested than candidate positions available.
    TooFewCandidates { requested: usize, available: usize },
    /// Two layout positions are closer than the minimum distance.
    PositionsTooClose { lower: f64, upper: f64 },
    /// A layout position lies outside the aperture.
    PositionOutsideAperture { position: f64, aperture: f64 },
    /// The channel vector was empty.
    EmptyChannel,
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Error::NonPositive { name } => write!(f, "{name} must be positive and finite"),
            Error::ZeroCount { name } => write!(f, "{name} must be at least 1"),
            Error::InvalidGain { index } => {
                write!(f, "gain at point {index} is negative or not finite")
            }
            Error::InvalidPathSet { reason } => write!(f, "invalid path set: {reason}"),
            Error::IndexOutOfRange { index, points } => {
                write!(f, "index {index} outside 1..={points}")
            }
            Error::SpacingViolation {
                lower,
                upper,
                min_separation,
            } => write!(
                f,
                "indices {lower} and {upper} are closer than the minimum separation {min_separation}"
            ),
            Error::Infeasible {
                points,
                antennas,
                min_separation,
            } => write!(
                f,
                "no feasible placement: {antennas} antennas spaced {min_separation} apart need \
                 {} points, grid has {points}",
                (antennas - 1) * min_separation + 1
            ),
            Error::TooFewHops { hops } => {
                write!(f, "hop count must be at least 2, got {hops}")
            }
            Error::NoPath { hops } => write!(f, "no {hops}-hop path from source to sink"),
            Error::EnumerationCapExceeded { combinations, cap } => write!(
                f,
                "enumeration of {combinations} combinations exceeds the cap of {cap}"
            ),
            Error::LayoutTooLarge { antennas } => write!(
                f,
                "{antennas} antennas at the minimum distance do not fit in the aperture"
            ),
            Error::TooFewCandidates {
                requested,
                available,
            } => write!(
                f,
                "{requested} antennas requested but only {available} candidate positions exist"
            ),
            Error::PositionsTooClose { lower, upper } => write!(
                f,
                "positions {lower} and {upper} are closer than the minimum distance"
            ),
            Error::PositionOutsideAperture { position, aperture } => {
                write!(f, "position {position} outside the aperture [0, {aperture}]")
            }
            Error::EmptyChannel => write!(f, "channel vector is empty"),
        }
    }
}

impl core::error::Error for Error {}
