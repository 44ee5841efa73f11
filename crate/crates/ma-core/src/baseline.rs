//! Fixed-position antenna baselines and antenna layouts.

use alloc::vec::Vec;

use num_complex::Complex64;

use crate::channel::{field_response, GainProfile, PathSet};
use crate::error::Error;
use crate::grid::SamplingGrid;
use crate::selection::Selection;

/// Relative slack applied to physical spacing and aperture checks so that
/// layouts built from rounded arithmetic still validate.
const LAYOUT_TOL: f64 = 1e-9;

/// How a layout was produced.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LayoutProvenance {
    /// Movable antennas placed on grid points.
    MovableGrid,
    /// Fixed antennas at predetermined positions.
    FixedUniform,
    /// Fixed antennas chosen from a candidate set by antenna selection.
    FixedSelected,
}

/// Antenna positions on the aperture together with their channel values.
#[derive(Debug, Clone, PartialEq)]
pub struct AntennaLayout {
    positions: Vec<f64>,
    channel: Vec<Complex64>,
    provenance: LayoutProvenance,
}

impl AntennaLayout {
    /// Validates spacing and aperture bounds. `positions` must be ascending
    /// and aligned with `channel`.
    pub fn new(
        positions: Vec<f64>,
        channel: Vec<Complex64>,
        provenance: LayoutProvenance,
        aperture: f64,
        min_distance: f64,
    ) -> Result<Self, Error> {
        assert_eq!(positions.len(), channel.len());
        for &x in &positions {
            if x < -LAYOUT_TOL * aperture || x > aperture * (1.0 + LAYOUT_TOL) {
                return Err(Error::PositionOutsideAperture {
                    position: x,
                    aperture,
                });
            }
        }
        for pair in positions.windows(2) {
            if pair[1] - pair[0] < min_distance * (1.0 - LAYOUT_TOL) {
                return Err(Error::PositionsTooClose {
                    lower: pair[0],
                    upper: pair[1],
                });
            }
        }
        Ok(Self {
            positions,
            channel,
            provenance,
        })
    }

    /// Layout at the grid positions of a selection, channel values taken
    /// from the matching gain profile.
    pub fn from_grid_selection(
        selection: &Selection,
        grid: &SamplingGrid,
        profile: &GainProfile,
        min_distance: f64,
    ) -> Result<Self, Error> {
        debug_assert_eq!(grid.points(), profile.len());
        let positions = selection.indices().iter().map(|&m| grid.position(m)).collect();
        let channel = selection.indices().iter().map(|&m| profile.channel(m)).collect();
        Self::new(
            positions,
            channel,
            LayoutProvenance::MovableGrid,
            grid.aperture(),
            min_distance,
        )
    }

    /// Layout at explicit positions, channel evaluated from `paths`.
    pub fn from_positions(
        positions: Vec<f64>,
        paths: &PathSet,
        wavelength: f64,
        provenance: LayoutProvenance,
        aperture: f64,
        min_distance: f64,
    ) -> Result<Self, Error> {
        let channel = positions
            .iter()
            .map(|&x| field_response(paths, x, wavelength))
            .collect();
        Self::new(positions, channel, provenance, aperture, min_distance)
    }

    pub fn len(&self) -> usize {
        self.positions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.positions.is_empty()
    }

    /// Antenna positions, ascending.
    pub fn positions(&self) -> &[f64] {
        &self.positions
    }

    /// Channel value per antenna.
    pub fn channel(&self) -> &[Complex64] {
        &self.channel
    }

    pub fn provenance(&self) -> LayoutProvenance {
        self.provenance
    }

    /// Total power gain of the layout.
    pub fn power_sum(&self) -> f64 {
        self.channel.iter().map(|h| h.norm_sqr()).sum()
    }
}

/// `antennas` fixed positions centered on the aperture and spaced exactly
/// `min_distance` apart: `x_n = L/2 + (n - (N+1)/2) * d_min`.
pub fn fpa_no_as_positions(
    aperture: f64,
    antennas: usize,
    min_distance: f64,
) -> Result<Vec<f64>, Error> {
    if aperture <= 0.0 || !aperture.is_finite() {
        return Err(Error::NonPositive { name: "aperture" });
    }
    if min_distance <= 0.0 || !min_distance.is_finite() {
        return Err(Error::NonPositive {
            name: "min_distance",
        });
    }
    if antennas == 0 {
        return Err(Error::ZeroCount { name: "antennas" });
    }
    if antennas as f64 * min_distance > aperture * (1.0 + LAYOUT_TOL) {
        return Err(Error::LayoutTooLarge { antennas });
    }
    let center = aperture / 2.0;
    let mid = (antennas as f64 + 1.0) / 2.0;
    Ok((1..=antennas)
        .map(|n| center + (n as f64 - mid) * min_distance)
        .collect())
}

/// Candidate positions `k * min_distance` for fixed antennas spanning the
/// aperture, `k = 1..=floor(L / d_min)`.
pub fn fpa_candidate_positions(aperture: f64, min_distance: f64) -> Vec<f64> {
    let count = libm::floor(aperture / min_distance + LAYOUT_TOL) as usize;
    (1..=count).map(|k| k as f64 * min_distance).collect()
}

/// Antenna selection over fixed candidates: keep the `antennas` candidates
/// with the largest channel power gains, ties towards the smaller position.
pub fn fpa_as_select(
    paths: &PathSet,
    aperture: f64,
    min_distance: f64,
    antennas: usize,
    wavelength: f64,
) -> Result<AntennaLayout, Error> {
    if antennas == 0 {
        return Err(Error::ZeroCount { name: "antennas" });
    }
    let candidates = fpa_candidate_positions(aperture, min_distance);
    if antennas > candidates.len() {
        return Err(Error::TooFewCandidates {
            requested: antennas,
            available: candidates.len(),
        });
    }
    let channel: Vec<Complex64> = candidates
        .iter()
        .map(|&x| field_response(paths, x, wavelength))
        .collect();
    let gains: Vec<f64> = channel.iter().map(|h| h.norm_sqr()).collect();
    let mut order: Vec<usize> = (0..candidates.len()).collect();
    order.sort_by(|&i, &j| gains[j].partial_cmp(&gains[i]).unwrap().then(i.cmp(&j)));
    let mut keep = order[..antennas].to_vec();
    keep.sort_unstable();
    AntennaLayout::new(
        keep.iter().map(|&i| candidates[i]).collect(),
        keep.iter().map(|&i| channel[i]).collect(),
        LayoutProvenance::FixedSelected,
        aperture,
        min_distance,
    )
}

/// Initial selection for the sequential update: the antenna-selection
/// baseline replayed on the sampling grid.
///
/// Candidate grid indices sit at the fixed-antenna positions
/// `k * min_distance`; when both `L / d_min` and `M / (L / d_min)` are
/// integral those are exactly the indices `k * M / (L / d_min)`, otherwise
/// each position snaps to the nearest grid index. The `antennas` candidates
/// with the largest gains are kept and any spacing collisions introduced by
/// snapping are repaired by shifting indices right (and back off the grid
/// end if needed).
pub fn fpa_as_grid_init(
    gains: &[f64],
    grid: &SamplingGrid,
    min_distance: f64,
    antennas: usize,
) -> Result<Selection, Error> {
    debug_assert_eq!(gains.len(), grid.points());
    if antennas == 0 {
        return Err(Error::ZeroCount { name: "antennas" });
    }
    let points = grid.points();
    let sep = grid.min_separation();
    if points < (antennas - 1) * sep + 1 {
        return Err(Error::Infeasible {
            points,
            antennas,
            min_separation: sep,
        });
    }
    let ratio = grid.aperture() / min_distance;
    let count = libm::floor(ratio + LAYOUT_TOL) as usize;
    if antennas > count {
        return Err(Error::TooFewCandidates {
            requested: antennas,
            available: count,
        });
    }
    let ratio_integral = libm::fabs(ratio - count as f64) <= LAYOUT_TOL * ratio;
    let candidates: Vec<usize> = if ratio_integral && points.is_multiple_of(count) {
        let stride = points / count;
        (1..=count).map(|k| k * stride).collect()
    } else {
        (1..=count)
            .map(|k| {
                let exact = k as f64 * min_distance / grid.spacing();
                (libm::round(exact) as usize).clamp(1, points)
            })
            .collect()
    };
    let mut order: Vec<usize> = (0..candidates.len()).collect();
    order.sort_by(|&i, &j| {
        gains[candidates[j] - 1]
            .partial_cmp(&gains[candidates[i] - 1])
            .unwrap()
            .then(candidates[i].cmp(&candidates[j]))
            .then(i.cmp(&j))
    });
    let mut chosen: Vec<usize> = order[..antennas].iter().map(|&i| candidates[i]).collect();
    chosen.sort_unstable();
    for i in 1..chosen.len() {
        if chosen[i] < chosen[i - 1] + sep {
            chosen[i] = chosen[i - 1] + sep;
        }
    }
    if *chosen.last().unwrap() > points {
        let last = chosen.len() - 1;
        chosen[last] = points;
        for i in (0..last).rev() {
            chosen[i] = chosen[i].min(chosen[i + 1] - sep);
        }
    }
    Selection::new(chosen, gains, sep)
}
