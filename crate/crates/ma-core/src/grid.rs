//! Uniform sampling of the transmit aperture.

use crate::error::Error;

/// Relative tolerance used to decide that `min_distance / spacing` is an
/// integer despite float rounding.
const INTEGRAL_TOL: f64 = 1e-9;

/// A uniform grid of candidate antenna positions `m * spacing` for
/// `m = 1..=points`, spanning an aperture of the given length.
///
/// The physical minimum antenna distance is encoded as a minimum index
/// separation `min_separation`, so that any two selected points `i`, `j`
/// with `|i - j| >= min_separation` are at least `min_distance` apart.
#[derive(Debug, Clone, PartialEq)]
pub struct SamplingGrid {
    aperture: f64,
    points: usize,
    spacing: f64,
    min_separation: usize,
    integral_separation: bool,
}

impl SamplingGrid {
    /// Builds the grid and derives the index separation for `min_distance`.
    ///
    /// `min_separation` is `ceil(min_distance / spacing)`, clamped to at
    /// least 1. Ratios within [`INTEGRAL_TOL`] of an integer are snapped to
    /// it; otherwise the grid is flagged as having a non-integral
    /// separation, since rounding up enforces a slightly larger physical
    /// spacing than requested.
    pub fn new(aperture: f64, points: usize, min_distance: f64) -> Result<Self, Error> {
        if aperture <= 0.0 || !aperture.is_finite() {
            return Err(Error::NonPositive { name: "aperture" });
        }
        if points == 0 {
            return Err(Error::ZeroCount { name: "points" });
        }
        if min_distance <= 0.0 || !min_distance.is_finite() {
            return Err(Error::NonPositive {
                name: "min_distance",
            });
        }
        let spacing = aperture / points as f64;
        let ratio = min_distance * points as f64 / aperture;
        let nearest = libm::round(ratio);
        let integral = libm::fabs(ratio - nearest) <= INTEGRAL_TOL * libm::fmax(ratio, 1.0);
        let min_separation = if integral {
            nearest as usize
        } else {
            libm::ceil(ratio) as usize
        };
        Ok(Self {
            aperture,
            points,
            spacing,
            min_separation: min_separation.max(1),
            integral_separation: integral,
        })
    }

    /// Aperture length `L`.
    pub fn aperture(&self) -> f64 {
        self.aperture
    }

    /// Number of sampling points `M`.
    pub fn points(&self) -> usize {
        self.points
    }

    /// Spacing between adjacent sampling points.
    pub fn spacing(&self) -> f64 {
        self.spacing
    }

    /// Minimum index separation between any two selected points.
    pub fn min_separation(&self) -> usize {
        self.min_separation
    }

    /// False when `min_distance` was not an integer multiple of the spacing.
    pub fn has_integral_separation(&self) -> bool {
        self.integral_separation
    }

    /// Position of sampling point `m` (1-based).
    pub fn position(&self, m: usize) -> f64 {
        debug_assert!(m >= 1 && m <= self.points);
        m as f64 * self.spacing
    }

    /// Positions of all sampling points in index order.
    pub fn positions(&self) -> impl Iterator<Item = f64> + '_ {
        (1..=self.points).map(|m| self.position(m))
    }
}
