//! Feasible placements over sampling-point indices.

use alloc::vec::Vec;

use crate::error::Error;

/// A sorted set of selected sampling points (1-based indices) with the total
/// power gain at those points.
///
/// The value is always the left-to-right sum of the gains in ascending index
/// order, so equal index sets built from the same gains compare bitwise
/// equal.
#[derive(Debug, Clone, PartialEq)]
pub struct Selection {
    indices: Vec<usize>,
    value: f64,
}

impl Selection {
    /// Sorts the indices, checks feasibility against `gains.len()` points,
    /// and computes the objective value.
    pub fn new(mut indices: Vec<usize>, gains: &[f64], min_separation: usize) -> Result<Self, Error> {
        if indices.is_empty() {
            return Err(Error::ZeroCount { name: "indices" });
        }
        indices.sort_unstable();
        check_feasible(&indices, gains.len(), min_separation)?;
        let value = indices.iter().map(|&m| gains[m - 1]).sum();
        Ok(Self { indices, value })
    }

    /// Selected sampling points, ascending.
    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    /// Total power gain of the selection.
    pub fn value(&self) -> f64 {
        self.value
    }

    /// Number of selected points.
    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }
}

/// Checks that sorted `indices` form a feasible placement: every index in
/// `1..=points` and adjacent indices at least `min_separation` apart.
pub fn check_feasible(indices: &[usize], points: usize, min_separation: usize) -> Result<(), Error> {
    for &m in indices {
        if m < 1 || m > points {
            return Err(Error::IndexOutOfRange { index: m, points });
        }
    }
    for pair in indices.windows(2) {
        if pair[1] - pair[0] < min_separation {
            return Err(Error::SpacingViolation {
                lower: pair[0],
                upper: pair[1],
                min_separation,
            });
        }
    }
    Ok(())
}

/// Rejects negative or non-finite gains before they can poison a solve.
pub(crate) fn validate_gains(gains: &[f64]) -> Result<(), Error> {
    for (i, &g) in gains.iter().enumerate() {
        if g < 0.0 || !g.is_finite() {
            return Err(Error::InvalidGain { index: i + 1 });
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::vec;

    #[test]
    fn sorts_and_sums() {
        let gains = [1.0, 5.0, 2.0, 4.0, 3.0];
        let sel = Selection::new(vec![4, 2], &gains, 2).unwrap();
        assert_eq!(sel.indices(), &[2, 4]);
        assert_eq!(sel.value(), 9.0);
    }

    #[test]
    fn rejects_out_of_range_and_spacing() {
        let gains = [1.0, 5.0, 2.0];
        assert_eq!(
            Selection::new(vec![0], &gains, 1),
            Err(Error::IndexOutOfRange {
                index: 0,
                points: 3
            })
        );
        assert_eq!(
            Selection::new(vec![4], &gains, 1),
            Err(Error::IndexOutOfRange {
                index: 4,
                points: 3
            })
        );
        assert_eq!(
            Selection::new(vec![1, 2], &gains, 2),
            Err(Error::SpacingViolation {
                lower: 1,
                upper: 2,
                min_separation: 2
            })
        );
        // A duplicated index is a zero-distance spacing violation.
        assert_eq!(
            Selection::new(vec![2, 2], &gains, 1),
            Err(Error::SpacingViolation {
                lower: 2,
                upper: 2,
                min_separation: 1
            })
        );
    }

    #[test]
    fn rejects_empty() {
        assert_eq!(
            Selection::new(vec![], &[1.0], 1),
            Err(Error::ZeroCount { name: "indices" })
        );
    }
}
