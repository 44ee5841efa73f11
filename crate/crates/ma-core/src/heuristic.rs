//! Linear-time sequential-update heuristic.
//!
//! Starting from a feasible selection, antennas are revisited once each in
//! ascending order of their initial index. In step `n` the candidate set
//! holds every point far enough from both the already-updated points and the
//! not-yet-updated initial points; the antenna moves to the candidate with
//! the largest gain. Each step only improves the objective because the
//! current point always remains a candidate. The work per step is one scan
//! over the grid, so the total number of gain lookups is between
//! `M*N - N*(N-1)*(2a - 1)` and `M*N`.

use alloc::vec::Vec;

use crate::error::Error;
use crate::selection::{check_feasible, validate_gains, Selection};

/// Mid-run state of the sequential update.
#[derive(Debug, Clone)]
pub struct HeuristicState<'a> {
    gains: &'a [f64],
    min_separation: usize,
    /// `positions[i]` is the updated point for `i < step` and the initial
    /// point for `i >= step`.
    positions: Vec<usize>,
    step: usize,
    gain_lookups: u64,
}

/// Result of a completed sequential update.
#[derive(Debug, Clone, PartialEq)]
pub struct SequentialUpdate {
    pub selection: Selection,
    /// Gains read while scanning candidate sets.
    pub gain_lookups: u64,
}

impl<'a> HeuristicState<'a> {
    /// Starts from a feasible initial selection on `gains.len()` points.
    pub fn new(
        gains: &'a [f64],
        min_separation: usize,
        init: &Selection,
    ) -> Result<Self, Error> {
        if min_separation == 0 {
            return Err(Error::ZeroCount {
                name: "min_separation",
            });
        }
        validate_gains(gains)?;
        check_feasible(init.indices(), gains.len(), min_separation)?;
        Ok(Self {
            gains,
            min_separation,
            positions: init.indices().to_vec(),
            step: 0,
            gain_lookups: 0,
        })
    }

    /// Candidate points for the next update: every grid point at least
    /// `min_separation` away from all other antennas (updated or initial).
    ///
    /// Never empty while the state is live, since the point being updated
    /// always qualifies.
    pub fn candidate_set(&self) -> Vec<usize> {
        let sep = self.min_separation;
        (1..=self.gains.len())
            .filter(|&m| {
                self.positions
                    .iter()
                    .enumerate()
                    .all(|(i, &p)| i == self.step || m.abs_diff(p) >= sep)
            })
            .collect()
    }

    /// Moves the current antenna to the best candidate and returns the
    /// chosen point, or `None` when every antenna has been updated.
    pub fn advance(&mut self) -> Option<usize> {
        if self.step >= self.positions.len() {
            return None;
        }
        let mut best: Option<(usize, f64)> = None;
        for m in self.candidate_set() {
            self.gain_lookups += 1;
            let g = self.gains[m - 1];
            if best.is_none_or(|(_, bg)| g > bg) {
                best = Some((m, g));
            }
        }
        let (chosen, _) = best.expect("candidate set is never empty for a feasible start");
        self.positions[self.step] = chosen;
        self.step += 1;
        Some(chosen)
    }

    /// Index of the next antenna to update (0-based).
    pub fn step(&self) -> usize {
        self.step
    }

    pub fn is_done(&self) -> bool {
        self.step >= self.positions.len()
    }

    /// Current mix of updated and initial points, in update order.
    pub fn positions(&self) -> &[usize] {
        &self.positions
    }

    pub fn gain_lookups(&self) -> u64 {
        self.gain_lookups
    }

    /// Runs the remaining steps and returns the sorted selection.
    pub fn finish(mut self) -> Result<SequentialUpdate, Error> {
        while self.advance().is_some() {}
        let gain_lookups = self.gain_lookups;
        let selection = Selection::new(self.positions, self.gains, self.min_separation)?;
        Ok(SequentialUpdate {
            selection,
            gain_lookups,
        })
    }
}

/// Runs the sequential update from `init` to completion.
pub fn sequential_update(
    gains: &[f64],
    min_separation: usize,
    init: &Selection,
) -> Result<SequentialUpdate, Error> {
    HeuristicState::new(gains, min_separation, init)?.finish()
}
