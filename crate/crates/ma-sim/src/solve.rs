//! `solve` subcommand: optimal and heuristic placement for a gains file.

use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use anyhow::{bail, Context, Result};

use ma_core::{fpa_as_grid_init, sequential_update, solve_optimal, SamplingGrid, Selection};

use crate::format::{format_sig6, linear_to_db};

/// Parses a gains file: one nonnegative linear power gain per line, blank
/// lines ignored.
pub fn parse_gains(text: &str) -> Result<Vec<f64>> {
    let mut gains = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let value: f64 = line
            .parse()
            .with_context(|| format!("line {}: `{line}` is not a number", lineno + 1))?;
        if value < 0.0 || !value.is_finite() {
            bail!("line {}: gain {value} must be nonnegative and finite", lineno + 1);
        }
        gains.push(value);
    }
    if gains.is_empty() {
        bail!("gains file contains no values");
    }
    Ok(gains)
}

pub fn read_gains_file(path: &Path) -> Result<Vec<f64>> {
    let text = fs::read_to_string(path)
        .with_context(|| format!("reading gains file {}", path.display()))?;
    parse_gains(&text)
}

/// Solves a gains file on the grid implied by the aperture and minimum
/// distance, and reports the optimal and sequential-update selections.
pub fn solve_report(
    gains: &[f64],
    aperture: f64,
    min_distance: f64,
    antennas: usize,
) -> Result<String> {
    let grid = SamplingGrid::new(aperture, gains.len(), min_distance)?;
    let optimal = solve_optimal(gains, grid.min_separation(), antennas)?;
    let init = fpa_as_grid_init(gains, &grid, min_distance, antennas)?;
    let update = sequential_update(gains, grid.min_separation(), &init)?;

    let mut out = String::new();
    writeln!(
        out,
        "points: {}  spacing: {} m  min separation: {} indices",
        grid.points(),
        format_sig6(grid.spacing()),
        grid.min_separation()
    )?;
    writeln!(out, "optimal:    {}", describe(&optimal))?;
    writeln!(out, "sequential: {}", describe(&update.selection))?;
    writeln!(out, "init:       {}", describe(&init))?;
    Ok(out)
}

fn describe(selection: &Selection) -> String {
    let indices: Vec<String> = selection.indices().iter().map(|m| m.to_string()).collect();
    format!(
        "value {} ({} dB)  points {}",
        format_sig6(selection.value()),
        format_sig6(linear_to_db(selection.value())),
        indices.join(" ")
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_gains_with_blank_lines() {
        let gains = parse_gains("1.0\n\n  2.5 \n0\n").unwrap();
        assert_eq!(gains, vec![1.0, 2.5, 0.0]);
    }

    #[test]
    fn rejects_bad_lines() {
        assert!(parse_gains("1.0\nx\n").is_err());
        assert!(parse_gains("-2\n").is_err());
        assert!(parse_gains("").is_err());
    }

    #[test]
    fn report_names_both_selections() {
        let gains = [1.0, 5.0, 2.0, 4.0, 3.0];
        // Aperture 0.05 with spacing 0.01 and min distance 0.02: separation 2.
        let report = solve_report(&gains, 0.05, 0.02, 2).unwrap();
        assert!(report.contains("min separation: 2"));
        assert!(report.contains("optimal:    value 9 (9.54243 dB)  points 2 4"));
        assert!(report.contains("sequential:"));
    }
}
