//! Exact placement via a fixed-hop shortest path, plus a brute-force oracle.
//!
//! Placing `N` antennas corresponds one-to-one to an `(N+1)`-hop path from
//! the source to the sink of the point graph, and the path weight is the
//! negated total gain of the selected points. The `(N+1)`-hop shortest path
//! is found by a layered dynamic program over the DAG; its complexity is
//! `O(N * |edges|) = O(N * M^2)`.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::Error;
use crate::graph::PointGraph;
use crate::selection::{validate_gains, Selection};

/// Default cap on the brute-force enumeration size.
pub const DEFAULT_ENUMERATION_CAP: u64 = 10_000_000;

/// Layered shortest-path table.
///
/// `cost[k][v]` is the weight of the best `k`-hop source-to-`v` path, `None`
/// when no such path exists (the infinite-weight virtual path);
/// `predecessor[k][v]` is the previous vertex on that path.
#[derive(Debug, Clone, PartialEq)]
pub struct DpTable {
    pub cost: Vec<Vec<Option<f64>>>,
    pub predecessor: Vec<Vec<Option<usize>>>,
}

/// A fixed-hop shortest path together with the DP work performed.
#[derive(Debug, Clone, PartialEq)]
pub struct HopPath {
    /// Vertex sequence from source to sink.
    pub vertices: Vec<usize>,
    /// Total edge weight.
    pub weight: f64,
    /// Edges examined across all DP layers.
    pub relaxations: u64,
}

/// Runs the layered DP up to `hops` and returns the full table and the
/// number of edge relaxations.
///
/// Layer `k` holds the best `k`-hop paths; ties are broken towards the
/// smallest predecessor index. The implementation reads a weight per edge,
/// so it stays correct for arbitrary edge weights, not only the
/// source-dependent weights of [`PointGraph::build`].
pub fn hop_table(graph: &PointGraph, hops: usize) -> Result<(DpTable, u64), Error> {
    if hops < 2 {
        return Err(Error::TooFewHops { hops });
    }
    let vertices = graph.vertex_count();
    let mut cost = vec![vec![None; vertices]; hops + 1];
    let mut predecessor = vec![vec![None; vertices]; hops + 1];
    cost[0][graph.source()] = Some(0.0);
    let mut relaxations = 0u64;
    for k in 1..=hops {
        for v in 0..vertices {
            let mut best: Option<(f64, usize)> = None;
            for &(u, w) in graph.in_neighbors(v) {
                relaxations += 1;
                if let Some(prev) = cost[k - 1][u] {
                    let c = prev + w;
                    if best.is_none_or(|(b, _)| c < b) {
                        best = Some((c, u));
                    }
                }
            }
            if let Some((c, u)) = best {
                cost[k][v] = Some(c);
                predecessor[k][v] = Some(u);
            }
        }
    }
    Ok((DpTable { cost, predecessor }, relaxations))
}

/// Shortest source-to-sink path with exactly `hops` edges.
pub fn fixed_hop_shortest_path(graph: &PointGraph, hops: usize) -> Result<HopPath, Error> {
    let (table, relaxations) = hop_table(graph, hops)?;
    let sink = graph.sink();
    let weight = table.cost[hops][sink].ok_or(Error::NoPath { hops })?;
    let mut vertices = vec![0usize; hops + 1];
    vertices[hops] = sink;
    for k in (1..=hops).rev() {
        vertices[k - 1] = table.predecessor[k][vertices[k]]
            .expect("finite cost entries always have a predecessor");
    }
    debug_assert!(vertices.windows(2).all(|p| p[0] < p[1]));
    Ok(HopPath {
        vertices,
        weight,
        relaxations,
    })
}

/// Provably optimal placement of `antennas` points maximizing the total gain
/// under the minimum-separation constraint.
pub fn solve_optimal(
    gains: &[f64],
    min_separation: usize,
    antennas: usize,
) -> Result<Selection, Error> {
    check_instance(gains, min_separation, antennas)?;
    let graph = PointGraph::build(gains, min_separation)?;
    let path = fixed_hop_shortest_path(&graph, antennas + 1)?;
    let selection = Selection::new(path.vertices[1..=antennas].to_vec(), gains, min_separation)?;
    debug_assert_eq!(selection.value(), -path.weight);
    Ok(selection)
}

/// Optimal selection found by exhaustive enumeration, with the number of
/// combinations visited.
#[derive(Debug, Clone, PartialEq)]
pub struct BruteForceResult {
    pub selection: Selection,
    pub combinations: u64,
}

/// Exhaustive search with the default enumeration cap.
pub fn brute_force_oracle(
    gains: &[f64],
    min_separation: usize,
    antennas: usize,
) -> Result<BruteForceResult, Error> {
    brute_force_oracle_with_cap(gains, min_separation, antennas, DEFAULT_ENUMERATION_CAP)
}

/// Exhaustive search over all feasible selections in lexicographic order.
///
/// Ties are resolved towards the lexicographically smallest index tuple.
pub fn brute_force_oracle_with_cap(
    gains: &[f64],
    min_separation: usize,
    antennas: usize,
    cap: u64,
) -> Result<BruteForceResult, Error> {
    check_instance(gains, min_separation, antennas)?;
    let total = feasible_combinations(gains.len(), min_separation, antennas);
    if total > cap as u128 {
        return Err(Error::EnumerationCapExceeded {
            combinations: total,
            cap,
        });
    }
    let mut best: Option<(f64, Vec<usize>)> = None;
    let mut count = 0u64;
    let mut prefix = Vec::with_capacity(antennas);
    enumerate(
        gains,
        min_separation,
        1,
        antennas,
        0.0,
        &mut prefix,
        &mut count,
        &mut best,
    );
    debug_assert_eq!(count as u128, total);
    let (_, indices) = best.expect("feasible instances enumerate at least one selection");
    let selection = Selection::new(indices, gains, min_separation)?;
    Ok(BruteForceResult {
        selection,
        combinations: count,
    })
}

#[allow(clippy::too_many_arguments)]
fn enumerate(
    gains: &[f64],
    min_separation: usize,
    start: usize,
    remaining: usize,
    partial: f64,
    prefix: &mut Vec<usize>,
    count: &mut u64,
    best: &mut Option<(f64, Vec<usize>)>,
) {
    if remaining == 0 {
        *count += 1;
        if best.as_ref().is_none_or(|(b, _)| partial > *b) {
            *best = Some((partial, prefix.clone()));
        }
        return;
    }
    // Leave room for the remaining picks at minimum separation.
    let upper = gains.len() - (remaining - 1) * min_separation;
    for m in start..=upper {
        prefix.push(m);
        enumerate(
            gains,
            min_separation,
            m + min_separation,
            remaining - 1,
            partial + gains[m - 1],
            prefix,
            count,
            best,
        );
        prefix.pop();
    }
}

/// Number of feasible placements:
/// `C(points - (min_separation - 1)(antennas - 1), antennas)`.
///
/// Saturates at `u128::MAX` on overflow.
pub fn feasible_combinations(points: usize, min_separation: usize, antennas: usize) -> u128 {
    let shrink = (min_separation - 1) * (antennas - 1);
    if shrink >= points {
        return 0;
    }
    binomial(points - shrink, antennas)
}

fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut c: u128 = 1;
    for i in 1..=k {
        c = match c.checked_mul((n - k + i) as u128) {
            Some(x) => x / i as u128,
            None => return u128::MAX,
        };
    }
    c
}

fn check_instance(gains: &[f64], min_separation: usize, antennas: usize) -> Result<(), Error> {
    if gains.is_empty() {
        return Err(Error::ZeroCount { name: "gains" });
    }
    if min_separation == 0 {
        return Err(Error::ZeroCount {
            name: "min_separation",
        });
    }
    if antennas == 0 {
        return Err(Error::ZeroCount { name: "antennas" });
    }
    validate_gains(gains)?;
    let needed = (antennas - 1) * min_separation + 1;
    if gains.len() < needed {
        return Err(Error::Infeasible {
            points: gains.len(),
            antennas,
            min_separation,
        });
    }
    Ok(())
}
