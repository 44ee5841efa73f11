//! The point-selection graph: sampling points plus a dummy source and sink.

use alloc::vec::Vec;

use crate::error::Error;

/// Directed acyclic graph over vertices `0..=points+1`.
///
/// Vertex 0 is the source, vertex `points + 1` the sink, and vertex `m` in
/// `1..=points` stands for the `m`-th sampling point. An interior edge
/// `(i, j)` exists iff `j - i >= min_separation`, the source connects to
/// every interior vertex, and every interior vertex connects to the sink.
/// Every edge increases the vertex index, so the graph is acyclic by
/// construction.
///
/// Weights are stored per edge. [`PointGraph::build`] sets weight 0 on
/// source edges and `-gain(i)` on every edge leaving interior vertex `i`,
/// which makes the weight of a source-to-sink path the negated total gain of
/// the interior vertices it visits.
#[derive(Debug, Clone, PartialEq)]
pub struct PointGraph {
    points: usize,
    min_separation: usize,
    /// Incoming `(source, weight)` edges per vertex, sources ascending.
    in_edges: Vec<Vec<(usize, f64)>>,
    interior_edges: usize,
}

impl PointGraph {
    /// Graph for the given power gains (`gains[m - 1]` at point `m`).
    pub fn build(gains: &[f64], min_separation: usize) -> Result<Self, Error> {
        Self::with_weights(gains.len(), min_separation, |i, _| {
            if i == 0 {
                0.0
            } else {
                -gains[i - 1]
            }
        })
    }

    /// Same topology with arbitrary per-edge weights.
    pub fn with_weights(
        points: usize,
        min_separation: usize,
        mut weight: impl FnMut(usize, usize) -> f64,
    ) -> Result<Self, Error> {
        if points == 0 {
            return Err(Error::ZeroCount { name: "points" });
        }
        if min_separation == 0 {
            return Err(Error::ZeroCount {
                name: "min_separation",
            });
        }
        let sink = points + 1;
        let mut in_edges = Vec::with_capacity(points + 2);
        in_edges.push(Vec::new());
        let mut interior = 0usize;
        for j in 1..=points {
            let mut edges = Vec::with_capacity(1 + j.saturating_sub(min_separation));
            edges.push((0, weight(0, j)));
            for i in 1..=j.saturating_sub(min_separation) {
                edges.push((i, weight(i, j)));
                interior += 1;
            }
            in_edges.push(edges);
        }
        in_edges.push((1..=points).map(|j| (j, weight(j, sink))).collect());
        Ok(Self {
            points,
            min_separation,
            in_edges,
            interior_edges: interior,
        })
    }

    /// Number of sampling points `M`.
    pub fn points(&self) -> usize {
        self.points
    }

    pub fn min_separation(&self) -> usize {
        self.min_separation
    }

    pub fn source(&self) -> usize {
        0
    }

    pub fn sink(&self) -> usize {
        self.points + 1
    }

    /// Vertex count including source and sink.
    pub fn vertex_count(&self) -> usize {
        self.points + 2
    }

    /// Incoming `(source, weight)` edges of `vertex`, sources ascending.
    pub fn in_neighbors(&self, vertex: usize) -> &[(usize, f64)] {
        &self.in_edges[vertex]
    }

    /// Number of interior (point-to-point) edges.
    pub fn interior_edge_count(&self) -> usize {
        self.interior_edges
    }

    /// Total edge count including source and sink edges.
    pub fn edge_count(&self) -> usize {
        self.interior_edges + 2 * self.points
    }

    /// Closed form for the interior edge count:
    /// `(M - a)(M - a + 1) / 2` for separation `a <= M`, else 0.
    pub fn expected_interior_edges(points: usize, min_separation: usize) -> usize {
        if min_separation > points {
            0
        } else {
            let d = points - min_separation;
            d * (d + 1) / 2
        }
    }

    /// Weight of the edge `from -> to`, if it exists.
    pub fn edge_weight(&self, from: usize, to: usize) -> Option<f64> {
        self.in_edges
            .get(to)?
            .iter()
            .find(|&&(source, _)| source == from)
            .map(|&(_, weight)| weight)
    }

    /// Total weight of a vertex path, accumulated left to right, or `None`
    /// if any edge is missing.
    pub fn path_weight(&self, vertices: &[usize]) -> Option<f64> {
        let mut total = 0.0;
        for pair in vertices.windows(2) {
            total += self.edge_weight(pair[0], pair[1])?;
        }
        Some(total)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::vec::Vec;

    #[test]
    fn five_point_graph_edges() {
        let gains = [1.0, 5.0, 2.0, 4.0, 3.0];
        let graph = PointGraph::build(&gains, 2).unwrap();
        assert_eq!(graph.interior_edge_count(), 6);
        assert_eq!(graph.edge_count(), 16);
        assert_eq!(PointGraph::expected_interior_edges(5, 2), 6);

        let mut interior: Vec<(usize, usize)> = Vec::new();
        for j in 1..=5 {
            for &(i, _) in graph.in_neighbors(j) {
                if i >= 1 {
                    interior.push((i, j));
                }
            }
        }
        interior.sort_unstable();
        assert_eq!(
            interior,
            [(1, 3), (1, 4), (1, 5), (2, 4), (2, 5), (3, 5)]
        );
    }

    #[test]
    fn weights_follow_source_gain() {
        let gains = [1.0, 5.0, 2.0, 4.0, 3.0];
        let graph = PointGraph::build(&gains, 2).unwrap();
        for j in 1..=5 {
            assert_eq!(graph.edge_weight(0, j), Some(0.0));
            assert_eq!(graph.edge_weight(j, 6), Some(-gains[j - 1]));
        }
        assert_eq!(graph.edge_weight(1, 3), Some(-1.0));
        assert_eq!(graph.edge_weight(2, 4), Some(-5.0));
        assert_eq!(graph.edge_weight(1, 2), None);
        assert_eq!(graph.edge_weight(0, 6), None);
    }

    #[test]
    fn max_separation_leaves_only_dummy_edges() {
        let gains = [1.0; 5];
        let graph = PointGraph::build(&gains, 5).unwrap();
        assert_eq!(graph.interior_edge_count(), 0);
        assert_eq!(graph.edge_count(), 10);
    }

    #[test]
    fn edges_increase_vertex_index() {
        let gains = [0.5; 17];
        let graph = PointGraph::build(&gains, 3).unwrap();
        for v in 0..graph.vertex_count() {
            for &(u, _) in graph.in_neighbors(v) {
                assert!(u < v);
            }
        }
    }

    #[test]
    fn path_weight_accumulates() {
        let gains = [1.0, 5.0, 2.0, 4.0, 3.0];
        let graph = PointGraph::build(&gains, 2).unwrap();
        assert_eq!(graph.path_weight(&[0, 2, 4, 6]), Some(-9.0));
        assert_eq!(graph.path_weight(&[0, 2, 3, 6]), None);
    }

    #[test]
    fn edge_count_formula_scan() {
        for points in 1..=40 {
            let gains = std::vec![1.0; points];
            for sep in 1..=8 {
                let graph = PointGraph::build(&gains, sep).unwrap();
                assert_eq!(
                    graph.interior_edge_count(),
                    PointGraph::expected_interior_edges(points, sep)
                );
            }
        }
    }
}
