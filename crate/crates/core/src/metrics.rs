//! Global graph characteristics.
//!
//! All metrics work on [`SimpleGraph`]. Multigraph inputs ([`WorkGraph`]) are
//! handled by [`full_report_multi`]: distances use the simple support, while
//! degrees, assortativity and the Laplacian use the raw multiset (a loop adds
//! two to its node's degree). Clustering is not reported for multigraphs.

use std::collections::VecDeque;

use nalgebra::{DMatrix, SymmetricEigen};
use serde::{Deserialize, Serialize};

use crate::graph::{reaches_all, Edge, SimpleGraph, WorkGraph};

/// Eigenvalues at or below this are treated as zero.
pub const EIGEN_ZERO_TOL: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MetricsReport {
    pub n: usize,
    pub m: usize,
    pub rho: f64,
    /// No self-loops and no parallel edges.
    pub simple: bool,
    pub connected: bool,
    pub diameter: Option<usize>,
    pub avg_shortest_path: Option<f64>,
    pub clustering: Option<f64>,
    pub assortativity: Option<f64>,
    pub spectral_gap: Option<f64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ClusteringMode {
    /// Mean local coefficient, nodes of degree < 2 counting as zero.
    #[default]
    Local,
    /// Three times the triangle count over the number of connected triples.
    Transitivity,
}

pub fn density(node_count: usize, edge_count: usize) -> f64 {
    edge_count as f64 / node_count as f64
}

/// `(diameter, mean distance over unordered pairs)`, or `None` when the graph
/// is disconnected. A single node has diameter 0 and mean distance 0.
pub fn shortest_path_stats(g: &SimpleGraph) -> Option<(usize, f64)> {
    distance_stats(g.adjacency())
}

fn distance_stats(adj: &[Vec<usize>]) -> Option<(usize, f64)> {
    let n = adj.len();
    if !reaches_all(adj) {
        return None;
    }
    if n == 1 {
        return Some((0, 0.0));
    }
    let mut diameter = 0;
    let mut total: u64 = 0;
    let mut dist = vec![usize::MAX; n];
    let mut queue = VecDeque::new();
    for src in 0..n {
        dist.fill(usize::MAX);
        dist[src] = 0;
        queue.push_back(src);
        while let Some(u) = queue.pop_front() {
            for &w in &adj[u] {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    queue.push_back(w);
                }
            }
        }
        for &d in &dist[src + 1..] {
            diameter = diameter.max(d);
            total += d as u64;
        }
    }
    let pairs = (n * (n - 1) / 2) as f64;
    Some((diameter, total as f64 / pairs))
}

fn triangles_at(g: &SimpleGraph, v: usize) -> usize {
    let nbrs = g.neighbors(v);
    let mut count = 0;
    for (i, &a) in nbrs.iter().enumerate() {
        for &b in &nbrs[i + 1..] {
            if g.has_edge(a, b) {
                count += 1;
            }
        }
    }
    count
}

/// Average local clustering coefficient.
pub fn clustering_coefficient(g: &SimpleGraph) -> f64 {
    let n = g.node_count();
    let sum: f64 = (0..n)
        .map(|v| {
            let d = g.degree(v);
            if d < 2 {
                0.0
            } else {
                triangles_at(g, v) as f64 / (d * (d - 1) / 2) as f64
            }
        })
        .sum();
    sum / n as f64
}

/// Global transitivity; zero when there are no connected triples.
pub fn transitivity(g: &SimpleGraph) -> f64 {
    let (mut closed, mut triples) = (0usize, 0usize);
    for v in 0..g.node_count() {
        let d = g.degree(v);
        closed += triangles_at(g, v);
        triples += d * d.saturating_sub(1) / 2;
    }
    if triples == 0 {
        0.0
    } else {
        closed as f64 / triples as f64
    }
}

pub fn clustering(g: &SimpleGraph, mode: ClusteringMode) -> f64 {
    match mode {
        ClusteringMode::Local => clustering_coefficient(g),
        ClusteringMode::Transitivity => transitivity(g),
    }
}

/// Degree assortativity: Pearson correlation of endpoint degrees over both
/// orientations of every edge. `None` without edges or when every endpoint
/// has the same degree.
pub fn assortativity(g: &SimpleGraph) -> Option<f64> {
    pearson_over_edges(g.edges(), &g.degrees())
}

fn pearson_over_edges(edges: &[Edge], degrees: &[usize]) -> Option<f64> {
    if edges.is_empty() {
        return None;
    }
    let count = 2.0 * edges.len() as f64;
    let mean = edges
        .iter()
        .map(|&(u, v)| (degrees[u] + degrees[v]) as f64)
        .sum::<f64>()
        / count;
    let (mut cov, mut var) = (0.0, 0.0);
    for &(u, v) in edges {
        let a = degrees[u] as f64 - mean;
        let b = degrees[v] as f64 - mean;
        cov += 2.0 * a * b;
        var += a * a + b * b;
    }
    if var <= 1e-12 * count {
        return None;
    }
    Some((cov / var).clamp(-1.0, 1.0))
}

/// Eigenvalues of `I - D^-1/2 A D^-1/2`, ascending. Isolated nodes get a zero
/// row. `edges` is a multiset; each loop adds 2 to the diagonal of `A`.
pub fn normalized_laplacian_spectrum(node_count: usize, edges: &[Edge]) -> Vec<f64> {
    let lap = normalized_laplacian(node_count, edges);
    let mut values: Vec<f64> = SymmetricEigen::new(lap).eigenvalues.iter().copied().collect();
    values.sort_by(f64::total_cmp);
    values
}

pub(crate) fn normalized_laplacian(node_count: usize, edges: &[Edge]) -> DMatrix<f64> {
    let n = node_count;
    let mut adj = DMatrix::<f64>::zeros(n, n);
    for &(u, v) in edges {
        if u == v {
            adj[(u, u)] += 2.0;
        } else {
            adj[(u, v)] += 1.0;
            adj[(v, u)] += 1.0;
        }
    }
    let inv_sqrt: Vec<f64> = (0..n)
        .map(|i| {
            let d: f64 = adj.row(i).sum();
            if d > 0.0 {
                1.0 / d.sqrt()
            } else {
                0.0
            }
        })
        .collect();
    DMatrix::from_fn(n, n, |i, j| {
        let base = if i == j && inv_sqrt[i] > 0.0 { 1.0 } else { 0.0 };
        base - inv_sqrt[i] * adj[(i, j)] * inv_sqrt[j]
    })
}

/// Smallest eigenvalue above [`EIGEN_ZERO_TOL`]; `None` for edgeless graphs.
pub fn spectral_gap(g: &SimpleGraph) -> Option<f64> {
    gap_of(g.node_count(), g.edges())
}

fn gap_of(node_count: usize, edges: &[Edge]) -> Option<f64> {
    normalized_laplacian_spectrum(node_count, edges)
        .into_iter()
        .find(|&x| x > EIGEN_ZERO_TOL)
}

pub fn full_report(g: &SimpleGraph, mode: ClusteringMode) -> MetricsReport {
    let n = g.node_count();
    let paths = shortest_path_stats(g);
    MetricsReport {
        n,
        m: g.edge_count(),
        rho: density(n, g.edge_count()),
        simple: true,
        connected: paths.is_some(),
        diameter: paths.map(|p| p.0),
        avg_shortest_path: paths.map(|p| p.1),
        clustering: Some(clustering(g, mode)),
        assortativity: assortativity(g),
        spectral_gap: spectral_gap(g),
    }
}

/// Report for a multigraph on its raw multiset; clustering is left undefined.
pub fn full_report_multi(g: &WorkGraph) -> MetricsReport {
    let n = g.node_count();
    let paths = distance_stats(&g.support_adjacency());
    MetricsReport {
        n,
        m: g.edge_count(),
        rho: density(n, g.edge_count()),
        simple: g.is_simple(),
        connected: paths.is_some(),
        diameter: paths.map(|p| p.0),
        avg_shortest_path: paths.map(|p| p.1),
        clustering: None,
        assortativity: pearson_over_edges(g.edges(), g.degrees()),
        spectral_gap: gap_of(n, g.edges()),
    }
}
