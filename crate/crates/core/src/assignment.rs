//! Relabeling a generated graph so each node sits as close as possible to the
//! power-grid node with the same label.
//!
//! Minimizing `Tr(L C R)` over two permutation matrices has the same optimum as
//! fixing one of them to the identity, so this is the ordinary linear
//! assignment problem on the distance matrix.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{ordered, SimpleGraph};

/// Planar coordinates per label `0..n`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PositionMap(Vec<(f64, f64)>);

impl PositionMap {
    pub fn new(coords: Vec<(f64, f64)>) -> Result<Self> {
        if let Some(i) = coords.iter().position(|(x, y)| !x.is_finite() || !y.is_finite()) {
            return Err(Error::SizeMismatch(format!("label {i} has a non-finite coordinate")));
        }
        Ok(Self(coords))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn coords(&self) -> &[(f64, f64)] {
        &self.0
    }
}

/// Square matrix of non-negative finite costs, row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct CostMatrix {
    n: usize,
    data: Vec<f64>,
}

impl CostMatrix {
    pub fn from_rows(rows: Vec<Vec<f64>>) -> Result<Self> {
        let n = rows.len();
        if let Some(r) = rows.iter().position(|r| r.len() != n) {
            return Err(Error::InvalidCostMatrix(format!(
                "row {r} has {} entries, expected {n}",
                rows[r].len()
            )));
        }
        let data: Vec<f64> = rows.into_iter().flatten().collect();
        if data.iter().any(|c| !c.is_finite()) {
            return Err(Error::InvalidCostMatrix("non-finite entry".into()));
        }
        Ok(Self { n, data })
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn get(&self, row: usize, col: usize) -> f64 {
        self.data[row * self.n + col]
    }
}

/// `C[u][v]` = distance from power node `u` to cyber node `v`.
pub fn build_cost(power: &PositionMap, cyber: &PositionMap) -> Result<CostMatrix> {
    if power.len() != cyber.len() {
        return Err(Error::SizeMismatch(format!(
            "{} power positions vs {} cyber positions",
            power.len(),
            cyber.len()
        )));
    }
    let rows = power
        .coords()
        .iter()
        .map(|&(px, py)| {
            cyber
                .coords()
                .iter()
                .map(|&(cx, cy)| (px - cx).hypot(py - cy))
                .collect()
        })
        .collect();
    CostMatrix::from_rows(rows)
}

/// Bijection from old labels to new labels.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Relabeling(Vec<usize>);

impl Relabeling {
    pub fn new(perm: Vec<usize>) -> Result<Self> {
        let mut seen = vec![false; perm.len()];
        for (v, &p) in perm.iter().enumerate() {
            if p >= perm.len() || std::mem::replace(&mut seen[p], true) {
                return Err(Error::InvalidRelabeling(format!(
                    "entry {v} -> {p} breaks bijectivity"
                )));
            }
        }
        Ok(Self(perm))
    }

    pub fn identity(n: usize) -> Self {
        Self((0..n).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// New label of old label `v`.
    pub fn apply(&self, v: usize) -> usize {
        self.0[v]
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }
}

impl TryFrom<Vec<usize>> for Relabeling {
    type Error = Error;

    fn try_from(v: Vec<usize>) -> Result<Self> {
        Self::new(v)
    }
}

impl From<Relabeling> for Vec<usize> {
    fn from(r: Relabeling) -> Self {
        r.0
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Assignment {
    /// Cyber label -> power label it is matched with.
    pub relabeling: Relabeling,
    pub cost: f64,
}

/// Total cost when cyber node `v` takes label `r(v)`.
pub fn assignment_cost(c: &CostMatrix, r: &Relabeling) -> f64 {
    (0..c.size()).map(|v| c.get(r.apply(v), v)).sum()
}

/// Minimum-cost perfect matching of rows (power nodes) to columns (cyber
/// nodes), `O(n^3)` via row-by-row shortest augmenting paths with dual
/// potentials. Ties resolve toward lower column indices.
pub fn solve_assignment(c: &CostMatrix) -> Result<Assignment> {
    let n = c.size();
    // 1-based arrays; index 0 is the virtual column used to start each search
    let mut u = vec![0.0f64; n + 1];
    let mut v = vec![0.0f64; n + 1];
    let mut row_of = vec![0usize; n + 1];
    let mut way = vec![0usize; n + 1];
    for i in 1..=n {
        row_of[0] = i;
        let mut j0 = 0;
        let mut minv = vec![f64::INFINITY; n + 1];
        let mut used = vec![false; n + 1];
        loop {
            used[j0] = true;
            let i0 = row_of[j0];
            let mut delta = f64::INFINITY;
            let mut j1 = 0;
            for j in 1..=n {
                if used[j] {
                    continue;
                }
                let cur = c.get(i0 - 1, j - 1) - u[i0] - v[j];
                if cur < minv[j] {
                    minv[j] = cur;
                    way[j] = j0;
                }
                if minv[j] < delta {
                    delta = minv[j];
                    j1 = j;
                }
            }
            if j1 == 0 {
                return Err(Error::InvalidCostMatrix("no augmenting path".into()));
            }
            for j in 0..=n {
                if used[j] {
                    u[row_of[j]] += delta;
                    v[j] -= delta;
                } else {
                    minv[j] -= delta;
                }
            }
            j0 = j1;
            if row_of[j0] == 0 {
                break;
            }
        }
        loop {
            let j1 = way[j0];
            row_of[j0] = row_of[j1];
            j0 = j1;
            if j0 == 0 {
                break;
            }
        }
    }
    let perm: Vec<usize> = (1..=n).map(|j| row_of[j] - 1).collect();
    let relabeling = Relabeling::new(perm)?;
    let cost = assignment_cost(c, &relabeling);
    Ok(Assignment { relabeling, cost })
}

/// Renames every node `v` to `r(v)`.
pub fn relabel(g: &SimpleGraph, r: &Relabeling) -> Result<SimpleGraph> {
    if r.len() != g.node_count() {
        return Err(Error::InvalidRelabeling(format!(
            "relabeling covers {} labels, graph has {}",
            r.len(),
            g.node_count()
        )));
    }
    SimpleGraph::from_edges(
        g.node_count(),
        g.edges().iter().map(|&(a, b)| ordered(r.apply(a), r.apply(b))),
    )
}
