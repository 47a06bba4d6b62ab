//! Reference generators for comparison: configuration model, Havel-Hakimi
//! construction, Chung-Lu, and a connectivity-restoring Havel-Hakimi variant
//! standing in for Horvát-Modes.

use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{components, ordered, Edge, SimpleGraph, WorkGraph};
use crate::sequence::is_graphical;

/// Generator names used by the CLI and comparison tables.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Model {
    Cm,
    Hh,
    Cl,
    Hm,
    Pw,
}

impl Model {
    pub const ALL: [Model; 5] = [Model::Cm, Model::Hh, Model::Cl, Model::Hm, Model::Pw];

    pub fn name(self) -> &'static str {
        match self {
            Model::Cm => "cm",
            Model::Hh => "hh",
            Model::Cl => "cl",
            Model::Hm => "hm",
            Model::Pw => "pw",
        }
    }
}

impl fmt::Display for Model {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Model {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Model::ALL
            .into_iter()
            .find(|m| m.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::InvalidRequest(format!("unknown model `{s}`")))
    }
}

/// Uniform random matching of degree stubs. The result may carry loops and
/// repeated pairs.
pub fn configuration_model<R: Rng + ?Sized>(degrees: &[usize], rng: &mut R) -> Result<WorkGraph> {
    let total: usize = degrees.iter().sum();
    if !total.is_multiple_of(2) {
        return Err(Error::InvalidSequence(format!("odd stub count {total}")));
    }
    let mut stubs: Vec<usize> = degrees
        .iter()
        .enumerate()
        .flat_map(|(v, &d)| std::iter::repeat_n(v, d))
        .collect();
    stubs.shuffle(rng);
    let mut g = WorkGraph::new(degrees.len())?;
    for pair in stubs.chunks_exact(2) {
        g.add_edge(pair[0], pair[1])?;
    }
    Ok(g)
}

/// Deterministic largest-first construction: the node with the most remaining
/// degree connects to the next-largest nodes. Ties go to the lowest label.
pub fn havel_hakimi_graph(degrees: &[usize]) -> Result<SimpleGraph> {
    if degrees.is_empty() {
        return Err(Error::EmptyGraph);
    }
    if degrees.iter().sum::<usize>() % 2 != 0 || !is_graphical(degrees) {
        return Err(Error::InvalidSequence(format!("{degrees:?} is not graphical")));
    }
    let mut remaining = degrees.to_vec();
    let mut edges = Vec::new();
    loop {
        let mut order: Vec<usize> = (0..remaining.len()).filter(|&v| remaining[v] > 0).collect();
        if order.is_empty() {
            break;
        }
        order.sort_by_key(|&v| (std::cmp::Reverse(remaining[v]), v));
        let hub = order[0];
        let d = remaining[hub];
        if d > order.len() - 1 {
            return Err(Error::Invariant("graphical sequence failed to realize".into()));
        }
        for &w in &order[1..=d] {
            remaining[w] -= 1;
            edges.push(ordered(hub, w));
        }
        remaining[hub] = 0;
    }
    SimpleGraph::from_edges(degrees.len(), edges)
}

/// Independent-edge model: `{i, j}` is present with probability
/// `min(S_i S_j / sum(S), 1)`.
pub fn chung_lu_graph<R: Rng + ?Sized>(degrees: &[usize], rng: &mut R) -> Result<SimpleGraph> {
    let n = degrees.len();
    if n < 2 {
        return Err(Error::InvalidSequence("need at least two nodes".into()));
    }
    let total = degrees.iter().sum::<usize>() as f64;
    let mut edges = Vec::new();
    if total > 0.0 {
        for i in 0..n {
            for j in i + 1..n {
                let p = (degrees[i] as f64 * degrees[j] as f64 / total).min(1.0);
                if rng.gen::<f64>() < p {
                    edges.push((i, j));
                }
            }
        }
    }
    SimpleGraph::from_edges(n, edges)
}

/// Havel-Hakimi realization followed by degree-preserving double swaps that
/// each merge components, until one component remains.
///
/// A swap takes a non-bridge edge `(a, b)` of a component that has a cycle and
/// any edge `(c, d)` of another component, and rewires them to `(a, c)` and
/// `(b, d)`. Because `(a, b)` was on a cycle its component stays whole, and
/// both halves of the other component get attached to it. This is an
/// approximation of the Horvát-Modes construction, not the published
/// sampler.
pub fn horvat_modes_graph<R: Rng + ?Sized>(degrees: &[usize], rng: &mut R) -> Result<SimpleGraph> {
    horvat_modes_observed(degrees, rng, &mut |_| {})
}

/// [`horvat_modes_graph`] with a callback receiving the graph after each swap.
pub fn horvat_modes_observed<R: Rng + ?Sized>(
    degrees: &[usize],
    rng: &mut R,
    observer: &mut dyn FnMut(&SimpleGraph),
) -> Result<SimpleGraph> {
    let n = degrees.len();
    if degrees.contains(&0) && n > 1 {
        return Err(Error::NoConnectingSwap("a node has degree 0".into()));
    }
    if degrees.iter().sum::<usize>() < 2 * (n - 1) {
        return Err(Error::NoConnectingSwap(format!(
            "degree sum {} is below 2(n - 1) = {}",
            degrees.iter().sum::<usize>(),
            2 * (n - 1)
        )));
    }
    let mut g = havel_hakimi_graph(degrees)?;
    loop {
        let (comp, count) = components(g.adjacency());
        if count == 1 {
            return Ok(g);
        }
        let bridges = bridge_set(&g);
        let mut cyclic: Vec<Edge> = g
            .edges()
            .iter()
            .copied()
            .filter(|e| bridges.binary_search(e).is_err())
            .collect();
        if cyclic.is_empty() {
            return Err(Error::NoConnectingSwap("every edge is a bridge".into()));
        }
        cyclic.sort_unstable();
        let (a, b) = *cyclic.choose(rng).expect("non-empty");
        let others: Vec<Edge> = g
            .edges()
            .iter()
            .copied()
            .filter(|&(c, _)| comp[c] != comp[a])
            .collect();
        let (c, d) = *others
            .choose(rng)
            .ok_or_else(|| Error::NoConnectingSwap("other components have no edges".into()))?;
        let (c, d) = if rng.gen::<bool>() { (c, d) } else { (d, c) };
        let edges = g
            .edges()
            .iter()
            .copied()
            .filter(|&e| e != (a, b) && e != ordered(c, d))
            .chain([ordered(a, c), ordered(b, d)]);
        let next = SimpleGraph::from_edges(n, edges)?;
        debug_assert_eq!(next.degrees(), g.degrees());
        debug_assert!(components(next.adjacency()).1 < count);
        g = next;
        observer(&g);
    }
}

/// Bridges of a simple graph, sorted, via iterative low-link DFS.
fn bridge_set(g: &SimpleGraph) -> Vec<Edge> {
    let n = g.node_count();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0; n];
    let mut bridges = Vec::new();
    let mut timer = 0;
    for root in 0..n {
        if disc[root] != usize::MAX {
            continue;
        }
        // (node, parent, next neighbor index)
        let mut stack = vec![(root, usize::MAX, 0usize)];
        disc[root] = timer;
        low[root] = timer;
        timer += 1;
        while let Some(&mut (v, parent, ref mut idx)) = stack.last_mut() {
            if let Some(&w) = g.neighbors(v).get(*idx) {
                *idx += 1;
                if w == parent {
                    continue;
                }
                if disc[w] == usize::MAX {
                    disc[w] = timer;
                    low[w] = timer;
                    timer += 1;
                    stack.push((w, v, 0));
                } else {
                    low[v] = low[v].min(disc[w]);
                }
            } else {
                stack.pop();
                if parent != usize::MAX {
                    low[parent] = low[parent].min(low[v]);
                    if low[v] > disc[parent] {
                        bridges.push(ordered(parent, v));
                    }
                }
            }
        }
    }
    bridges.sort_unstable();
    bridges
}
