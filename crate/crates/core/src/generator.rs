//! Simple connected graphs with an exact degree sequence.
//!
//! Generation runs in four phases over a [`WorkGraph`]:
//!
//! 1. **Tree.** Start from the highest-degree node. Repeatedly join a node
//!    drawn from the visited pool to one drawn from the unvisited pool, both
//!    weighted by remaining degree. After `n - 1` steps every node is visited
//!    and the edges form a spanning tree.
//! 2. **Remaining edges.** Draw both endpoints of each of the `m - n + 1`
//!    remaining edges from the visited pool. Self-loops and repeated pairs are
//!    allowed here and land on the graph's worklists.
//! 3. **Self-loop repair.** A loop at `u` and an edge `(s, t)` become
//!    `(u, s)` and `(u, t)`.
//! 4. **Parallel-edge repair.** A surplus copy of `(u, v)` and an edge
//!    `(x, y)` become `(u, x), (v, y)` or `(u, y), (v, x)`.
//!
//! Every switch keeps all degrees and keeps the graph connected. Drawing with
//! the remaining degree as weight is what makes the final degrees exact rather
//! than correct only on average.
//!
//! A run that stalls (tree phase out of capacity, or a repair that cannot find
//! a partner within its budget) is restarted on a fresh random stream.

use rand::Rng;

use crate::error::{Error, Result};
use crate::graph::{Edge, SimpleGraph, WorkGraph};
use crate::pool::NodePool;
use crate::rng::{stream, GraphRng, Purpose};
use crate::sequence::DegreeSequence;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GeneratorConfig {
    /// Candidate draws allowed per repair item are `switch_budget_factor * m`.
    pub switch_budget_factor: usize,
    /// Attempts after the first one before giving up.
    pub max_restarts: usize,
}

impl Default for GeneratorConfig {
    fn default() -> Self {
        Self {
            switch_budget_factor: 50,
            max_restarts: 20,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SwitchKind {
    SelfLoop,
    Parallel,
}

/// One completed edge switch.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SwitchEvent {
    pub kind: SwitchKind,
    pub removed: [Edge; 2],
    pub added: [Edge; 2],
}

/// Mutable state of one generation attempt.
#[derive(Debug)]
pub struct GenerationState {
    pub graph: WorkGraph,
    pub visited: NodePool,
    pub unvisited: NodePool,
    pub rng: GraphRng,
    /// Candidate draws allowed per repair item.
    pub switch_budget: usize,
}

impl GenerationState {
    /// Seeds the visited pool with the highest-degree node (lowest label on
    /// ties) and puts everything else in the unvisited pool.
    pub fn new(seq: &DegreeSequence, rng: GraphRng, switch_budget: usize) -> Result<Self> {
        let degrees = seq.degrees();
        let n = degrees.len();
        let start = degrees
            .iter()
            .enumerate()
            .max_by_key(|&(i, &d)| (d, std::cmp::Reverse(i)))
            .map(|(i, _)| i)
            .expect("non-empty sequence");
        let mut visited = NodePool::new(n);
        let mut unvisited = NodePool::new(n);
        for (v, &d) in degrees.iter().enumerate() {
            if v == start {
                visited.insert(v, d);
            } else {
                unvisited.insert(v, d);
            }
        }
        Ok(Self {
            graph: WorkGraph::new(n)?,
            visited,
            unvisited,
            rng,
            switch_budget: switch_budget.max(1),
        })
    }

    pub fn remaining_total(&self) -> usize {
        self.visited.total() + self.unvisited.total()
    }
}

/// Draws a node weighted by remaining degree and decrements it.
pub fn sample_node<R: Rng + ?Sized>(pool: &mut NodePool, rng: &mut R) -> Result<usize> {
    pool.sample(rng)
}

/// Spanning-tree phase. Moves every unvisited node into the visited pool,
/// placing exactly `n - 1` edges.
pub fn generate_tree(state: &mut GenerationState) -> Result<()> {
    while !state.unvisited.is_empty() {
        if state.visited.total() == 0 {
            return Err(Error::TreeDeadEnd {
                unvisited: state.unvisited.len(),
            });
        }
        let u = sample_node(&mut state.visited, &mut state.rng)?;
        let v = sample_node(&mut state.unvisited, &mut state.rng)?;
        let rest = state.unvisited.remove(v).expect("v was unvisited");
        state.visited.insert(v, rest);
        state.graph.add_edge(u, v)?;
    }
    Ok(())
}

/// Places the remaining edges between visited nodes until every remaining
/// degree is zero. Loops and repeated pairs are left for the repair phases.
pub fn add_remaining_edges(state: &mut GenerationState) -> Result<()> {
    if !state.unvisited.is_empty() {
        return Err(Error::Invariant("tree phase incomplete".into()));
    }
    if !state.visited.total().is_multiple_of(2) {
        return Err(Error::Invariant("odd remaining degree total".into()));
    }
    while state.visited.total() > 0 {
        let u = sample_node(&mut state.visited, &mut state.rng)?;
        let v = sample_node(&mut state.visited, &mut state.rng)?;
        state.graph.add_edge(u, v)?;
    }
    Ok(())
}

/// Removes every self-loop by edge switching.
pub fn remove_self_loops(
    state: &mut GenerationState,
    observer: &mut dyn FnMut(&SwitchEvent, &WorkGraph),
) -> Result<()> {
    while !state.graph.self_loops().is_empty() {
        let loops = state.graph.self_loops();
        let u = loops[state.rng.gen_range(0..loops.len())];
        let mut done = false;
        for _ in 0..state.switch_budget {
            let (s, t) = state.graph.random_edge(&mut state.rng).expect("loop is an edge");
            if s == t || s == u || t == u {
                continue;
            }
            if state.graph.contains(u, s) || state.graph.contains(u, t) {
                continue;
            }
            let g = &mut state.graph;
            g.remove_edge(u, u)?;
            g.remove_edge(s, t)?;
            g.add_edge(u, s)?;
            g.add_edge(u, t)?;
            let event = SwitchEvent {
                kind: SwitchKind::SelfLoop,
                removed: [(u, u), (s, t)],
                added: [(u, s), (u, t)],
            };
            debug_assert!(g.is_connected(), "self-loop switch disconnected the graph");
            observer(&event, g);
            done = true;
            break;
        }
        if !done {
            return Err(Error::SwitchBudgetExhausted {
                kind: "self-loop",
                budget: state.switch_budget,
            });
        }
    }
    Ok(())
}

/// Removes every surplus copy of a pair by edge switching. Expects no
/// self-loops.
pub fn remove_parallel_edges(
    state: &mut GenerationState,
    observer: &mut dyn FnMut(&SwitchEvent, &WorkGraph),
) -> Result<()> {
    if !state.graph.self_loops().is_empty() {
        return Err(Error::Invariant("self-loops must be removed first".into()));
    }
    while let Some(&(u, v)) = state.graph.parallel_pairs().front() {
        let mut done = false;
        for _ in 0..state.switch_budget {
            let (x, y) = state.graph.random_edge(&mut state.rng).expect("pair is an edge");
            if x == y || x == u || x == v || y == u || y == v {
                continue;
            }
            let g = &state.graph;
            let added = if !g.contains(u, x) && !g.contains(v, y) {
                [(u, x), (v, y)]
            } else if !g.contains(u, y) && !g.contains(v, x) {
                [(u, y), (v, x)]
            } else {
                continue;
            };
            let g = &mut state.graph;
            g.remove_edge(u, v)?;
            g.remove_edge(x, y)?;
            g.add_edge(added[0].0, added[0].1)?;
            g.add_edge(added[1].0, added[1].1)?;
            let event = SwitchEvent {
                kind: SwitchKind::Parallel,
                removed: [(u, v), (x, y)],
                added,
            };
            debug_assert!(g.is_connected(), "parallel switch disconnected the graph");
            observer(&event, g);
            done = true;
            break;
        }
        if !done {
            return Err(Error::SwitchBudgetExhausted {
                kind: "parallel edge",
                budget: state.switch_budget,
            });
        }
    }
    Ok(())
}

/// Generates a simple connected graph whose degrees equal `seq` exactly.
pub fn generate(seq: &DegreeSequence, seed: u64, config: GeneratorConfig) -> Result<SimpleGraph> {
    generate_observed(seq, seed, config, &mut |_, _| {})
}

/// [`generate`] with a callback invoked after every edge switch.
pub fn generate_observed(
    seq: &DegreeSequence,
    seed: u64,
    config: GeneratorConfig,
    observer: &mut dyn FnMut(&SwitchEvent, &WorkGraph),
) -> Result<SimpleGraph> {
    let n = seq.len();
    let m = seq.edge_count();
    if m + 1 < n {
        return Err(Error::InvalidSequence(format!(
            "{m} edges cannot connect {n} nodes"
        )));
    }
    let budget = config.switch_budget_factor.saturating_mul(m).max(1);
    let mut last = None;
    for attempt in 0..=config.max_restarts {
        let index = u32::try_from(attempt).unwrap_or(u32::MAX);
        let mut state = GenerationState::new(seq, stream(seed, Purpose::Generator, index), budget)?;
        match run_phases(&mut state, observer) {
            Ok(g) => return Ok(g),
            Err(
                e @ (Error::TreeDeadEnd { .. } | Error::SwitchBudgetExhausted { .. }),
            ) => last = Some(e),
            Err(e) => return Err(e),
        }
    }
    Err(Error::RestartsExhausted {
        attempts: config.max_restarts + 1,
        last: last.map(|e| e.to_string()).unwrap_or_default(),
    })
}

fn run_phases(
    state: &mut GenerationState,
    observer: &mut dyn FnMut(&SwitchEvent, &WorkGraph),
) -> Result<SimpleGraph> {
    generate_tree(state)?;
    add_remaining_edges(state)?;
    remove_self_loops(state, observer)?;
    remove_parallel_edges(state, observer)?;
    let g = state.graph.finalize()?;
    if !g.is_connected() {
        return Err(Error::Invariant("generated graph is disconnected".into()));
    }
    Ok(g)
}
