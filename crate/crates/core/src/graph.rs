//! Undirected graph representations.
//!
//! [`SimpleGraph`] is the immutable output type: no self-loops, no parallel
//! edges. [`WorkGraph`] is the mutable multigraph used while a graph is being
//! assembled; it keeps worklists of self-loops and duplicate pairs so repair
//! passes can find them without scanning.

use std::collections::{HashMap, VecDeque};

use rand::Rng;

use crate::error::{Error, Result};

/// Unordered pair stored with the smaller label first.
pub type Edge = (usize, usize);

#[inline]
pub(crate) fn ordered(u: usize, v: usize) -> Edge {
    if u <= v {
        (u, v)
    } else {
        (v, u)
    }
}

/// Undirected graph without self-loops or parallel edges on labels `0..n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimpleGraph {
    adjacency: Vec<Vec<usize>>,
    edges: Vec<Edge>,
}

impl SimpleGraph {
    /// Builds a graph from an edge list, rejecting loops, duplicates and
    /// out-of-range labels.
    pub fn from_edges(node_count: usize, edges: impl IntoIterator<Item = Edge>) -> Result<Self> {
        if node_count == 0 {
            return Err(Error::EmptyGraph);
        }
        let mut adjacency = vec![Vec::new(); node_count];
        let mut list = Vec::new();
        for (u, v) in edges {
            check_label(u, node_count)?;
            check_label(v, node_count)?;
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            let (a, b) = ordered(u, v);
            adjacency[a].push(b);
            adjacency[b].push(a);
            list.push((a, b));
        }
        list.sort_unstable();
        if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::ParallelEdge(w[0].0, w[0].1));
        }
        for nbrs in &mut adjacency {
            nbrs.sort_unstable();
        }
        Ok(Self {
            adjacency,
            edges: list,
        })
    }

    /// Graph with `node_count` nodes and no edges.
    pub fn empty(node_count: usize) -> Result<Self> {
        Self::from_edges(node_count, std::iter::empty())
    }

    pub fn node_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges as `(u, v)` with `u < v`, lexicographically sorted.
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    /// Sorted neighbor list of `v`.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adjacency.iter().map(Vec::len).collect()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.node_count() && self.adjacency[u].binary_search(&v).is_ok()
    }

    pub fn adjacency(&self) -> &[Vec<usize>] {
        &self.adjacency
    }

    pub fn is_connected(&self) -> bool {
        reaches_all(&self.adjacency)
    }
}

/// Undirected multigraph with self-loop (`E_s`) and duplicate-pair (`E_p`)
/// worklists.
///
/// `E_s` always holds one entry per self-loop currently in the multiset and
/// `E_p` one entry per surplus copy of a pair. Removing an edge keeps both
/// lists in step, so they describe exactly the defects still present.
#[derive(Debug, Clone)]
pub struct WorkGraph {
    node_count: usize,
    edges: Vec<Edge>,
    positions: HashMap<Edge, Vec<usize>>,
    degrees: Vec<usize>,
    self_loops: Vec<usize>,
    parallel: VecDeque<Edge>,
}

impl WorkGraph {
    pub fn new(node_count: usize) -> Result<Self> {
        if node_count == 0 {
            return Err(Error::EmptyGraph);
        }
        Ok(Self {
            node_count,
            edges: Vec::new(),
            positions: HashMap::new(),
            degrees: vec![0; node_count],
            self_loops: Vec::new(),
            parallel: VecDeque::new(),
        })
    }

    /// Builds a multigraph by adding every edge in order.
    pub fn from_edges(node_count: usize, edges: impl IntoIterator<Item = Edge>) -> Result<Self> {
        let mut g = Self::new(node_count)?;
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn node_count(&self) -> usize {
        self.node_count
    }

    /// Number of edges in the multiset, loops and copies included.
    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edge multiset in insertion-dependent order.
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    /// Edge multiset sorted lexicographically.
    pub fn sorted_edges(&self) -> Vec<Edge> {
        let mut e = self.edges.clone();
        e.sort_unstable();
        e
    }

    /// Degree counting each loop twice.
    pub fn degree(&self, v: usize) -> usize {
        self.degrees[v]
    }

    pub fn degrees(&self) -> &[usize] {
        &self.degrees
    }

    pub fn multiplicity(&self, u: usize, v: usize) -> usize {
        self.positions.get(&ordered(u, v)).map_or(0, Vec::len)
    }

    pub fn contains(&self, u: usize, v: usize) -> bool {
        self.multiplicity(u, v) > 0
    }

    /// `E_s`: one entry per self-loop still present.
    pub fn self_loops(&self) -> &[usize] {
        &self.self_loops
    }

    /// `E_p`: one entry per surplus copy of a pair still present.
    pub fn parallel_pairs(&self) -> &VecDeque<Edge> {
        &self.parallel
    }

    /// True when the multiset has neither loops nor repeated pairs.
    pub fn is_simple(&self) -> bool {
        self.self_loops.is_empty() && self.parallel.is_empty()
    }

    /// Adds `{u, v}`, recording a self-loop or a duplicate on the worklists.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        check_label(u, self.node_count)?;
        check_label(v, self.node_count)?;
        let e = ordered(u, v);
        if u == v {
            self.self_loops.push(u);
        } else if self.contains(u, v) {
            self.parallel.push_back(e);
        }
        self.positions.entry(e).or_default().push(self.edges.len());
        self.edges.push(e);
        self.degrees[u] += 1;
        self.degrees[v] += 1;
        Ok(())
    }

    /// Removes one copy of `{u, v}` and the worklist entry it accounted for.
    pub fn remove_edge(&mut self, u: usize, v: usize) -> Result<()> {
        let e = ordered(u, v);
        let slots = self
            .positions
            .get_mut(&e)
            .filter(|s| !s.is_empty())
            .ok_or(Error::MissingEdge(e.0, e.1))?;
        let had_copies = slots.len() > 1;
        let idx = slots.pop().expect("non-empty");
        if slots.is_empty() {
            self.positions.remove(&e);
        }
        let last = self.edges.len() - 1;
        if idx != last {
            let moved = self.edges[last];
            let moved_slots = self.positions.get_mut(&moved).expect("moved edge indexed");
            let at = moved_slots
                .iter()
                .position(|&p| p == last)
                .expect("moved edge position");
            moved_slots[at] = idx;
        }
        self.edges.swap_remove(idx);
        self.degrees[u] -= 1;
        self.degrees[v] -= 1;

        if u == v {
            if let Some(at) = self.self_loops.iter().position(|&w| w == u) {
                self.self_loops.remove(at);
            }
        } else if had_copies {
            if let Some(at) = self.parallel.iter().position(|&p| p == e) {
                self.parallel.remove(at);
            }
        }
        Ok(())
    }

    /// Uniformly random edge from the multiset.
    pub fn random_edge<R: Rng + ?Sized>(&self, rng: &mut R) -> Option<Edge> {
        if self.edges.is_empty() {
            None
        } else {
            Some(self.edges[rng.gen_range(0..self.edges.len())])
        }
    }

    /// Adjacency of the simple support (loops dropped, copies merged).
    pub fn support_adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.node_count];
        for &(u, v) in self.positions.keys() {
            if u != v {
                adj[u].push(v);
                adj[v].push(u);
            }
        }
        for nbrs in &mut adj {
            nbrs.sort_unstable();
        }
        adj
    }

    /// Simple support: every distinct non-loop pair once.
    pub fn support(&self) -> SimpleGraph {
        let mut pairs: Vec<Edge> = self
            .positions
            .keys()
            .copied()
            .filter(|&(u, v)| u != v)
            .collect();
        pairs.sort_unstable();
        SimpleGraph::from_edges(self.node_count, pairs).expect("support is simple")
    }

    /// Connectivity of the simple support.
    pub fn is_connected(&self) -> bool {
        reaches_all(&self.support_adjacency())
    }

    /// Converts to a [`SimpleGraph`] once every defect has been repaired.
    pub fn finalize(&self) -> Result<SimpleGraph> {
        if !self.is_simple() {
            return Err(Error::UnrepairedDefects {
                self_loops: self.self_loops.len(),
                parallel: self.parallel.len(),
            });
        }
        SimpleGraph::from_edges(self.node_count, self.edges.iter().copied())
    }
}

impl From<&SimpleGraph> for WorkGraph {
    fn from(g: &SimpleGraph) -> Self {
        WorkGraph::from_edges(g.node_count(), g.edges().iter().copied())
            .expect("simple graph labels are in range")
    }
}

fn check_label(label: usize, node_count: usize) -> Result<()> {
    if label < node_count {
        Ok(())
    } else {
        Err(Error::LabelOutOfRange { label, node_count })
    }
}

/// BFS from node 0 over an adjacency list.
pub(crate) fn reaches_all(adj: &[Vec<usize>]) -> bool {
    let n = adj.len();
    if n == 0 {
        return false;
    }
    let mut seen = vec![false; n];
    let mut queue = VecDeque::from([0]);
    seen[0] = true;
    let mut reached = 1;
    while let Some(u) = queue.pop_front() {
        for &w in &adj[u] {
            if !seen[w] {
                seen[w] = true;
                reached += 1;
                queue.push_back(w);
            }
        }
    }
    reached == n
}

/// Component id per node (ids in order of lowest member) and component count.
pub(crate) fn components(adj: &[Vec<usize>]) -> (Vec<usize>, usize) {
    let n = adj.len();
    let mut comp = vec![usize::MAX; n];
    let mut count = 0;
    for start in 0..n {
        if comp[start] != usize::MAX {
            continue;
        }
        comp[start] = count;
        let mut stack = vec![start];
        while let Some(u) = stack.pop() {
            for &w in &adj[u] {
                if comp[w] == usize::MAX {
                    comp[w] = count;
                    stack.push(w);
                }
            }
        }
        count += 1;
    }
    (comp, count)
}
