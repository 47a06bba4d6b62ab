//! File formats.
//!
//! **Edge list.** UTF-8 text. Lines starting with `#` are comments, except two
//! recognized headers: `# nodes N` fixes the node count (otherwise it is one
//! more than the largest label) and `# multigraph` marks an output that may
//! hold loops and repeated pairs. Every other non-blank line is two
//! whitespace-separated non-negative integers. The writer emits
//! `# nodes N`, then `# multigraph` when applicable, then one `u v` line per
//! edge (per copy for multigraphs) with `u <= v`, sorted, each terminated by
//! `\n`.
//!
//! **Degree counts.** CSV rows `degree,count`; an optional `degree,count`
//! header and `#` comments are skipped. Degrees not listed count zero.
//!
//! **Positions.** CSV rows `label,x,y` covering labels `0..n` exactly once;
//! optional `label,x,y` header.
//!
//! **JSON graph.** `{"nodes": N, "multigraph": bool, "edges": [[u, v], ...]}`.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::assignment::PositionMap;
use crate::dist::DegreeCountVector;
use crate::error::{Error, Result};
use crate::graph::{ordered, Edge, SimpleGraph, WorkGraph};

/// Graph as read from disk, before deciding whether it is simple.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeListGraph {
    pub nodes: usize,
    pub multigraph: bool,
    pub edges: Vec<Edge>,
}

impl EdgeListGraph {
    pub fn from_simple(g: &SimpleGraph) -> Self {
        Self {
            nodes: g.node_count(),
            multigraph: false,
            edges: g.edges().to_vec(),
        }
    }

    pub fn from_work(g: &WorkGraph) -> Self {
        Self {
            nodes: g.node_count(),
            multigraph: true,
            edges: g.sorted_edges(),
        }
    }

    /// True when some pair repeats or some edge is a loop.
    pub fn has_defects(&self) -> bool {
        let mut e: Vec<Edge> = self.edges.iter().map(|&(u, v)| ordered(u, v)).collect();
        e.sort_unstable();
        e.iter().any(|&(u, v)| u == v) || e.windows(2).any(|w| w[0] == w[1])
    }

    pub fn to_simple(&self) -> Result<SimpleGraph> {
        SimpleGraph::from_edges(self.nodes, self.edges.iter().copied())
    }

    pub fn to_work(&self) -> Result<WorkGraph> {
        WorkGraph::from_edges(self.nodes, self.edges.iter().copied())
    }

    /// Sorted, normalized edges.
    pub fn canonical_edges(&self) -> Vec<Edge> {
        let mut e: Vec<Edge> = self.edges.iter().map(|&(u, v)| ordered(u, v)).collect();
        e.sort_unstable();
        e
    }

    /// Degree per node, loops counted twice.
    pub fn degrees(&self) -> Vec<usize> {
        let mut d = vec![0; self.nodes];
        for &(u, v) in &self.edges {
            d[u] += 1;
            d[v] += 1;
        }
        d
    }
}

pub fn write_edge_list(g: &EdgeListGraph) -> String {
    let mut out = String::new();
    writeln!(out, "# nodes {}", g.nodes).unwrap();
    if g.multigraph {
        out.push_str("# multigraph\n");
    }
    for (u, v) in g.canonical_edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}

pub fn parse_edge_list(text: &str) -> Result<EdgeListGraph> {
    let mut declared = None;
    let mut multigraph = false;
    let mut edges = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim();
        let line_no = i + 1;
        if line.is_empty() {
            continue;
        }
        if let Some(comment) = line.strip_prefix('#') {
            let mut words = comment.split_whitespace();
            match (words.next(), words.next()) {
                (Some("nodes"), Some(n)) => {
                    declared = Some(n.parse::<usize>().map_err(|e| Error::Parse {
                        line: line_no,
                        msg: format!("bad node count `{n}`: {e}"),
                    })?);
                }
                (Some("multigraph"), None) => multigraph = true,
                _ => {}
            }
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        if fields.len() != 2 {
            return Err(Error::Parse {
                line: line_no,
                msg: format!("expected `u v`, got `{line}`"),
            });
        }
        let label = |s: &str| {
            s.parse::<usize>().map_err(|e| Error::Parse {
                line: line_no,
                msg: format!("bad label `{s}`: {e}"),
            })
        };
        edges.push((label(fields[0])?, label(fields[1])?));
    }
    let needed = edges.iter().map(|&(u, v)| u.max(v) + 1).max().unwrap_or(0);
    let nodes = match declared {
        Some(n) if n < needed => {
            return Err(Error::Parse {
                line: 0,
                msg: format!("header declares {n} nodes but label {} appears", needed - 1),
            })
        }
        Some(n) => n,
        None => needed,
    };
    if nodes == 0 {
        return Err(Error::Parse {
            line: 0,
            msg: "no nodes".into(),
        });
    }
    let mut g = EdgeListGraph {
        nodes,
        multigraph,
        edges,
    };
    g.multigraph |= g.has_defects();
    Ok(g)
}

pub fn write_json_graph(g: &EdgeListGraph) -> Result<String> {
    let canonical = EdgeListGraph {
        nodes: g.nodes,
        multigraph: g.multigraph,
        edges: g.canonical_edges(),
    };
    Ok(serde_json::to_string_pretty(&canonical)? + "\n")
}

pub fn parse_json_graph(text: &str) -> Result<EdgeListGraph> {
    let g: EdgeListGraph = serde_json::from_str(text)?;
    if let Some(&(u, v)) = g.edges.iter().find(|&&(u, v)| u.max(v) >= g.nodes) {
        return Err(Error::LabelOutOfRange {
            label: u.max(v),
            node_count: g.nodes,
        });
    }
    Ok(g)
}

/// Graphviz output; every node carries its degree, and repeated pairs are
/// written once per copy.
pub fn write_dot(g: &EdgeListGraph) -> String {
    let mut out = String::from("graph G {\n");
    for (v, d) in g.degrees().iter().enumerate() {
        writeln!(out, "  {v} [degree={d}];").unwrap();
    }
    for (u, v) in g.canonical_edges() {
        writeln!(out, "  {u} -- {v};").unwrap();
    }
    out.push_str("}\n");
    out
}

pub fn write_graphml(g: &EdgeListGraph) -> String {
    let mut out = String::from(concat!(
        "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n",
        "<graphml xmlns=\"http://graphml.graphdrawing.org/xmlns\">\n",
        "  <key id=\"degree\" for=\"node\" attr.name=\"degree\" attr.type=\"int\"/>\n",
        "  <graph id=\"G\" edgedefault=\"undirected\">\n",
    ));
    for (v, d) in g.degrees().iter().enumerate() {
        writeln!(out, "    <node id=\"n{v}\"><data key=\"degree\">{d}</data></node>").unwrap();
    }
    for (i, (u, v)) in g.canonical_edges().into_iter().enumerate() {
        writeln!(out, "    <edge id=\"e{i}\" source=\"n{u}\" target=\"n{v}\"/>").unwrap();
    }
    out.push_str("  </graph>\n</graphml>\n");
    out
}

fn csv_lines<'a>(text: &'a str, header: &str) -> impl Iterator<Item = (usize, Vec<String>)> + 'a {
    let header = header.to_string();
    text.lines().enumerate().filter_map(move |(i, raw)| {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            return None;
        }
        let fields: Vec<String> = line.split(',').map(|f| f.trim().to_string()).collect();
        if fields.join(",").eq_ignore_ascii_case(&header) {
            return None;
        }
        Some((i + 1, fields))
    })
}

pub fn parse_degree_counts(text: &str) -> Result<DegreeCountVector> {
    let mut counts: Vec<u64> = Vec::new();
    for (line, fields) in csv_lines(text, "degree,count") {
        if fields.len() != 2 {
            return Err(Error::Parse {
                line,
                msg: "expected `degree,count`".into(),
            });
        }
        let degree: usize = fields[0].parse().map_err(|e| Error::Parse {
            line,
            msg: format!("bad degree `{}`: {e}", fields[0]),
        })?;
        let count: u64 = fields[1].parse().map_err(|e| Error::Parse {
            line,
            msg: format!("bad count `{}`: {e}", fields[1]),
        })?;
        if degree == 0 {
            return Err(Error::Parse {
                line,
                msg: "degrees start at 1".into(),
            });
        }
        if counts.len() < degree {
            counts.resize(degree, 0);
        }
        counts[degree - 1] += count;
    }
    DegreeCountVector::new(counts)
}

pub fn write_degree_counts(k: &DegreeCountVector) -> String {
    let mut out = String::from("degree,count\n");
    for (i, c) in k.counts().iter().enumerate() {
        writeln!(out, "{},{c}", i + 1).unwrap();
    }
    out
}

pub fn parse_positions(text: &str) -> Result<PositionMap> {
    let mut entries: Vec<Option<(f64, f64)>> = Vec::new();
    for (line, fields) in csv_lines(text, "label,x,y") {
        if fields.len() != 3 {
            return Err(Error::Parse {
                line,
                msg: "expected `label,x,y`".into(),
            });
        }
        let label: usize = fields[0].parse().map_err(|e| Error::Parse {
            line,
            msg: format!("bad label `{}`: {e}", fields[0]),
        })?;
        let num = |s: &str| {
            s.parse::<f64>().map_err(|e| Error::Parse {
                line,
                msg: format!("bad coordinate `{s}`: {e}"),
            })
        };
        let xy = (num(&fields[1])?, num(&fields[2])?);
        if entries.len() <= label {
            entries.resize(label + 1, None);
        }
        if entries[label].replace(xy).is_some() {
            return Err(Error::Parse {
                line,
                msg: format!("label {label} listed twice"),
            });
        }
    }
    let coords = entries
        .into_iter()
        .enumerate()
        .map(|(i, e)| {
            e.ok_or_else(|| Error::Parse {
                line: 0,
                msg: format!("label {i} has no position"),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    PositionMap::new(coords)
}
