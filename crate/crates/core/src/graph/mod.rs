//! Undirected simple graphs and the structural primitives built on them.

mod generate;
mod io;
mod kshell;
mod traversal;

pub use generate::generate_barabasi_albert;
pub use io::{load_edge_list, read_edge_list, write_edge_list, LoadedGraph, NodeLabels};
pub use kshell::k_shell;
pub use traversal::{bfs_distances, connected_components, Components};

use serde::{Deserialize, Serialize};

use crate::error::{invalid, Error, Result};

/// Undirected, unweighted graph without self-loops or parallel edges.
///
/// Nodes are the contiguous ids `0..node_count`. Neighbor lists are sorted.
/// The graph is immutable once built.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    adjacency: Vec<Vec<usize>>,
    edge_count: usize,
}

/// Counts of input edges discarded while building a [`Graph`].
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct DroppedEdges {
    pub self_loops: usize,
    pub duplicates: usize,
}

impl DroppedEdges {
    pub fn total(&self) -> usize {
        self.self_loops + self.duplicates
    }
}

impl Graph {
    /// Builds a graph on `node_count` nodes, silently discarding self-loops
    /// and repeated edges (in either orientation).
    pub fn from_edges<I>(node_count: usize, edges: I) -> Result<(Self, DroppedEdges)>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut adjacency = vec![Vec::new(); node_count];
        let mut dropped = DroppedEdges::default();
        for (u, v) in edges {
            for node in [u, v] {
                if node >= node_count {
                    return Err(Error::NodeOutOfRange { node, node_count });
                }
            }
            if u == v {
                dropped.self_loops += 1;
                continue;
            }
            adjacency[u].push(v);
            adjacency[v].push(u);
        }

        let mut endpoint_total = 0;
        for list in &mut adjacency {
            list.sort_unstable();
            let before = list.len();
            list.dedup();
            // each duplicate edge leaves one extra entry on both endpoints
            dropped.duplicates += before - list.len();
            endpoint_total += list.len();
        }
        dropped.duplicates /= 2;

        Ok((
            Self {
                adjacency,
                edge_count: endpoint_total / 2,
            },
            dropped,
        ))
    }

    /// Like [`Graph::from_edges`] but rejects input that would be altered.
    pub fn from_simple_edges<I>(node_count: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let (graph, dropped) = Self::from_edges(node_count, edges)?;
        if dropped.total() > 0 {
            return Err(invalid(format!(
                "edge list is not simple ({} self-loops, {} duplicates)",
                dropped.self_loops, dropped.duplicates
            )));
        }
        Ok(graph)
    }

    pub fn node_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn neighbors(&self, node: usize) -> &[usize] {
        &self.adjacency[node]
    }

    pub fn degree(&self, node: usize) -> usize {
        self.adjacency[node].len()
    }

    pub fn degrees(&self) -> impl Iterator<Item = usize> + '_ {
        self.adjacency.iter().map(Vec::len)
    }

    pub fn max_degree(&self) -> usize {
        self.degrees().max().unwrap_or(0)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.node_count() && self.adjacency[u].binary_search(&v).is_ok()
    }

    /// Each undirected edge once, as `(u, v)` with `u < v`, in ascending order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adjacency
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
    }

    /// Relabels node `i` as `permutation[i]`.
    pub fn permuted(&self, permutation: &[usize]) -> Result<Self> {
        let n = self.node_count();
        if permutation.len() != n {
            return Err(Error::LengthMismatch {
                expected: n,
                actual: permutation.len(),
            });
        }
        let mut seen = vec![false; n];
        for &p in permutation {
            if p >= n || std::mem::replace(&mut seen[p], true) {
                return Err(invalid("relabeling is not a permutation"));
            }
        }
        Self::from_simple_edges(
            n,
            self.edges().map(|(u, v)| (permutation[u], permutation[v])),
        )
    }

    pub(crate) fn check_node(&self, node: usize) -> Result<()> {
        if node < self.node_count() {
            Ok(())
        } else {
            Err(Error::NodeOutOfRange {
                node,
                node_count: self.node_count(),
            })
        }
    }
}

/// Summary row describing a network dataset.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DatasetStats {
    pub node_count: usize,
    pub edge_count: usize,
    pub mean_degree: f64,
    pub max_degree: usize,
    pub density: f64,
}

pub fn dataset_stats(graph: &Graph) -> Result<DatasetStats> {
    let n = graph.node_count();
    if n < 2 {
        return Err(invalid(format!("dataset statistics need at least 2 nodes, got {n}")));
    }
    let m = graph.edge_count();
    Ok(DatasetStats {
        node_count: n,
        edge_count: m,
        mean_degree: 2.0 * m as f64 / n as f64,
        max_degree: graph.max_degree(),
        density: 2.0 * m as f64 / (n as f64 * (n - 1) as f64),
    })
}
