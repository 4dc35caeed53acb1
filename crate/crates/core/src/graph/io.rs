//! Plain-text edge lists: one edge per line, two whitespace-separated node
//! tokens, lines starting with `#` or `%` ignored.

use std::collections::HashMap;
use std::io::{BufRead, Write};

use serde::{Deserialize, Serialize};

use super::{DroppedEdges, Graph};
use crate::error::{Error, Result};

/// Original dataset label of every dense node id.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NodeLabels {
    labels: Vec<String>,
}

impl NodeLabels {
    pub fn new(labels: Vec<String>) -> Self {
        Self { labels }
    }

    pub fn label(&self, node: usize) -> &str {
        &self.labels[node]
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    /// `node,label` CSV.
    pub fn write_csv<W: Write>(&self, mut out: W) -> Result<()> {
        writeln!(out, "node,label")?;
        for (node, label) in self.labels.iter().enumerate() {
            writeln!(out, "{node},{label}")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone)]
pub struct LoadedGraph {
    pub graph: Graph,
    /// Present when the input was relabeled.
    pub labels: Option<NodeLabels>,
    pub dropped: DroppedEdges,
}

impl LoadedGraph {
    /// Label to report for `node`: the original token when relabeled, the id otherwise.
    pub fn display_label(&self, node: usize) -> String {
        match &self.labels {
            Some(labels) => labels.label(node).to_string(),
            None => node.to_string(),
        }
    }
}

pub fn load_edge_list(text: &str, relabel: bool) -> Result<LoadedGraph> {
    read_edge_list(text.as_bytes(), relabel)
}

/// Parses an edge list.
///
/// With `relabel`, arbitrary tokens are mapped to `0..n` in order of first
/// appearance. Without it, tokens must be non-negative integers and the graph
/// has `max id + 1` nodes.
pub fn read_edge_list<R: BufRead>(reader: R, relabel: bool) -> Result<LoadedGraph> {
    let mut edges = Vec::new();
    let mut index: HashMap<String, usize> = HashMap::new();
    let mut labels = Vec::new();
    let mut max_id = None::<usize>;

    for (line_no, line) in reader.lines().enumerate() {
        let line = line?;
        let line_no = line_no + 1;
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') || trimmed.starts_with('%') {
            continue;
        }
        let tokens: Vec<&str> = trimmed.split_whitespace().collect();
        if tokens.len() != 2 {
            return Err(Error::Parse {
                line: line_no,
                message: format!("expected 2 node tokens, found {}", tokens.len()),
            });
        }
        let mut ids = [0usize; 2];
        for (slot, token) in ids.iter_mut().zip(&tokens) {
            *slot = if relabel {
                *index.entry((*token).to_string()).or_insert_with(|| {
                    labels.push((*token).to_string());
                    labels.len() - 1
                })
            } else {
                let id: usize = token.parse().map_err(|_| Error::Parse {
                    line: line_no,
                    message: format!("node id `{token}` is not a non-negative integer"),
                })?;
                max_id = Some(max_id.map_or(id, |m| m.max(id)));
                id
            };
        }
        edges.push((ids[0], ids[1]));
    }

    if edges.is_empty() {
        return Err(Error::EmptyInput);
    }
    let node_count = if relabel {
        labels.len()
    } else {
        max_id.map_or(0, |m| m + 1)
    };
    let (graph, dropped) = Graph::from_edges(node_count, edges)?;
    Ok(LoadedGraph {
        graph,
        labels: relabel.then(|| NodeLabels::new(labels)),
        dropped,
    })
}

/// Writes each edge once as `u v`, using `labels` when given.
pub fn write_edge_list<W: Write>(graph: &Graph, labels: Option<&NodeLabels>, mut out: W) -> Result<()> {
    for (u, v) in graph.edges() {
        match labels {
            Some(l) => writeln!(out, "{} {}", l.label(u), l.label(v))?,
            None => writeln!(out, "{u} {v}")?,
        }
    }
    Ok(())
}
