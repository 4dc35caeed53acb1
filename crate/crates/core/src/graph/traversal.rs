use std::collections::VecDeque;

use super::Graph;
use crate::error::Result;

/// Hop distances from `source`; `None` marks nodes in other components.
pub fn bfs_distances(graph: &Graph, source: usize) -> Result<Vec<Option<usize>>> {
    graph.check_node(source)?;
    let mut dist = vec![None; graph.node_count()];
    let mut queue = VecDeque::new();
    dist[source] = Some(0);
    queue.push_back(source);
    while let Some(u) = queue.pop_front() {
        let next = dist[u].map(|d| d + 1);
        for &v in graph.neighbors(u) {
            if dist[v].is_none() {
                dist[v] = next;
                queue.push_back(v);
            }
        }
    }
    Ok(dist)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Components {
    /// Dense component id per node, numbered by smallest member.
    pub membership: Vec<usize>,
    pub sizes: Vec<usize>,
}

impl Components {
    pub fn count(&self) -> usize {
        self.sizes.len()
    }

    pub fn size_of(&self, node: usize) -> usize {
        self.sizes[self.membership[node]]
    }
}

pub fn connected_components(graph: &Graph) -> Components {
    const UNSET: usize = usize::MAX;
    let n = graph.node_count();
    let mut membership = vec![UNSET; n];
    let mut sizes = Vec::new();
    let mut stack = Vec::new();
    for start in 0..n {
        if membership[start] != UNSET {
            continue;
        }
        let id = sizes.len();
        let mut size = 0;
        membership[start] = id;
        stack.push(start);
        while let Some(u) = stack.pop() {
            size += 1;
            for &v in graph.neighbors(u) {
                if membership[v] == UNSET {
                    membership[v] = id;
                    stack.push(v);
                }
            }
        }
        sizes.push(size);
    }
    Components { membership, sizes }
}
