use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{require_nodes, CentralityVector, Measure, MeasureParams};
use crate::error::Result;
use crate::graph::Graph;
use crate::scalar::Scalar;

/// How closeness treats nodes that cannot reach the whole graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ClosenessConvention {
    /// `n / sum of distances to reachable nodes`.
    InverseSum,
    /// `((r - 1) / sum) * ((r - 1) / (n - 1))` with `r` the size of the
    /// node's component. Lies in `[0, 1]`.
    ComponentScaled,
}

impl std::str::FromStr for ClosenessConvention {
    type Err = crate::Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "inverse_sum" | "inverse-sum" => Ok(Self::InverseSum),
            "component_scaled" | "component-scaled" => Ok(Self::ComponentScaled),
            other => Err(crate::error::invalid(format!("unknown closeness convention `{other}`"))),
        }
    }
}

/// Closeness centrality. Isolated nodes score 0 under both conventions.
pub fn closeness_centrality<T: Scalar>(
    graph: &Graph,
    convention: ClosenessConvention,
) -> Result<CentralityVector<T>> {
    require_nodes(graph, 2, "closeness centrality")?;
    let n = graph.node_count();
    let n_t = T::from_count(n);
    let scores = distance_sums(graph)
        .into_iter()
        .map(|(total, reached)| {
            if total == 0 {
                return T::zero();
            }
            let total = T::from_count(total);
            match convention {
                ClosenessConvention::InverseSum => n_t / total,
                ClosenessConvention::ComponentScaled => {
                    let reached = T::from_count(reached);
                    (reached / total) * (reached / T::from_count(n - 1))
                }
            }
        })
        .collect();
    Ok(CentralityVector {
        measure: Measure::Closeness,
        scores,
        params: MeasureParams::Closeness { convention },
    })
}

const BATCH: usize = 64;

/// Per node: (sum of hop distances to every reachable node, number of
/// reachable nodes other than itself).
///
/// Runs 64 breadth-first searches at once, one bit lane per source, so each
/// edge is scanned once per level for the whole batch.
pub(crate) fn distance_sums(graph: &Graph) -> Vec<(usize, usize)> {
    let n = graph.node_count();
    let batches: Vec<usize> = (0..n).step_by(BATCH).collect();
    batches
        .into_par_iter()
        .flat_map_iter(|start| batch_distance_sums(graph, start, (start + BATCH).min(n)))
        .collect()
}

fn batch_distance_sums(graph: &Graph, start: usize, end: usize) -> Vec<(usize, usize)> {
    let n = graph.node_count();
    let mut seen = vec![0u64; n];
    let mut frontier = vec![0u64; n];
    let mut incoming = vec![0u64; n];
    let mut totals = vec![(0usize, 0usize); end - start];

    let mut active: Vec<usize> = (start..end).collect();
    for (lane, &s) in active.iter().enumerate() {
        seen[s] = 1 << lane;
        frontier[s] = 1 << lane;
    }
    let mut touched = Vec::new();
    let mut depth = 0;

    while !active.is_empty() {
        depth += 1;
        for &v in &active {
            let lanes = std::mem::take(&mut frontier[v]);
            for &w in graph.neighbors(v) {
                if incoming[w] == 0 {
                    touched.push(w);
                }
                incoming[w] |= lanes;
            }
        }
        active.clear();
        for &w in &touched {
            let fresh = std::mem::take(&mut incoming[w]) & !seen[w];
            if fresh == 0 {
                continue;
            }
            seen[w] |= fresh;
            frontier[w] = fresh;
            active.push(w);
            let mut lanes = fresh;
            while lanes != 0 {
                let lane = lanes.trailing_zeros() as usize;
                totals[lane].0 += depth;
                totals[lane].1 += 1;
                lanes &= lanes - 1;
            }
        }
        touched.clear();
    }
    totals
}
