use std::collections::VecDeque;

use rayon::prelude::*;

use super::{CentralityVector, Measure, MeasureParams};
use crate::error::{invalid, Result};
use crate::graph::{k_shell, Graph};
use crate::scalar::Scalar;

/// Gravity-style centrality with k-shell indices as masses:
/// `GC(i) = sum over j with 1 <= d(i, j) <= radius of ks(i) * ks(j) / d(i, j)^exponent`.
pub fn gravitational_centrality<T: Scalar>(
    graph: &Graph,
    radius: usize,
    exponent: i32,
) -> Result<CentralityVector<T>> {
    if radius == 0 {
        return Err(invalid("gravity centrality needs radius >= 1"));
    }
    let shells: Vec<T> = k_shell(graph).into_iter().map(T::from_count).collect();
    // 1 / d^exponent for every reachable depth
    let weights: Vec<T> = (0..=radius)
        .map(|d| if d == 0 { T::zero() } else { T::from_count(d).powi(exponent).recip() })
        .collect();

    let scores = (0..graph.node_count())
        .into_par_iter()
        .map_init(
            || (vec![usize::MAX; graph.node_count()], Vec::new(), VecDeque::new()),
            |(dist, visited, queue), source| {
                let mut pull = T::zero();
                dist[source] = 0;
                visited.push(source);
                queue.push_back(source);
                while let Some(v) = queue.pop_front() {
                    let d = dist[v];
                    if d > 0 {
                        pull = pull + shells[v] * weights[d];
                    }
                    if d == radius {
                        continue;
                    }
                    for &w in graph.neighbors(v) {
                        if dist[w] == usize::MAX {
                            dist[w] = d + 1;
                            visited.push(w);
                            queue.push_back(w);
                        }
                    }
                }
                for v in visited.drain(..) {
                    dist[v] = usize::MAX;
                }
                shells[source] * pull
            },
        )
        .collect();

    Ok(CentralityVector {
        measure: Measure::Gravity,
        scores,
        params: MeasureParams::Gravity { radius, exponent },
    })
}
