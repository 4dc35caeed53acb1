//! Exact shortest-path betweenness (Brandes' dependency accumulation).

use rayon::prelude::*;

use super::{require_nodes, CentralityVector, Measure, MeasureParams};
use crate::error::Result;
use crate::graph::Graph;
use crate::scalar::Scalar;

/// Sources per work unit. Partial sums are combined in source order, so the
/// result does not depend on how many threads ran.
const SOURCES_PER_CHUNK: usize = 32;

/// Betweenness centrality over unordered node pairs, with fractional credit
/// when several shortest paths exist. `normalized` divides by
/// `(n - 1)(n - 2) / 2`, the number of pairs not involving the node.
pub fn betweenness_centrality<T: Scalar>(graph: &Graph, normalized: bool) -> Result<CentralityVector<T>> {
    let n = graph.node_count();
    if normalized {
        require_nodes(graph, 3, "normalized betweenness")?;
    }
    let starts: Vec<usize> = (0..n).step_by(SOURCES_PER_CHUNK).collect();
    let partials: Vec<Vec<T>> = starts
        .into_par_iter()
        .map(|start| {
            let mut state = BrandesState::new(n);
            let mut acc = vec![T::zero(); n];
            for source in start..(start + SOURCES_PER_CHUNK).min(n) {
                state.accumulate(graph, source, &mut acc);
            }
            acc
        })
        .collect();

    let mut scores = vec![T::zero(); n];
    for partial in partials {
        for (s, p) in scores.iter_mut().zip(partial) {
            *s = *s + p;
        }
    }
    // every unordered pair was counted once from each endpoint
    let two = T::one() + T::one();
    let divisor = if normalized {
        T::from_count(n - 1) * T::from_count(n - 2)
    } else {
        two
    };
    for s in &mut scores {
        *s = *s / divisor;
    }

    Ok(CentralityVector {
        measure: Measure::Betweenness,
        scores,
        params: MeasureParams::Betweenness { normalized },
    })
}

struct BrandesState<T> {
    order: Vec<usize>,
    queue_head: usize,
    dist: Vec<usize>,
    sigma: Vec<T>,
    delta: Vec<T>,
}

impl<T: Scalar> BrandesState<T> {
    fn new(n: usize) -> Self {
        Self {
            order: Vec::with_capacity(n),
            queue_head: 0,
            dist: vec![usize::MAX; n],
            sigma: vec![T::zero(); n],
            delta: vec![T::zero(); n],
        }
    }

    fn accumulate(&mut self, graph: &Graph, source: usize, acc: &mut [T]) {
        for &v in &self.order {
            self.dist[v] = usize::MAX;
            self.sigma[v] = T::zero();
            self.delta[v] = T::zero();
        }
        self.order.clear();
        self.queue_head = 0;

        self.dist[source] = 0;
        self.sigma[source] = T::one();
        self.order.push(source);
        while self.queue_head < self.order.len() {
            let v = self.order[self.queue_head];
            self.queue_head += 1;
            let next = self.dist[v] + 1;
            for &w in graph.neighbors(v) {
                if self.dist[w] == usize::MAX {
                    self.dist[w] = next;
                    self.order.push(w);
                }
                if self.dist[w] == next {
                    self.sigma[w] = self.sigma[w] + self.sigma[v];
                }
            }
        }

        // predecessors of w are the neighbors one level closer to the source
        for i in (1..self.order.len()).rev() {
            let w = self.order[i];
            let coeff = (T::one() + self.delta[w]) / self.sigma[w];
            let prev = self.dist[w] - 1;
            for &v in graph.neighbors(w) {
                if self.dist[v] == prev {
                    self.delta[v] = self.delta[v] + self.sigma[v] * coeff;
                }
            }
            acc[w] = acc[w] + self.delta[w];
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::fixtures::{cycle, path, star};

    #[test]
    fn path_middle_carries_the_only_pair() {
        let v = betweenness_centrality::<f64>(&path(3), true).unwrap();
        assert_eq!(v.scores, vec![0.0, 1.0, 0.0]);
    }

    #[test]
    fn four_cycle_splits_credit() {
        let raw = betweenness_centrality::<f64>(&cycle(4), false).unwrap();
        assert_eq!(raw.scores, vec![0.5; 4]);
        let norm = betweenness_centrality::<f64>(&cycle(4), true).unwrap();
        for s in norm.scores {
            assert!((s - 0.5 / 3.0).abs() < 1e-15);
        }
    }

    #[test]
    fn leaves_score_zero() {
        let v = betweenness_centrality::<f32>(&star(5), true).unwrap();
        assert_eq!(v.scores[0], 1.0);
        assert!(v.scores[1..].iter().all(|&s| s == 0.0));
    }

    #[test]
    fn normalization_needs_three_nodes() {
        let g = Graph::from_simple_edges(2, [(0, 1)]).unwrap();
        assert!(betweenness_centrality::<f64>(&g, true).is_err());
        assert_eq!(betweenness_centrality::<f64>(&g, false).unwrap().scores, vec![0.0, 0.0]);
    }
}
