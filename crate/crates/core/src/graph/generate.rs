use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::Graph;
use crate::error::{invalid, Result};

/// Preferential-attachment graph on `n` nodes.
///
/// Starts from `m` isolated nodes. Every later node connects to `m` distinct
/// existing nodes, each picked with probability proportional to its current
/// degree (the first arrival has no degrees to follow and takes the whole
/// initial set). The result has exactly `m * (n - m)` edges and depends only
/// on `seed`.
pub fn generate_barabasi_albert(n: usize, m: usize, seed: u64) -> Result<Graph> {
    if m == 0 || m >= n {
        return Err(invalid(format!(
            "preferential attachment needs 1 <= m < n, got n={n}, m={m}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::with_capacity(m * (n - m));
    // every edge endpoint, so a uniform pick is degree-proportional
    let mut endpoints: Vec<usize> = Vec::with_capacity(2 * m * (n - m));
    let mut targets: Vec<usize> = (0..m).collect();

    for source in m..n {
        for &t in &targets {
            edges.push((source, t));
        }
        endpoints.extend_from_slice(&targets);
        endpoints.extend(std::iter::repeat_n(source, m));

        targets.clear();
        while targets.len() < m && source + 1 < n {
            let pick = endpoints[rng.random_range(0..endpoints.len())];
            if !targets.contains(&pick) {
                targets.push(pick);
            }
        }
    }
    Graph::from_simple_edges(n, edges)
}
