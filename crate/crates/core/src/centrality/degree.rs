use super::{require_nodes, CentralityVector, Measure, MeasureParams};
use crate::error::Result;
use crate::graph::Graph;
use crate::scalar::Scalar;

/// Degree divided by `n - 1`.
pub fn degree_centrality<T: Scalar>(graph: &Graph) -> Result<CentralityVector<T>> {
    require_nodes(graph, 2, "degree centrality")?;
    let denom = T::from_count(graph.node_count() - 1);
    Ok(CentralityVector {
        measure: Measure::Degree,
        scores: graph.degrees().map(|d| T::from_count(d) / denom).collect(),
        params: MeasureParams::Degree,
    })
}
