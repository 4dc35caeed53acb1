use super::{CentralityVector, Measure, MeasureParams};
use crate::error::{invalid, Error, Result};
use crate::graph::{connected_components, Graph};
use crate::scalar::Scalar;

/// Eigenvector centrality by power iteration.
///
/// Starts from the uniform unit vector and repeatedly applies `A + I`
/// followed by Euclidean normalization. The identity shift leaves the
/// eigenvectors of `A` unchanged but removes the sign-flipping oscillation
/// power iteration on `A` alone shows on bipartite graphs (stars, trees,
/// even cycles). Stops once no entry moves by `tol` or more.
///
/// Exceeding `max_iter` yields [`Error::NoConvergence`] with the last iterate.
pub fn eigenvector_centrality<T: Scalar>(
    graph: &Graph,
    tol: T,
    max_iter: usize,
) -> Result<CentralityVector<T>> {
    if graph.edge_count() == 0 {
        return Err(invalid("eigenvector centrality is undefined on an edgeless graph"));
    }
    if !(tol > T::zero()) || max_iter == 0 {
        return Err(invalid("eigenvector centrality needs tol > 0 and max_iter >= 1"));
    }
    let n = graph.node_count();
    let mut x = vec![T::one() / T::from_count(n).sqrt(); n];
    let mut next = vec![T::zero(); n];
    let mut last_change = T::infinity();

    for iteration in 1..=max_iter {
        for (v, slot) in next.iter_mut().enumerate() {
            *slot = graph.neighbors(v).iter().fold(x[v], |acc, &u| acc + x[u]);
        }
        let norm = next.iter().map(|&y| y * y).sum::<T>().sqrt();
        last_change = T::zero();
        for (y, &old) in next.iter_mut().zip(&x) {
            *y = *y / norm;
            last_change = last_change.max((*y - old).abs());
        }
        std::mem::swap(&mut x, &mut next);

        if last_change < tol {
            let eigenvalue = rayleigh_quotient(graph, &x);
            return Ok(CentralityVector {
                measure: Measure::Eigenvector,
                scores: x,
                params: MeasureParams::Eigenvector {
                    tolerance: tol.to_f64_lossy(),
                    max_iter,
                    iterations: iteration,
                    eigenvalue: eigenvalue.to_f64_lossy(),
                    disconnected: connected_components(graph).count() > 1,
                },
            });
        }
    }

    Err(Error::NoConvergence {
        iterations: max_iter,
        last_change: last_change.to_f64_lossy(),
        iterate: x.iter().map(|v| v.to_f64_lossy()).collect(),
    })
}

/// `x' A x` for a unit vector `x`.
fn rayleigh_quotient<T: Scalar>(graph: &Graph, x: &[T]) -> T {
    (0..graph.node_count())
        .map(|v| x[v] * graph.neighbors(v).iter().map(|&u| x[u]).sum::<T>())
        .sum()
}
