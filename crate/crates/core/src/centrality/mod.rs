//! Per-node centrality measures.

mod betweenness;
mod closeness;
mod degree;
mod eigenvector;
mod gravity;

pub use betweenness::betweenness_centrality;
pub use closeness::{closeness_centrality, ClosenessConvention};
pub use degree::degree_centrality;
pub use eigenvector::eigenvector_centrality;
pub use gravity::gravitational_centrality;

use std::fmt;
use std::io::Write;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{invalid, Error, Result};
use crate::graph::{Graph, NodeLabels};
use crate::scalar::Scalar;

/// The five centrality measures.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Measure {
    #[serde(rename = "DC")]
    Degree,
    #[serde(rename = "EC")]
    Eigenvector,
    #[serde(rename = "CC")]
    Closeness,
    #[serde(rename = "BC")]
    Betweenness,
    #[serde(rename = "GC")]
    Gravity,
}

impl Measure {
    pub const ALL: [Measure; 5] = [
        Measure::Degree,
        Measure::Eigenvector,
        Measure::Closeness,
        Measure::Betweenness,
        Measure::Gravity,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            Measure::Degree => "DC",
            Measure::Eigenvector => "EC",
            Measure::Closeness => "CC",
            Measure::Betweenness => "BC",
            Measure::Gravity => "GC",
        }
    }
}

impl fmt::Display for Measure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for Measure {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Measure::ALL
            .into_iter()
            .find(|m| m.tag().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| invalid(format!("unknown centrality measure `{s}`")))
    }
}

/// Settings a [`CentralityVector`] was computed with.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "measure")]
pub enum MeasureParams {
    #[serde(rename = "DC")]
    Degree,
    #[serde(rename = "EC")]
    Eigenvector {
        tolerance: f64,
        max_iter: usize,
        iterations: usize,
        /// Converged dominant eigenvalue (Rayleigh quotient of the final iterate).
        eigenvalue: f64,
        /// More than one connected component: per-component mass depends on
        /// the spectral radii and small entries are expected.
        disconnected: bool,
    },
    #[serde(rename = "CC")]
    Closeness { convention: ClosenessConvention },
    #[serde(rename = "BC")]
    Betweenness { normalized: bool },
    #[serde(rename = "GC")]
    Gravity { radius: usize, exponent: i32 },
}

/// One score per node for a single measure.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CentralityVector<T = f64> {
    pub measure: Measure,
    pub scores: Vec<T>,
    pub params: MeasureParams,
}

impl<T: Scalar> CentralityVector<T> {
    pub fn len(&self) -> usize {
        self.scores.len()
    }

    pub fn is_empty(&self) -> bool {
        self.scores.is_empty()
    }

    pub fn to_f64(&self) -> Vec<f64> {
        self.scores.iter().map(|s| s.to_f64_lossy()).collect()
    }

    /// `node,measure,score` CSV with 12 significant digits per score.
    pub fn write_csv<W: Write>(&self, labels: Option<&NodeLabels>, mut out: W) -> Result<()> {
        writeln!(out, "node,measure,score")?;
        for (node, score) in self.scores.iter().enumerate() {
            let score = format_significant(score.to_f64_lossy(), 12);
            match labels {
                Some(l) => writeln!(out, "{},{},{score}", l.label(node), self.measure)?,
                None => writeln!(out, "{node},{},{score}", self.measure)?,
            }
        }
        Ok(())
    }
}

/// Fixed-point rendering of `value` with at least `digits` significant digits.
pub fn format_significant(value: f64, digits: usize) -> String {
    if value == 0.0 || !value.is_finite() {
        return format!("{:.*}", digits.saturating_sub(1), value);
    }
    let magnitude = value.abs().log10().floor() as i64;
    let decimals = (digits as i64 - 1 - magnitude).max(0) as usize;
    format!("{value:.decimals$}")
}

/// Knobs for every measure, with the defaults used throughout the crate.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct MeasureConfig {
    /// Never tighter than the scalar type's own default.
    pub ec_tolerance: f64,
    pub ec_max_iter: usize,
    pub cc_convention: ClosenessConvention,
    pub bc_normalized: bool,
    pub gc_radius: usize,
    pub gc_exponent: i32,
}

impl Default for MeasureConfig {
    fn default() -> Self {
        Self {
            ec_tolerance: 1e-8,
            ec_max_iter: 1000,
            cc_convention: ClosenessConvention::ComponentScaled,
            bc_normalized: true,
            gc_radius: 3,
            gc_exponent: 2,
        }
    }
}

impl MeasureConfig {
    pub fn compute<T: Scalar>(&self, measure: Measure, graph: &Graph) -> Result<CentralityVector<T>> {
        match measure {
            Measure::Degree => degree_centrality(graph),
            Measure::Eigenvector => {
                let tol = T::from_f64(self.ec_tolerance)
                    .ok_or_else(|| invalid("eigenvector tolerance not representable"))?;
                // f32 cannot resolve f64-sized tolerances
                eigenvector_centrality(graph, tol.max(T::DEFAULT_TOLERANCE), self.ec_max_iter)
            }
            Measure::Closeness => closeness_centrality(graph, self.cc_convention),
            Measure::Betweenness => betweenness_centrality(graph, self.bc_normalized),
            Measure::Gravity => gravitational_centrality(graph, self.gc_radius, self.gc_exponent),
        }
    }
}

pub(crate) fn require_nodes(graph: &Graph, min: usize, what: &str) -> Result<()> {
    if graph.node_count() < min {
        Err(invalid(format!(
            "{what} needs at least {min} nodes, graph has {}",
            graph.node_count()
        )))
    } else {
        Ok(())
    }
}
