//! Lexical sorting centrality (LSC) and the tooling to evaluate it.
//!
//! LSC ranks the nodes of a graph by sorting their tuples of rounded
//! centrality values (degree, eigenvector, closeness by default) in
//! descending lexicographic order. The crate also provides the competitor
//! measures, a discrete-time SIR spreading simulator used as ground truth,
//! and rank-correlation / overlap metrics for comparing the two.

pub mod centrality;
pub mod error;
pub mod eval;
pub mod graph;
pub mod lsc;
pub mod scalar;
pub mod sir;

pub use error::{Error, Result};
pub use graph::{DatasetStats, Graph};
pub use scalar::Scalar;
pub use lsc::{lsc, LscConfig, NodeRanking, Ranker};

pub type CentralityVectorF64 = centrality::CentralityVector<f64>;
pub type CentralityVectorF32 = centrality::CentralityVector<f32>;
pub type LscOutputF64 = lsc::LscOutput<f64>;
pub type LscOutputF32 = lsc::LscOutput<f32>;
