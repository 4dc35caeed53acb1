//! Wall-clock comparison of ranking methods.

use std::io::Write;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::centrality::format_significant;
use crate::error::{invalid, Result};
use crate::graph::Graph;
use crate::lsc::{lsc, LscConfig, Ranker};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Timing {
    pub ranker: Ranker,
    pub mean_seconds: f64,
    pub min_seconds: f64,
    pub max_seconds: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Environment {
    pub os: String,
    pub arch: String,
    pub available_cpus: usize,
    pub worker_threads: usize,
    pub debug_build: bool,
}

impl Environment {
    fn capture(worker_threads: usize) -> Self {
        Self {
            os: std::env::consts::OS.to_string(),
            arch: std::env::consts::ARCH.to_string(),
            available_cpus: std::thread::available_parallelism().map_or(1, |n| n.get()),
            worker_threads,
            debug_build: cfg!(debug_assertions),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BenchmarkReport {
    pub dataset: String,
    pub node_count: usize,
    pub edge_count: usize,
    pub repetitions: usize,
    pub timings: Vec<Timing>,
    pub environment: Environment,
}

impl BenchmarkReport {
    pub fn mean_seconds(&self, ranker: Ranker) -> Option<f64> {
        self.timings.iter().find(|t| t.ranker == ranker).map(|t| t.mean_seconds)
    }

    /// One row per method, one column for the dataset.
    pub fn write_csv<W: Write>(&self, mut out: W) -> Result<()> {
        writeln!(out, "measure,{}", self.dataset)?;
        for t in &self.timings {
            writeln!(out, "{},{}", t.ranker, format_significant(t.mean_seconds, 6))?;
        }
        Ok(())
    }
}

fn run_once(graph: &Graph, ranker: Ranker, config: &LscConfig) -> Result<()> {
    match ranker {
        Ranker::Lsc => {
            std::hint::black_box(lsc::<f64>(graph, config)?);
        }
        Ranker::Centrality(m) => {
            std::hint::black_box(config.measures.compute::<f64>(m, graph)?);
        }
    }
    Ok(())
}

/// Mean wall-clock time per method over `repetitions` timed runs.
///
/// Methods run one after another on a single worker thread, each preceded by
/// one untimed warm-up run. The LSC timing includes computing its measures.
pub fn benchmark_runtime(
    graph: &Graph,
    dataset: &str,
    rankers: &[Ranker],
    repetitions: usize,
    config: &LscConfig,
) -> Result<BenchmarkReport> {
    if repetitions == 0 {
        return Err(invalid("benchmark needs at least one repetition"));
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(1)
        .build()
        .map_err(|e| invalid(format!("cannot start benchmark worker: {e}")))?;

    let timings = pool.install(|| {
        rankers
            .iter()
            .map(|&ranker| {
                run_once(graph, ranker, config)?;
                let mut samples = Vec::with_capacity(repetitions);
                for _ in 0..repetitions {
                    let start = Instant::now();
                    run_once(graph, ranker, config)?;
                    samples.push(start.elapsed().as_secs_f64());
                }
                Ok(Timing {
                    ranker,
                    mean_seconds: samples.iter().sum::<f64>() / repetitions as f64,
                    min_seconds: samples.iter().copied().fold(f64::INFINITY, f64::min),
                    max_seconds: samples.iter().copied().fold(0.0, f64::max),
                })
            })
            .collect::<Result<Vec<_>>>()
    })?;

    Ok(BenchmarkReport {
        dataset: dataset.to_string(),
        node_count: graph.node_count(),
        edge_count: graph.edge_count(),
        repetitions,
        timings,
        environment: Environment::capture(1),
    })
}
