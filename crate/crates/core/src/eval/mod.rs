//! Comparing rankings with simulated spreading.

mod benchmark;
mod kendall;
mod overlap;
mod report;

pub use benchmark::{benchmark_runtime, BenchmarkReport, Environment, Timing};
pub use kendall::{
    kendall_tau, kendall_tau_naive, kendall_tau_variant, pair_counts, pair_counts_naive, PairCounts, TauVariant,
};
pub use overlap::{rank_vs_score_series, top_k_size, top_x_overlap, Overlap, RankScorePoint, RankScoreSeries};
pub use report::{evaluate_dataset, EvalConfig, EvalReport, Evaluation, MethodEval};
