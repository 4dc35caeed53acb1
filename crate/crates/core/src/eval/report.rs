//! End-to-end comparison of every ranking method against SIR ground truth.

use std::collections::BTreeMap;
use std::io::Write;

use serde::{Deserialize, Serialize};

use super::kendall::{kendall_tau_variant, TauVariant};
use super::overlap::{rank_vs_score_series, top_x_overlap, top_k_size, RankScoreSeries};
use crate::centrality::{format_significant, CentralityVector, Measure};
use crate::error::Result;
use crate::graph::Graph;
use crate::lsc::{build_ranking_matrix, lexical_sort, LscConfig, NodeRanking, Ranker};
use crate::scalar::Scalar;
use crate::sir::{mean_scores, score_all_nodes, SirParams, SirResult};

#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
#[serde(default)]
pub struct EvalConfig {
    pub lsc: LscConfig,
    pub tau: TauVariant,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MethodEval {
    pub measure: Ranker,
    pub tau: f64,
    pub top_x_overlap: usize,
    pub top_x_k: usize,
    pub adjacent_inversions: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EvalReport {
    pub dataset: String,
    pub node_count: usize,
    pub edge_count: usize,
    pub beta: f64,
    pub gamma: f64,
    pub replications: usize,
    pub rng_seed: u64,
    pub x_percent: f64,
    pub tau_variant: TauVariant,
    pub measures: Vec<MethodEval>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub runtime_seconds: Option<BTreeMap<Ranker, f64>>,
}

impl EvalReport {
    pub fn method(&self, ranker: Ranker) -> Option<&MethodEval> {
        self.measures.iter().find(|m| m.measure == ranker)
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(self)?)
    }

    /// Wide layout: one row per metric, one column per method.
    pub fn write_csv<W: Write>(&self, mut out: W) -> Result<()> {
        let names: Vec<String> = self.measures.iter().map(|m| m.measure.to_string()).collect();
        writeln!(out, "dataset,metric,{}", names.join(","))?;
        let row = |values: Vec<String>| values.join(",");
        let k = self.measures.first().map_or(0, |m| m.top_x_k);
        writeln!(
            out,
            "{},tau,{}",
            self.dataset,
            row(self.measures.iter().map(|m| format_significant(m.tau, 10)).collect())
        )?;
        writeln!(
            out,
            "{},top_{}pct_overlap_k{},{}",
            self.dataset,
            self.x_percent,
            k,
            row(self.measures.iter().map(|m| m.top_x_overlap.to_string()).collect())
        )?;
        writeln!(
            out,
            "{},adjacent_inversions,{}",
            self.dataset,
            row(self.measures.iter().map(|m| m.adjacent_inversions.to_string()).collect())
        )?;
        Ok(())
    }
}

/// Everything an evaluation produced, for callers that emit plot data.
#[derive(Debug, Clone)]
pub struct Evaluation {
    pub report: EvalReport,
    pub rankings: Vec<NodeRanking>,
    pub series: Vec<RankScoreSeries>,
    pub sir: Vec<SirResult>,
}

/// Ranks nodes with DC, EC, CC, BC, GC and LSC and compares each ranking
/// with per-node SIR spreading scores.
///
/// Tau is computed between each measure's raw values and the mean SIR
/// scores; LSC contributes the negated rank position of each node.
pub fn evaluate_dataset<T: Scalar>(
    graph: &Graph,
    dataset: &str,
    params: &SirParams,
    x_percent: f64,
    config: &EvalConfig,
) -> Result<Evaluation> {
    params.validate()?;
    top_k_size(graph.node_count(), x_percent)?;

    let mut vectors: BTreeMap<Measure, CentralityVector<T>> = BTreeMap::new();
    for measure in Measure::ALL.into_iter().chain(config.lsc.measure_order.iter().copied()) {
        if !vectors.contains_key(&measure) {
            vectors.insert(measure, config.lsc.measures.compute::<T>(measure, graph)?);
        }
    }
    let columns: Vec<CentralityVector<T>> = config
        .lsc
        .measure_order
        .iter()
        .map(|m| vectors[m].clone())
        .collect();
    let matrix = build_ranking_matrix(&columns, config.lsc.precision, config.lsc.rounding)?;
    let lsc_ranking = lexical_sort(&matrix);

    let sir = score_all_nodes(graph, params)?;
    let truth = mean_scores(&sir);

    let mut rankings = Vec::new();
    let mut series = Vec::new();
    let mut measures = Vec::new();
    for ranker in Ranker::ALL {
        let (ranking, values) = match ranker {
            Ranker::Centrality(m) => {
                let values = vectors[&m].to_f64();
                (NodeRanking::from_scores(&values, ranker), values)
            }
            Ranker::Lsc => {
                let values = lsc_ranking.positions().into_iter().map(|p| -(p as f64)).collect();
                (lsc_ranking.clone(), values)
            }
        };
        let tau = kendall_tau_variant(&values, &truth, config.tau)?;
        let overlap = top_x_overlap(&ranking, &truth, x_percent)?;
        let s = rank_vs_score_series(&ranking, &truth)?;
        measures.push(MethodEval {
            measure: ranker,
            tau,
            top_x_overlap: overlap.overlap,
            top_x_k: overlap.k,
            adjacent_inversions: s.adjacent_inversions,
        });
        rankings.push(ranking);
        series.push(s);
    }

    Ok(Evaluation {
        report: EvalReport {
            dataset: dataset.to_string(),
            node_count: graph.node_count(),
            edge_count: graph.edge_count(),
            beta: params.beta,
            gamma: params.gamma,
            replications: params.replications,
            rng_seed: params.rng_seed,
            x_percent,
            tau_variant: config.tau,
            measures,
            runtime_seconds: None,
        },
        rankings,
        series,
        sir,
    })
}
