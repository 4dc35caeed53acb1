use std::io::Write;

use serde::{Deserialize, Serialize};

use crate::centrality::format_significant;
use crate::error::{invalid, Error, Result};
use crate::lsc::{NodeRanking, Ranker};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Overlap {
    pub overlap: usize,
    pub k: usize,
}

/// `floor(n * x_percent / 100)`.
pub fn top_k_size(n: usize, x_percent: f64) -> Result<usize> {
    if !(x_percent > 0.0 && x_percent <= 100.0) {
        return Err(invalid(format!("x_percent must lie in (0, 100], got {x_percent}")));
    }
    // the epsilon keeps e.g. 29.999999999999996 from flooring to 29
    let k = (n as f64 * x_percent / 100.0 + 1e-9).floor() as usize;
    if k == 0 {
        return Err(invalid(format!("{x_percent}% of {n} nodes selects no node")));
    }
    Ok(k.min(n))
}

fn check_sizes(ranking: &NodeRanking, scores: &[f64]) -> Result<()> {
    if ranking.len() != scores.len() {
        return Err(Error::LengthMismatch {
            expected: scores.len(),
            actual: ranking.len(),
        });
    }
    ranking.validate(scores.len())
}

/// How many of the ranking's top-k nodes are also among the k highest
/// scores (ties by ascending node id).
pub fn top_x_overlap(ranking: &NodeRanking, scores: &[f64], x_percent: f64) -> Result<Overlap> {
    check_sizes(ranking, scores)?;
    let k = top_k_size(scores.len(), x_percent)?;
    let truth = NodeRanking::from_scores(scores, ranking.source);
    let mut in_truth = vec![false; scores.len()];
    for &v in truth.top(k) {
        in_truth[v] = true;
    }
    let overlap = ranking.top(k).iter().filter(|&&v| in_truth[v]).count();
    Ok(Overlap { overlap, k })
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RankScorePoint {
    pub index: usize,
    pub node: usize,
    pub score: f64,
}

/// Scores listed in ranking order, for rank-versus-score plots.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RankScoreSeries {
    pub source: Ranker,
    pub points: Vec<RankScorePoint>,
    /// Positions where the score goes up from one rank to the next.
    pub adjacent_inversions: usize,
}

impl RankScoreSeries {
    /// `index,node,score` CSV.
    pub fn write_csv<W: Write>(&self, mut out: W) -> Result<()> {
        writeln!(out, "index,node,score")?;
        for p in &self.points {
            writeln!(out, "{},{},{}", p.index, p.node, format_significant(p.score, 12))?;
        }
        Ok(())
    }
}

pub fn rank_vs_score_series(ranking: &NodeRanking, scores: &[f64]) -> Result<RankScoreSeries> {
    check_sizes(ranking, scores)?;
    let points: Vec<RankScorePoint> = ranking
        .ordered_nodes
        .iter()
        .enumerate()
        .map(|(index, &node)| RankScorePoint {
            index,
            node,
            score: scores[node],
        })
        .collect();
    let adjacent_inversions = points.windows(2).filter(|w| w[1].score > w[0].score).count();
    Ok(RankScoreSeries {
        source: ranking.source,
        points,
        adjacent_inversions,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::centrality::Measure;
    use proptest::prelude::*;

    const DC: Ranker = Ranker::Centrality(Measure::Degree);

    #[test]
    fn top_k_sizes() {
        assert_eq!(top_k_size(1000, 5.0).unwrap(), 50);
        assert_eq!(top_k_size(34, 5.0).unwrap(), 1);
        assert_eq!(top_k_size(100, 29.0).unwrap(), 29);
        assert_eq!(top_k_size(5, 100.0).unwrap(), 5);
        assert!(top_k_size(10, 5.0).is_err());
        assert!(top_k_size(10, 0.0).is_err());
        assert!(top_k_size(10, 101.0).is_err());
    }

    #[test]
    fn exact_order_overlaps_fully() {
        let scores = [3.0, 9.0, 1.0, 7.0, 5.0];
        let ranking = NodeRanking::from_scores(&scores, DC);
        assert_eq!(top_x_overlap(&ranking, &scores, 40.0).unwrap(), Overlap { overlap: 2, k: 2 });
        let reversed = NodeRanking { ordered_nodes: vec![2, 0, 4, 3, 1], source: DC };
        assert_eq!(top_x_overlap(&reversed, &scores, 40.0).unwrap().overlap, 0);
    }

    #[test]
    fn score_ties_go_to_lower_ids() {
        let scores = [2.0, 2.0, 2.0, 1.0];
        let ranking = NodeRanking { ordered_nodes: vec![2, 1, 0, 3], source: DC };
        assert_eq!(top_x_overlap(&ranking, &scores, 25.0).unwrap().overlap, 0);
        assert_eq!(top_x_overlap(&ranking, &scores, 50.0).unwrap().overlap, 1);
    }

    #[test]
    fn size_mismatch_is_an_error() {
        let ranking = NodeRanking { ordered_nodes: vec![0, 1], source: DC };
        assert!(top_x_overlap(&ranking, &[1.0, 2.0, 3.0], 50.0).is_err());
        assert!(rank_vs_score_series(&ranking, &[1.0]).is_err());
    }

    #[test]
    fn series_monotonicity() {
        let scores = [3.0, 9.0, 1.0, 7.0];
        let exact = NodeRanking::from_scores(&scores, DC);
        let s = rank_vs_score_series(&exact, &scores).unwrap();
        assert_eq!(s.adjacent_inversions, 0);
        assert_eq!(s.points.iter().map(|p| p.score).collect::<Vec<_>>(), vec![9.0, 7.0, 3.0, 1.0]);
        let reversed = NodeRanking { ordered_nodes: vec![2, 0, 3, 1], source: DC };
        let s = rank_vs_score_series(&reversed, &scores).unwrap();
        assert!(s.points.windows(2).all(|w| w[0].score <= w[1].score));
        assert_eq!(s.adjacent_inversions, 3);
    }

    proptest! {
        #[test]
        fn overlap_ignores_score_scale(
            scores in proptest::collection::vec(0.0f64..100.0, 20..60),
            perm_seed: u64,
            factor in 0.01f64..100.0,
            x in 1.0f64..100.0,
        ) {
            let n = scores.len();
            let mut order: Vec<usize> = (0..n).collect();
            order.sort_by_key(|&v| (v as u64).wrapping_mul(perm_seed | 1).rotate_left(17));
            let ranking = NodeRanking { ordered_nodes: order, source: DC };
            let scaled: Vec<f64> = scores.iter().map(|s| s * factor).collect();
            prop_assume!(top_k_size(n, x).is_ok());
            prop_assert_eq!(
                top_x_overlap(&ranking, &scores, x).unwrap(),
                top_x_overlap(&ranking, &scaled, x).unwrap()
            );
            prop_assert_eq!(top_x_overlap(&ranking, &scores, 100.0).unwrap().overlap, n);
        }

        #[test]
        fn inversions_match_pairwise_scan(
            scores in proptest::collection::vec(0u8..20, 100),
            perm_seed: u64,
        ) {
            let scores: Vec<f64> = scores.into_iter().map(f64::from).collect();
            let mut order: Vec<usize> = (0..100).collect();
            order.sort_by_key(|&v| (v as u64 ^ perm_seed).wrapping_mul(0x9E37_79B9_7F4A_7C15));
            let ranking = NodeRanking { ordered_nodes: order.clone(), source: DC };
            let series = rank_vs_score_series(&ranking, &scores).unwrap();
            let mut oracle = 0;
            for i in 0..99 {
                if scores[order[i + 1]] > scores[order[i]] {
                    oracle += 1;
                }
            }
            prop_assert_eq!(series.adjacent_inversions, oracle);
        }
    }
}
