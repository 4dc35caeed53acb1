//! Lexical sorting centrality.
//!
//! Every node becomes a "word" whose letters are its centrality values,
//! rounded to a fixed number of decimal places. Sorting the words in
//! descending lexicographic order ranks the nodes: the first measure decides,
//! later measures only break ties left by the earlier ones, and nodes whose
//! words are identical keep their original relative order.

use std::fmt;
use std::io::Write;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::centrality::{CentralityVector, Measure, MeasureConfig};
use crate::error::{invalid, Error, Result};
use crate::graph::{Graph, NodeLabels};
use crate::scalar::Scalar;

/// Largest supported number of decimal places.
pub const MAX_PRECISION: u32 = 15;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RoundingMode {
    /// Round half to even on the shortest decimal representation.
    #[default]
    HalfEven,
    /// Drop the digits beyond the precision (toward zero).
    Truncate,
}

impl FromStr for RoundingMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "half_even" | "half-even" | "round" => Ok(Self::HalfEven),
            "truncate" => Ok(Self::Truncate),
            other => Err(invalid(format!("unknown rounding mode `{other}`"))),
        }
    }
}

/// `value * 10^precision` as an exact integer after rounding in decimal.
///
/// Works on the shortest round-trip decimal string of `value`, so a score
/// printed as `0.76525` rounds as that decimal, not as its binary neighbour.
pub fn scaled_decimal<T: Scalar>(value: T, precision: u32, mode: RoundingMode) -> Result<i128> {
    if precision > MAX_PRECISION {
        return Err(invalid(format!("precision {precision} exceeds {MAX_PRECISION}")));
    }
    if !value.is_finite() {
        return Err(invalid(format!("cannot round non-finite value {value}")));
    }
    let text = value.to_string();
    let (negative, digits) = match text.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, text.as_str()),
    };
    let (int_part, frac_part) = digits.split_once('.').unwrap_or((digits, ""));
    let precision = precision as usize;
    if int_part.len() + precision > 37 {
        return Err(invalid(format!("value {value} too large to rank at precision {precision}")));
    }

    let mut scaled: i128 = 0;
    let kept = int_part
        .bytes()
        .chain(frac_part.bytes().chain(std::iter::repeat(b'0')).take(precision));
    for b in kept {
        scaled = scaled * 10 + i128::from(b - b'0');
    }

    let dropped = frac_part.as_bytes().get(precision..).unwrap_or(&[]);
    if mode == RoundingMode::HalfEven {
        if let Some((&first, rest)) = dropped.split_first() {
            let beyond_half = rest.iter().any(|&b| b != b'0');
            if first > b'5' || (first == b'5' && (beyond_half || scaled % 2 == 1)) {
                scaled += 1;
            }
        }
    }
    Ok(if negative { -scaled } else { scaled })
}

/// One row of the ranking matrix: a node and its rounded values, stored as
/// integers scaled by `10^precision`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RankingRow {
    pub node: usize,
    pub keys: Vec<i128>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RankingMatrix {
    pub rows: Vec<RankingRow>,
    pub measure_order: Vec<Measure>,
    pub precision: u32,
    pub rounding: RoundingMode,
}

impl RankingMatrix {
    pub fn node_count(&self) -> usize {
        self.rows.len()
    }

    /// Rounded value of row `row`, column `col`.
    pub fn value(&self, row: usize, col: usize) -> f64 {
        self.rows[row].keys[col] as f64 / 10f64.powi(self.precision as i32)
    }

    fn format_key(&self, key: i128) -> String {
        let p = self.precision as usize;
        let sign = if key < 0 { "-" } else { "" };
        let magnitude = key.unsigned_abs();
        if p == 0 {
            return format!("{sign}{magnitude}");
        }
        let scale = 10u128.pow(self.precision);
        format!("{sign}{}.{:0p$}", magnitude / scale, magnitude % scale)
    }

    /// Audit dump: `node,<measure>,...` with exactly `precision` decimals.
    pub fn write_csv<W: Write>(&self, labels: Option<&NodeLabels>, mut out: W) -> Result<()> {
        let header: Vec<&str> = self.measure_order.iter().map(|m| m.tag()).collect();
        writeln!(out, "node,{}", header.join(","))?;
        for row in &self.rows {
            let values: Vec<String> = row.keys.iter().map(|&k| self.format_key(k)).collect();
            match labels {
                Some(l) => writeln!(out, "{},{}", l.label(row.node), values.join(","))?,
                None => writeln!(out, "{},{}", row.node, values.join(","))?,
            }
        }
        Ok(())
    }
}

/// Tabulates the given vectors (columns, in order) with rounded values.
pub fn build_ranking_matrix<T: Scalar>(
    vectors: &[CentralityVector<T>],
    precision: u32,
    rounding: RoundingMode,
) -> Result<RankingMatrix> {
    let first = vectors
        .first()
        .ok_or_else(|| invalid("ranking matrix needs at least one centrality vector"))?;
    let n = first.len();
    if let Some(bad) = vectors.iter().find(|v| v.len() != n) {
        return Err(Error::LengthMismatch {
            expected: n,
            actual: bad.len(),
        });
    }
    if precision > MAX_PRECISION {
        return Err(invalid(format!("precision {precision} exceeds {MAX_PRECISION}")));
    }
    let rows = (0..n)
        .map(|node| {
            let keys = vectors
                .iter()
                .map(|v| scaled_decimal(v.scores[node], precision, rounding))
                .collect::<Result<Vec<_>>>()?;
            Ok(RankingRow { node, keys })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(RankingMatrix {
        rows,
        measure_order: vectors.iter().map(|v| v.measure).collect(),
        precision,
        rounding,
    })
}

/// Producer of a node ranking.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "String", try_from = "String")]
pub enum Ranker {
    Centrality(Measure),
    Lsc,
}

impl Ranker {
    /// DC, EC, CC, BC, GC, LSC.
    pub const ALL: [Ranker; 6] = [
        Ranker::Centrality(Measure::Degree),
        Ranker::Centrality(Measure::Eigenvector),
        Ranker::Centrality(Measure::Closeness),
        Ranker::Centrality(Measure::Betweenness),
        Ranker::Centrality(Measure::Gravity),
        Ranker::Lsc,
    ];
}

impl fmt::Display for Ranker {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Ranker::Centrality(m) => m.fmt(f),
            Ranker::Lsc => f.write_str("LSC"),
        }
    }
}

impl FromStr for Ranker {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s.trim().eq_ignore_ascii_case("lsc") {
            Ok(Ranker::Lsc)
        } else {
            s.parse().map(Ranker::Centrality)
        }
    }
}

impl From<Ranker> for String {
    fn from(r: Ranker) -> Self {
        r.to_string()
    }
}

impl TryFrom<String> for Ranker {
    type Error = Error;

    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

/// Node ids ordered from most to least influential.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NodeRanking {
    pub ordered_nodes: Vec<usize>,
    pub source: Ranker,
}

impl NodeRanking {
    /// Orders nodes by descending score, ties by ascending node id.
    pub fn from_scores<T: Scalar>(scores: &[T], source: Ranker) -> Self {
        let mut ordered_nodes: Vec<usize> = (0..scores.len()).collect();
        ordered_nodes.sort_by(|&a, &b| {
            scores[b]
                .partial_cmp(&scores[a])
                .unwrap_or(std::cmp::Ordering::Equal)
                .then(a.cmp(&b))
        });
        Self { ordered_nodes, source }
    }

    pub fn len(&self) -> usize {
        self.ordered_nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ordered_nodes.is_empty()
    }

    pub fn top(&self, k: usize) -> &[usize] {
        &self.ordered_nodes[..k.min(self.len())]
    }

    /// Position of every node in the ranking (0 = first).
    pub fn positions(&self) -> Vec<usize> {
        let mut pos = vec![0; self.len()];
        for (rank, &node) in self.ordered_nodes.iter().enumerate() {
            pos[node] = rank;
        }
        pos
    }

    /// Checks that the ranking is a permutation of `0..n`.
    pub fn validate(&self, n: usize) -> Result<()> {
        if self.len() != n {
            return Err(Error::LengthMismatch { expected: n, actual: self.len() });
        }
        let mut seen = vec![false; n];
        for &node in &self.ordered_nodes {
            if node >= n || std::mem::replace(&mut seen[node], true) {
                return Err(invalid("ranking is not a permutation of the node ids"));
            }
        }
        Ok(())
    }

    /// `rank,node` CSV, ranks starting at 1.
    pub fn write_csv<W: Write>(&self, labels: Option<&NodeLabels>, mut out: W) -> Result<()> {
        writeln!(out, "rank,node")?;
        for (rank, &node) in self.ordered_nodes.iter().enumerate() {
            match labels {
                Some(l) => writeln!(out, "{},{}", rank + 1, l.label(node))?,
                None => writeln!(out, "{},{node}", rank + 1)?,
            }
        }
        Ok(())
    }
}

/// Sorts rows by descending value tuple. Rows with identical tuples keep
/// their order in `matrix`.
pub fn lexical_sort(matrix: &RankingMatrix) -> NodeRanking {
    let mut rows: Vec<&RankingRow> = matrix.rows.iter().collect();
    // stable: equal tuples stay in input order
    rows.sort_by(|a, b| b.keys.cmp(&a.keys));
    NodeRanking {
        ordered_nodes: rows.into_iter().map(|r| r.node).collect(),
        source: Ranker::Lsc,
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct LscConfig {
    pub precision: u32,
    pub measure_order: Vec<Measure>,
    pub rounding: RoundingMode,
    pub measures: MeasureConfig,
}

impl Default for LscConfig {
    fn default() -> Self {
        Self {
            precision: 5,
            measure_order: vec![Measure::Degree, Measure::Eigenvector, Measure::Closeness],
            rounding: RoundingMode::HalfEven,
            measures: MeasureConfig::default(),
        }
    }
}

#[derive(Debug, Clone)]
pub struct LscOutput<T = f64> {
    pub ranking: NodeRanking,
    pub matrix: RankingMatrix,
    /// The computed columns, including the settings each was computed with.
    pub vectors: Vec<CentralityVector<T>>,
}

/// Lexical sorting centrality of `graph`.
pub fn lsc<T: Scalar>(graph: &Graph, config: &LscConfig) -> Result<LscOutput<T>> {
    if graph.node_count() < 2 {
        return Err(invalid("lexical sorting centrality needs at least 2 nodes"));
    }
    if config.measure_order.is_empty() {
        return Err(invalid("measure order must name at least one measure"));
    }
    let vectors = config
        .measure_order
        .iter()
        .map(|&m| config.measures.compute::<T>(m, graph))
        .collect::<Result<Vec<_>>>()?;
    let matrix = build_ranking_matrix(&vectors, config.precision, config.rounding)?;
    let ranking = lexical_sort(&matrix);
    Ok(LscOutput { ranking, matrix, vectors })
}
