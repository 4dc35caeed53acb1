use std::fs::{self, File};
use std::io::{BufWriter, Write};
use std::path::{Path, PathBuf};

use anyhow::{bail, Context, Result};
use lsc_core::centrality::{CentralityVector, Measure, MeasureParams};
use lsc_core::eval::{benchmark_runtime, evaluate_dataset};
use lsc_core::graph::{dataset_stats, Graph};
use lsc_core::lsc::{RankingMatrix, RoundingMode};
use lsc_core::sir::{score_all_nodes, spread_curve, write_curve_csv, write_scores_csv, SirParams, SirResult};
use lsc_core::{lsc, LscConfig, NodeRanking, Ranker, Scalar};
use serde::Serialize;

use crate::config::{RunConfig, ScalarKind};
use crate::source::Source;

struct Output {
    dir: PathBuf,
    written: Vec<PathBuf>,
}

impl Output {
    fn new(dir: &Path) -> Result<Self> {
        fs::create_dir_all(dir).with_context(|| format!("creating output directory {}", dir.display()))?;
        Ok(Self { dir: dir.to_path_buf(), written: Vec::new() })
    }

    fn write(&mut self, name: &str, body: impl FnOnce(&mut BufWriter<File>) -> Result<()>) -> Result<()> {
        let path = self.dir.join(name);
        let file = File::create(&path).with_context(|| format!("creating {}", path.display()))?;
        let mut out = BufWriter::new(file);
        body(&mut out)?;
        out.flush()?;
        self.written.push(path);
        Ok(())
    }

    fn json<S: Serialize>(&mut self, name: &str, value: &S) -> Result<()> {
        self.write(name, |out| {
            serde_json::to_writer_pretty(&mut *out, value)?;
            writeln!(out)?;
            Ok(())
        })
    }

    fn finish(self) {
        for path in self.written {
            println!("{}", path.display());
        }
    }
}

fn file_tag(ranker: Ranker) -> String {
    ranker.to_string().to_lowercase()
}

fn labels_file(out: &mut Output, source: &Source) -> Result<()> {
    if let Some(labels) = &source.labels {
        out.write("labels.csv", |w| Ok(labels.write_csv(w)?))?;
    }
    Ok(())
}

#[derive(Serialize)]
struct VectorJson<'a, T> {
    measure: Measure,
    params: &'a MeasureParams,
    scores: &'a [T],
}

#[derive(Serialize)]
struct LscJson<'a> {
    precision: u32,
    rounding: RoundingMode,
    ranking: &'a NodeRanking,
    matrix: &'a RankingMatrix,
}

#[derive(Serialize)]
struct CentralityJson<'a, T> {
    dataset: &'a str,
    node_count: usize,
    scalar: ScalarKind,
    vectors: Vec<VectorJson<'a, T>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    lsc: Option<LscJson<'a>>,
}

pub fn centrality(cfg: &RunConfig, source: &Source) -> Result<()> {
    match cfg.scalar {
        ScalarKind::F32 => centrality_with::<f32>(cfg, source),
        ScalarKind::F64 => centrality_with::<f64>(cfg, source),
    }
}

fn centrality_with<T: Scalar + Serialize>(cfg: &RunConfig, source: &Source) -> Result<()> {
    let g = &source.graph;
    let lsc_cfg = cfg.lsc_config();
    let labels = source.labels.as_ref();
    let mut out = Output::new(&cfg.output_dir)?;
    labels_file(&mut out, source)?;

    let mut vectors: Vec<CentralityVector<T>> = Vec::new();
    let mut lsc_out = None;
    for &ranker in &cfg.measures {
        match ranker {
            Ranker::Centrality(m) => {
                let v = lsc_cfg.measures.compute::<T>(m, g)?;
                out.write(&format!("{}.csv", file_tag(ranker)), |w| Ok(v.write_csv(labels, w)?))?;
                vectors.push(v);
            }
            Ranker::Lsc => {
                let result = lsc::<T>(g, &lsc_cfg)?;
                out.write("lsc.csv", |w| Ok(result.ranking.write_csv(labels, w)?))?;
                out.write("lsc_matrix.csv", |w| Ok(result.matrix.write_csv(labels, w)?))?;
                lsc_out = Some(result);
            }
        }
    }
    let doc = CentralityJson {
        dataset: &source.name,
        node_count: g.node_count(),
        scalar: cfg.scalar,
        vectors: vectors
            .iter()
            .map(|v| VectorJson { measure: v.measure, params: &v.params, scores: &v.scores })
            .collect(),
        lsc: lsc_out.as_ref().map(|r| LscJson {
            precision: lsc_cfg.precision,
            rounding: lsc_cfg.rounding,
            ranking: &r.ranking,
            matrix: &r.matrix,
        }),
    };
    out.json("centrality.json", &doc)?;
    out.finish();
    Ok(())
}

fn rank_nodes(g: &Graph, ranker: Ranker, config: &LscConfig) -> Result<NodeRanking> {
    Ok(match ranker {
        Ranker::Lsc => lsc::<f64>(g, config)?.ranking,
        Ranker::Centrality(m) => NodeRanking::from_scores(&config.measures.compute::<f64>(m, g)?.scores, ranker),
    })
}

#[derive(Serialize)]
struct CurveJson<'a> {
    dataset: &'a str,
    seeds_from: Option<Ranker>,
    seeds: &'a [usize],
    params: &'a SirParams,
    result: &'a SirResult,
}

pub fn sir(cfg: &RunConfig, source: &Source) -> Result<()> {
    let g = &source.graph;
    let params = cfg.sir_params(source.default_beta)?;
    let mut out = Output::new(&cfg.output_dir)?;
    labels_file(&mut out, source)?;

    if cfg.seeds_from.is_none() && cfg.seeds.is_empty() {
        let results = score_all_nodes(g, &params)?;
        out.write("sir_scores.csv", |w| Ok(write_scores_csv(&results, source.labels.as_ref(), w)?))?;
        out.finish();
        return Ok(());
    }
    if cfg.seeds_from.is_some() && !cfg.seeds.is_empty() {
        bail!("give either seeds or seeds_from, not both");
    }
    if params.max_steps.is_none() {
        bail!("spread curves need a step count (--steps)");
    }
    let seeds = match cfg.seeds_from {
        Some(ranker) => {
            if cfg.top > g.node_count() {
                bail!("top {} exceeds the {} nodes of the graph", cfg.top, g.node_count());
            }
            rank_nodes(g, ranker, &cfg.lsc_config())?.top(cfg.top).to_vec()
        }
        None => cfg.seeds.clone(),
    };
    let result = spread_curve(g, &seeds, &params)?;
    let curve = result.curve.as_deref().unwrap_or_default();
    out.write("sir_curve.csv", |w| Ok(write_curve_csv(curve, w)?))?;
    out.json(
        "sir_curve.json",
        &CurveJson { dataset: &source.name, seeds_from: cfg.seeds_from, seeds: &seeds, params: &params, result: &result },
    )?;
    out.finish();
    Ok(())
}

pub fn evaluate(cfg: &RunConfig, source: &Source) -> Result<()> {
    let params = cfg.sir_params(source.default_beta)?;
    let eval = match cfg.scalar {
        ScalarKind::F32 => evaluate_dataset::<f32>(&source.graph, &source.name, &params, cfg.x_percent, &cfg.eval_config())?,
        ScalarKind::F64 => evaluate_dataset::<f64>(&source.graph, &source.name, &params, cfg.x_percent, &cfg.eval_config())?,
    };
    let mut out = Output::new(&cfg.output_dir)?;
    labels_file(&mut out, source)?;
    out.json("report.json", &eval.report)?;
    out.write("table.csv", |w| Ok(eval.report.write_csv(w)?))?;
    out.write("sir_scores.csv", |w| Ok(write_scores_csv(&eval.sir, source.labels.as_ref(), w)?))?;
    for series in &eval.series {
        out.write(&format!("series_{}.csv", file_tag(series.source)), |w| Ok(series.write_csv(w)?))?;
    }
    out.finish();
    Ok(())
}

pub fn bench(cfg: &RunConfig, source: &Source) -> Result<()> {
    let report = benchmark_runtime(&source.graph, &source.name, &cfg.bench_rankers, cfg.bench_reps, &cfg.lsc_config())?;
    let mut out = Output::new(&cfg.output_dir)?;
    out.write("bench.csv", |w| Ok(report.write_csv(w)?))?;
    out.json("bench.json", &report)?;
    out.finish();
    Ok(())
}

pub fn stats(source: &Source) -> Result<()> {
    let s = dataset_stats(&source.graph)?;
    println!("dataset,nodes,edges,mean_degree,max_degree,density");
    println!(
        "{},{},{},{:.4},{},{:.7}",
        source.name, s.node_count, s.edge_count, s.mean_degree, s.max_degree, s.density
    );
    Ok(())
}
