//! Run configuration: defaults, TOML files and command-line overrides.

use std::path::{Path, PathBuf};

use anyhow::{bail, Context, Result};
use clap::{Args, ValueEnum};
use lsc_core::centrality::{ClosenessConvention, Measure, MeasureConfig};
use lsc_core::eval::{EvalConfig, TauVariant};
use lsc_core::lsc::{RoundingMode, MAX_PRECISION};
use lsc_core::sir::SirParams;
use lsc_core::{LscConfig, Ranker};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize, ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum ScalarKind {
    F32,
    #[default]
    F64,
}

/// Everything a run depends on. Serialized as TOML by `--dump-config`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct RunConfig {
    pub graph: Option<PathBuf>,
    pub generate: Option<String>,
    pub dataset: Option<String>,
    pub data_dir: PathBuf,
    pub relabel: bool,
    pub output_dir: PathBuf,
    pub threads: Option<usize>,
    pub scalar: ScalarKind,

    pub beta: Option<f64>,
    pub gamma: f64,
    pub replications: usize,
    pub rng_seed: u64,
    pub steps: Option<usize>,

    pub precision: u32,
    pub measure_order: Vec<Measure>,
    pub rounding: RoundingMode,
    pub cc_convention: ClosenessConvention,
    pub gc_radius: usize,
    pub gc_exponent: i32,
    pub ec_tolerance: f64,
    pub ec_max_iter: usize,
    pub bc_normalized: bool,

    pub x_percent: f64,
    pub tau: TauVariant,

    pub measures: Vec<Ranker>,
    pub seeds_from: Option<Ranker>,
    pub seeds: Vec<usize>,
    pub top: usize,
    pub bench_rankers: Vec<Ranker>,
    pub bench_reps: usize,
}

impl Default for RunConfig {
    fn default() -> Self {
        let lsc = LscConfig::default();
        let m = MeasureConfig::default();
        Self {
            graph: None,
            generate: None,
            dataset: None,
            data_dir: PathBuf::from("data"),
            relabel: false,
            output_dir: PathBuf::from("out"),
            threads: None,
            scalar: ScalarKind::F64,
            beta: None,
            gamma: 1.0,
            replications: 1000,
            rng_seed: 42,
            steps: None,
            precision: lsc.precision,
            measure_order: lsc.measure_order,
            rounding: lsc.rounding,
            cc_convention: m.cc_convention,
            gc_radius: m.gc_radius,
            gc_exponent: m.gc_exponent,
            ec_tolerance: m.ec_tolerance,
            ec_max_iter: m.ec_max_iter,
            bc_normalized: m.bc_normalized,
            x_percent: 5.0,
            tau: TauVariant::TauA,
            measures: Ranker::ALL.to_vec(),
            seeds_from: None,
            seeds: Vec::new(),
            top: 10,
            bench_rankers: vec![Ranker::Lsc, Ranker::Centrality(Measure::Gravity)],
            bench_reps: 10,
        }
    }
}

fn parse_core<T>(s: &str) -> Result<T, String>
where
    T: std::str::FromStr<Err = lsc_core::Error>,
{
    s.parse().map_err(|e: lsc_core::Error| e.to_string())
}

/// Flags shared by every run command. Unset flags leave the config alone.
#[derive(Debug, Clone, Default, Args)]
pub struct RunArgs {
    /// Read settings from a TOML file; flags given alongside override it.
    #[arg(long, value_name = "FILE")]
    pub config: Option<PathBuf>,
    /// Write the effective settings to FILE as TOML before running.
    #[arg(long, value_name = "FILE")]
    pub dump_config: Option<PathBuf>,

    /// Edge list file: two node ids per line, `#` or `%` comments.
    #[arg(long, value_name = "PATH", group = "source")]
    pub graph: Option<PathBuf>,
    /// Generated graph, `ba:N:M:SEED`.
    #[arg(long, value_name = "SPEC", group = "source")]
    pub generate: Option<String>,
    /// Registry dataset name (see `lsc fetch --list`).
    #[arg(long, value_name = "NAME", group = "source")]
    pub dataset: Option<String>,
    #[arg(long, value_name = "DIR")]
    pub data_dir: Option<PathBuf>,
    /// Renumber node labels 0.. in order of first appearance.
    #[arg(long, num_args = 0..=1, default_missing_value = "true", value_name = "BOOL")]
    pub relabel: Option<bool>,
    #[arg(short, long, value_name = "DIR")]
    pub output_dir: Option<PathBuf>,
    #[arg(long, value_enum)]
    pub scalar: Option<ScalarKind>,

    #[arg(long)]
    pub beta: Option<f64>,
    #[arg(long)]
    pub gamma: Option<f64>,
    #[arg(long = "reps", alias = "replications")]
    pub replications: Option<usize>,
    #[arg(long = "seed", alias = "rng-seed")]
    pub rng_seed: Option<u64>,
    /// Step cap for SIR runs (required for spread curves).
    #[arg(long)]
    pub steps: Option<usize>,

    #[arg(long)]
    pub precision: Option<u32>,
    /// Comma-separated LSC column order, e.g. `dc,ec,cc`.
    #[arg(long, value_delimiter = ',', value_parser = parse_core::<Measure>)]
    pub measure_order: Option<Vec<Measure>>,
    /// `half_even` or `truncate`.
    #[arg(long, value_parser = parse_core::<RoundingMode>)]
    pub rounding: Option<RoundingMode>,
    /// `component_scaled` or `inverse_sum`.
    #[arg(long, value_parser = parse_core::<ClosenessConvention>)]
    pub cc_convention: Option<ClosenessConvention>,
    #[arg(long)]
    pub gc_radius: Option<usize>,
    #[arg(long)]
    pub gc_exponent: Option<i32>,
    #[arg(long)]
    pub ec_tolerance: Option<f64>,
    #[arg(long)]
    pub ec_max_iter: Option<usize>,
    #[arg(long, value_name = "BOOL")]
    pub bc_normalized: Option<bool>,

    #[arg(long)]
    pub x_percent: Option<f64>,
    /// `tau_a` or `tau_b`.
    #[arg(long, value_parser = parse_core::<TauVariant>)]
    pub tau: Option<TauVariant>,

    /// Comma-separated methods to output: dc, ec, cc, bc, gc, lsc.
    #[arg(long, value_delimiter = ',', value_parser = parse_core::<Ranker>)]
    pub measures: Option<Vec<Ranker>>,
    /// Seed a spread curve with the top nodes of this method.
    #[arg(long, value_parser = parse_core::<Ranker>)]
    pub seeds_from: Option<Ranker>,
    /// Explicit comma-separated seed nodes for a spread curve.
    #[arg(long, value_delimiter = ',')]
    pub seeds: Option<Vec<usize>>,
    #[arg(long)]
    pub top: Option<usize>,
    #[arg(long, value_delimiter = ',', value_parser = parse_core::<Ranker>)]
    pub bench_rankers: Option<Vec<Ranker>>,
    #[arg(long)]
    pub bench_reps: Option<usize>,
}

macro_rules! overlay {
    ($cfg:ident, $args:ident; $($field:ident),* $(,)?) => {
        $(if let Some(v) = $args.$field.clone() { $cfg.$field = v; })*
    };
}

impl RunConfig {
    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).with_context(|| format!("reading config {}", path.display()))?;
        toml::from_str(&text).with_context(|| format!("parsing config {}", path.display()))
    }

    pub fn to_toml(&self) -> Result<String> {
        toml::to_string(self).context("serializing config")
    }

    /// File settings (if any), then flags.
    pub fn resolve(args: &RunArgs, threads: Option<usize>) -> Result<Self> {
        let mut cfg = match &args.config {
            Some(path) => Self::load(path)?,
            None => Self::default(),
        };
        if args.graph.is_some() || args.generate.is_some() || args.dataset.is_some() {
            cfg.graph = args.graph.clone();
            cfg.generate = args.generate.clone();
            cfg.dataset = args.dataset.clone();
        }
        if args.beta.is_some() {
            cfg.beta = args.beta;
        }
        if args.steps.is_some() {
            cfg.steps = args.steps;
        }
        if args.seeds_from.is_some() {
            cfg.seeds_from = args.seeds_from;
        }
        if threads.is_some() {
            cfg.threads = threads;
        }
        overlay!(cfg, args;
            data_dir, relabel, output_dir, scalar, gamma, replications, rng_seed,
            precision, measure_order, rounding, cc_convention, gc_radius, gc_exponent,
            ec_tolerance, ec_max_iter, bc_normalized, x_percent, tau, measures, seeds,
            top, bench_rankers, bench_reps,
        );
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn validate(&self) -> Result<()> {
        let sources = [self.graph.is_some(), self.generate.is_some(), self.dataset.is_some()];
        match sources.iter().filter(|&&s| s).count() {
            0 => bail!("no graph given: use --graph, --generate or --dataset"),
            1 => {}
            _ => bail!("only one of graph, generate and dataset may be set"),
        }
        if let Some(spec) = &self.generate {
            crate::source::parse_generator(spec)?;
        }
        SirParams::new(self.beta.unwrap_or(0.1), self.gamma, self.replications, self.rng_seed)?;
        if self.precision > MAX_PRECISION {
            bail!("precision must be at most {MAX_PRECISION}, got {}", self.precision);
        }
        if self.measure_order.is_empty() {
            bail!("measure order must name at least one measure");
        }
        if self.gc_radius == 0 {
            bail!("gravity radius must be at least 1");
        }
        if !(self.ec_tolerance > 0.0 && self.ec_tolerance.is_finite()) || self.ec_max_iter == 0 {
            bail!("eigenvector tolerance must be positive and max iterations nonzero");
        }
        if !(self.x_percent > 0.0 && self.x_percent <= 100.0) {
            bail!("x_percent must lie in (0, 100], got {}", self.x_percent);
        }
        if self.measures.is_empty() || self.bench_rankers.is_empty() {
            bail!("method lists must not be empty");
        }
        if self.top == 0 || self.bench_reps == 0 || self.threads == Some(0) {
            bail!("top, bench_reps and threads must be positive");
        }
        if self.rng_seed > i64::MAX as u64 {
            bail!("rng seed must fit in a signed 64-bit integer");
        }
        Ok(())
    }

    pub fn lsc_config(&self) -> LscConfig {
        LscConfig {
            precision: self.precision,
            measure_order: self.measure_order.clone(),
            rounding: self.rounding,
            measures: MeasureConfig {
                ec_tolerance: self.ec_tolerance,
                ec_max_iter: self.ec_max_iter,
                cc_convention: self.cc_convention,
                bc_normalized: self.bc_normalized,
                gc_radius: self.gc_radius,
                gc_exponent: self.gc_exponent,
            },
        }
    }

    pub fn eval_config(&self) -> EvalConfig {
        EvalConfig { lsc: self.lsc_config(), tau: self.tau }
    }

    /// SIR settings; `default_beta` applies when no beta was configured.
    pub fn sir_params(&self, default_beta: f64) -> Result<SirParams> {
        let mut params = SirParams::new(
            self.beta.unwrap_or(default_beta),
            self.gamma,
            self.replications,
            self.rng_seed,
        )?;
        params.max_steps = self.steps;
        Ok(params)
    }
}
