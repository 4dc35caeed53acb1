//! Turning a run configuration into a graph.

use std::fs::File;
use std::io::BufReader;
use std::path::PathBuf;

use anyhow::{bail, Context, Result};
use lsc_core::graph::{generate_barabasi_albert, read_edge_list, Graph, LoadedGraph, NodeLabels};

use crate::config::RunConfig;
use crate::registry::Registry;

/// Default infection rate for graphs the registry does not know.
pub const FALLBACK_BETA: f64 = 0.1;

pub struct Source {
    pub name: String,
    pub graph: Graph,
    pub labels: Option<NodeLabels>,
    pub default_beta: f64,
}

/// `ba:N:M:SEED` into `(n, m, seed)`.
pub fn parse_generator(spec: &str) -> Result<(usize, usize, u64)> {
    let parts: Vec<&str> = spec.split(':').collect();
    match parts.as_slice() {
        ["ba", n, m, seed] => Ok((
            n.parse().with_context(|| format!("bad node count in `{spec}`"))?,
            m.parse().with_context(|| format!("bad attachment count in `{spec}`"))?,
            seed.parse().with_context(|| format!("bad seed in `{spec}`"))?,
        )),
        _ => bail!("generator must look like ba:N:M:SEED, got `{spec}`"),
    }
}

fn generate(spec: &str) -> Result<Graph> {
    let (n, m, seed) = parse_generator(spec)?;
    Ok(generate_barabasi_albert(n, m, seed)?)
}

fn read_file(path: &PathBuf, relabel: bool) -> Result<LoadedGraph> {
    let file = File::open(path).with_context(|| format!("opening graph {}", path.display()))?;
    read_edge_list(BufReader::new(file), relabel).with_context(|| format!("reading graph {}", path.display()))
}

pub fn fetched_path(config: &RunConfig, name: &str) -> PathBuf {
    config.data_dir.join(format!("{name}.txt"))
}

pub fn load(config: &RunConfig) -> Result<Source> {
    if let Some(path) = &config.graph {
        let loaded = read_file(path, config.relabel)?;
        report_dropped(&loaded);
        let name = path.file_stem().map_or("graph".into(), |s| s.to_string_lossy().into_owned());
        return Ok(Source { name, graph: loaded.graph, labels: loaded.labels, default_beta: FALLBACK_BETA });
    }
    if let Some(spec) = &config.generate {
        return Ok(Source { name: spec.clone(), graph: generate(spec)?, labels: None, default_beta: FALLBACK_BETA });
    }
    let name = config.dataset.as_deref().expect("validated config has a source");
    let registry = Registry::builtin();
    let entry = registry.get(name)?;
    let graph = match &entry.generator {
        Some(spec) => generate(spec)?,
        None => {
            let path = fetched_path(config, name);
            if !path.exists() {
                bail!(
                    "dataset `{name}` not found at {}; run `lsc fetch {name} --data-dir {}` first",
                    path.display(),
                    config.data_dir.display()
                );
            }
            read_file(&path, false)?.graph
        }
    };
    Ok(Source { name: name.to_string(), graph, labels: None, default_beta: entry.default_beta })
}

fn report_dropped(loaded: &LoadedGraph) {
    let d = loaded.dropped;
    if d.total() > 0 {
        eprintln!("note: dropped {} self-loops and {} duplicate edges", d.self_loops, d.duplicates);
    }
}
