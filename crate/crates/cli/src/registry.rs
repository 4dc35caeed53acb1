use std::collections::BTreeMap;

use anyhow::{anyhow, Result};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum ArchiveFormat {
    #[serde(rename = "tar.bz2")]
    TarBz2,
    #[serde(rename = "tar.gz")]
    TarGz,
    #[serde(rename = "zip")]
    Zip,
    #[serde(rename = "plain")]
    Plain,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DatasetEntry {
    pub description: String,
    pub url: Option<String>,
    pub archive: Option<ArchiveFormat>,
    /// File inside the archive holding the edges (matched by file name).
    pub member: Option<String>,
    pub generator: Option<String>,
    pub sha256: Option<String>,
    pub nodes: usize,
    pub edges: usize,
    pub default_beta: f64,
}

#[derive(Debug, Clone, Deserialize)]
pub struct Registry {
    pub datasets: BTreeMap<String, DatasetEntry>,
}

const BUILTIN: &str = include_str!("registry.toml");

impl Registry {
    pub fn builtin() -> Self {
        toml::from_str(BUILTIN).expect("built-in registry parses")
    }

    pub fn get(&self, name: &str) -> Result<&DatasetEntry> {
        self.datasets.get(name).ok_or_else(|| {
            let known: Vec<&str> = self.datasets.keys().map(String::as_str).collect();
            anyhow!("unknown dataset `{name}` (known: {})", known.join(", "))
        })
    }
}
