//! Downloading registry datasets and normalizing them to 0-based edge lists.

use std::fs::{self, File};
use std::io::{BufWriter, Cursor, Read};
use std::path::{Path, PathBuf};

use anyhow::{anyhow, bail, Context, Result};
use lsc_core::graph::{load_edge_list, write_edge_list};
use serde::Serialize;
use sha2::{Digest, Sha256};

use crate::registry::{ArchiveFormat, DatasetEntry};

const MAX_DOWNLOAD_BYTES: u64 = 512 * 1024 * 1024;

#[derive(Debug, Serialize)]
pub struct FetchSummary {
    pub dataset: String,
    pub path: PathBuf,
    pub sha256: String,
    pub nodes: usize,
    pub edges: usize,
    pub expected_nodes: usize,
    pub expected_edges: usize,
    pub dropped_self_loops: usize,
    pub dropped_duplicates: usize,
}

pub fn sha256_hex(bytes: &[u8]) -> String {
    Sha256::digest(bytes).iter().map(|b| format!("{b:02x}")).collect()
}

fn download(url: &str) -> Result<Vec<u8>> {
    let mut response = ureq::get(url).call().with_context(|| format!("downloading {url}"))?;
    response
        .body_mut()
        .with_config()
        .limit(MAX_DOWNLOAD_BYTES)
        .read_to_vec()
        .with_context(|| format!("reading response from {url}"))
}

fn matches_member(path: &Path, member: &str) -> bool {
    path.file_name().is_some_and(|f| f == member)
}

fn from_tar<R: Read>(reader: R, member: &str) -> Result<String> {
    let mut archive = tar::Archive::new(reader);
    for entry in archive.entries()? {
        let mut entry = entry?;
        if matches_member(&entry.path()?, member) {
            let mut text = String::new();
            entry.read_to_string(&mut text)?;
            return Ok(text);
        }
    }
    bail!("archive has no member named `{member}`")
}

fn from_zip(bytes: &[u8], member: &str) -> Result<String> {
    let mut archive = zip::ZipArchive::new(Cursor::new(bytes)).context("opening zip archive")?;
    for i in 0..archive.len() {
        let mut file = archive.by_index(i)?;
        if file.enclosed_name().is_some_and(|p| matches_member(&p, member)) {
            let mut text = String::new();
            file.read_to_string(&mut text)?;
            return Ok(text);
        }
    }
    bail!("archive has no member named `{member}`")
}

pub fn extract(bytes: &[u8], format: ArchiveFormat, member: &str) -> Result<String> {
    match format {
        ArchiveFormat::TarBz2 => from_tar(bzip2::read::BzDecoder::new(bytes), member),
        ArchiveFormat::TarGz => from_tar(flate2::read::GzDecoder::new(bytes), member),
        ArchiveFormat::Zip => from_zip(bytes, member),
        ArchiveFormat::Plain => String::from_utf8(bytes.to_vec()).context("edge list is not UTF-8"),
    }
}

/// Keeps the first two columns of each data line. Matrix Market files
/// also carry a size line before the entries, which is dropped.
pub fn normalize(text: &str, matrix_market: bool) -> Result<String> {
    let mut out = String::with_capacity(text.len());
    let mut skip_size_line = matrix_market;
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('%') || line.starts_with('#') {
            continue;
        }
        if skip_size_line {
            skip_size_line = false;
            continue;
        }
        let mut cols = line.split(|c: char| c.is_whitespace() || c == ',').filter(|s| !s.is_empty());
        match (cols.next(), cols.next()) {
            (Some(u), Some(v)) => {
                out.push_str(u);
                out.push(' ');
                out.push_str(v);
                out.push('\n');
            }
            _ => bail!("line {}: expected at least two columns", i + 1),
        }
    }
    Ok(out)
}

/// Fetches `name` (or reads `archive` instead of downloading) and writes
/// `<data_dir>/<name>.txt` plus `<name>.labels.csv` mapping ids to the
/// original labels.
pub fn fetch(name: &str, entry: &DatasetEntry, data_dir: &Path, archive: Option<&Path>) -> Result<FetchSummary> {
    let (Some(url), Some(format), Some(member)) = (&entry.url, entry.archive, &entry.member) else {
        bail!("dataset `{name}` is generated, not downloaded");
    };
    let bytes = match archive {
        Some(path) => fs::read(path).with_context(|| format!("reading archive {}", path.display()))?,
        None => download(url)?,
    };
    let digest = sha256_hex(&bytes);
    if let Some(expected) = &entry.sha256 {
        if !expected.eq_ignore_ascii_case(&digest) {
            bail!("checksum mismatch for `{name}`: expected {expected}, got {digest}");
        }
    }
    let raw = extract(&bytes, format, member)?;
    let normalized = normalize(&raw, member.ends_with(".mtx"))?;
    let loaded = load_edge_list(&normalized, true).with_context(|| format!("parsing `{member}`"))?;
    let labels = loaded.labels.as_ref().ok_or_else(|| anyhow!("relabeling produced no labels"))?;

    fs::create_dir_all(data_dir).with_context(|| format!("creating {}", data_dir.display()))?;
    let path = data_dir.join(format!("{name}.txt"));
    write_edge_list(&loaded.graph, None, BufWriter::new(File::create(&path)?))?;
    labels.write_csv(BufWriter::new(File::create(data_dir.join(format!("{name}.labels.csv")))?))?;

    Ok(FetchSummary {
        dataset: name.to_string(),
        path,
        sha256: digest,
        nodes: loaded.graph.node_count(),
        edges: loaded.graph.edge_count(),
        expected_nodes: entry.nodes,
        expected_edges: entry.edges,
        dropped_self_loops: loaded.dropped.self_loops,
        dropped_duplicates: loaded.dropped.duplicates,
    })
}
