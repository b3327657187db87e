//! The bundled graph corpus and its manifest.

use std::path::{Path, PathBuf};

use serde::Deserialize;
use thiserror::Error;

use crate::format::{read_graph, FormatError};
use crate::plane_graph::PlaneGraph;

#[derive(Debug, Error)]
pub enum CorpusError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("bad manifest: {0}")]
    Manifest(#[from] toml::de::Error),
    #[error("{path}: {source}")]
    Graph { path: PathBuf, source: FormatError },
}

#[derive(Debug, Clone, Deserialize)]
pub struct ManifestEntry {
    pub name: String,
    pub file: String,
    pub description: String,
    pub vertices: usize,
    pub edges: usize,
    /// Expected class membership, computed independently of this crate.
    pub in_class: bool,
    /// Length of a shortest cycle; 0 for a forest.
    pub girth: usize,
}

#[derive(Debug, Deserialize)]
struct Manifest {
    graph: Vec<ManifestEntry>,
}

#[derive(Debug, Clone)]
pub struct CorpusGraph {
    pub entry: ManifestEntry,
    pub graph: PlaneGraph,
}

/// The corpus shipped with the crate sources.
pub fn default_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("corpus")
}

pub fn read_manifest(dir: &Path) -> Result<Vec<ManifestEntry>, CorpusError> {
    let path = dir.join("manifest.toml");
    let text = std::fs::read_to_string(&path).map_err(|source| CorpusError::Io { path, source })?;
    Ok(toml::from_str::<Manifest>(&text)?.graph)
}

/// Every graph listed in the manifest of `dir`, in manifest order.
pub fn load(dir: &Path) -> Result<Vec<CorpusGraph>, CorpusError> {
    read_manifest(dir)?
        .into_iter()
        .map(|entry| {
            let path = dir.join(&entry.file);
            let graph = read_graph(&path).map_err(|source| CorpusError::Graph { path, source })?;
            Ok(CorpusGraph { entry, graph })
        })
        .collect()
}

/// Corpus graphs expected to lie in the class.
pub fn class_members(dir: &Path) -> Result<Vec<CorpusGraph>, CorpusError> {
    Ok(load(dir)?
        .into_iter()
        .filter(|c| c.entry.in_class)
        .collect())
}
