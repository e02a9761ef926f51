//! Graph JSON and word-list files.

use std::fs;
use std::path::{Path, PathBuf};

use gbw_core::{Graph, GraphError};
use serde::{Deserialize, Serialize};

#[derive(Debug, thiserror::Error)]
pub enum IoError {
    #[error("cannot read {path}: {source}")]
    Read { path: PathBuf, source: std::io::Error },
    #[error("cannot write {path}: {source}")]
    Write { path: PathBuf, source: std::io::Error },
    #[error("{path}: invalid graph JSON: {source}")]
    Json { path: PathBuf, source: serde_json::Error },
    #[error("{path}: {source}")]
    Graph { path: PathBuf, source: GraphError },
}

/// `{"vertices": n, "edges": [[u, v], ...]}` with 0-based endpoints.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub vertices: usize,
    pub edges: Vec<[usize; 2]>,
}

impl GraphFile {
    pub fn to_graph(&self) -> Result<Graph, GraphError> {
        let edges: Vec<(usize, usize)> = self.edges.iter().map(|&[u, v]| (u, v)).collect();
        Graph::new(self.vertices, &edges)
    }

    /// Canonical form: sorted edges with `u < v`, no name.
    pub fn from_graph(g: &Graph) -> Self {
        Self { name: None, vertices: g.vertex_count(), edges: g.edges().iter().map(|&(u, v)| [u, v]).collect() }
    }
}

pub fn parse_graph(text: &str) -> Result<Graph, String> {
    let file: GraphFile = serde_json::from_str(text).map_err(|e| e.to_string())?;
    file.to_graph().map_err(|e| e.to_string())
}

pub fn graph_to_json(g: &Graph) -> String {
    serde_json::to_string(&GraphFile::from_graph(g)).expect("plain data serializes")
}

pub fn read_text(path: &Path) -> Result<String, IoError> {
    fs::read_to_string(path).map_err(|source| IoError::Read { path: path.to_owned(), source })
}

pub fn read_graph(path: &Path) -> Result<(Graph, String), IoError> {
    let text = read_text(path)?;
    let file: GraphFile =
        serde_json::from_str(&text).map_err(|source| IoError::Json { path: path.to_owned(), source })?;
    let g = file.to_graph().map_err(|source| IoError::Graph { path: path.to_owned(), source })?;
    Ok((g, text))
}

pub fn write_graph(path: &Path, g: &Graph) -> Result<(), IoError> {
    let mut text = serde_json::to_string_pretty(&GraphFile::from_graph(g)).expect("plain data serializes");
    text.push('\n');
    fs::write(path, text).map_err(|source| IoError::Write { path: path.to_owned(), source })
}

/// One word per line; blank lines and `#` comments are skipped.
pub fn word_lines(text: &str) -> Vec<&str> {
    text.lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .filter(|l| !l.is_empty())
        .collect()
}
