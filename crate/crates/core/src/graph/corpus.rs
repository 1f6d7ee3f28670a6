//! Exhaustive small-graph corpora, one representative per isomorphism class.
//!
//! Graphs on `n` vertices are produced by extending every representative on
//! `n - 1` vertices with a new vertex joined to each subset of the old ones,
//! then keeping the first graph seen for each canonical form. Every graph
//! arises this way (delete any vertex), and every connected graph arises
//! from a connected one (delete a non-cut vertex), so the connected corpus
//! only ever extends connected graphs with non-empty neighbourhoods.

use std::collections::HashSet;
use std::fs;
use std::path::{Path, PathBuf};

use super::{canonical_form, parse_graph, serialize_graph, Format, Graph};
use crate::error::{Error, Result};

fn extend(previous: &[Graph], n: usize, connected: bool) -> Vec<Graph> {
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    let old = n - 1;
    for g in previous {
        let start = if connected && old > 0 { 1u32 } else { 0 };
        for subset in start..(1u32 << old) {
            let edges: Vec<(usize, usize)> = g
                .edges()
                .chain((0..old).filter(|&i| subset >> i & 1 == 1).map(|i| (i, old)))
                .collect();
            let h = Graph::from_edges_dedup(n, edges);
            let form = canonical_form(&h);
            if seen.insert(form.clone()) {
                out.push(form.to_graph());
            }
        }
    }
    out.sort_by_key(|g| (g.m(), canonical_form(g)));
    out
}

fn build(n: usize, connected: bool) -> Vec<Graph> {
    if n == 0 {
        return vec![Graph::empty(0)];
    }
    let mut level = vec![Graph::empty(1)];
    for k in 2..=n {
        level = extend(&level, k, connected);
    }
    level
}

/// All graphs on exactly `n` vertices, up to isomorphism.
pub fn all_graphs(n: usize) -> Vec<Graph> {
    build(n, false)
}

/// All connected graphs on exactly `n` vertices, up to isomorphism.
pub fn connected_graphs(n: usize) -> Vec<Graph> {
    build(n, true)
}

/// Connected graphs on `1..=max_n` vertices, optionally cached as graph6
/// files (`connected_<n>.g6`, one graph per line).
#[derive(Clone, Debug)]
pub struct Corpus {
    pub graphs: Vec<Graph>,
}

impl Corpus {
    pub fn connected_up_to(max_n: usize, cache_dir: Option<&Path>) -> Result<Corpus> {
        let mut graphs = Vec::new();
        let mut level = vec![Graph::empty(1)];
        for n in 1..=max_n {
            if n > 1 {
                level = match cache_dir.map(|d| load(&cache_file(d, n))).transpose()?.flatten() {
                    Some(cached) => cached,
                    None => extend(&level, n, true),
                };
            }
            if let Some(dir) = cache_dir {
                store(&cache_file(dir, n), &level)?;
            }
            graphs.extend(level.iter().cloned());
        }
        Ok(Corpus { graphs })
    }

    pub fn len(&self) -> usize {
        self.graphs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.graphs.is_empty()
    }

    pub fn with_max_n(&self, max_n: usize) -> impl Iterator<Item = &Graph> {
        self.graphs.iter().filter(move |g| g.n() <= max_n)
    }
}

fn cache_file(dir: &Path, n: usize) -> PathBuf {
    dir.join(format!("connected_{n}.g6"))
}

fn io_err(path: &Path, e: std::io::Error) -> Error {
    Error::Input(format!("{}: {e}", path.display()))
}

fn load(path: &Path) -> Result<Option<Vec<Graph>>> {
    match fs::read_to_string(path) {
        Ok(text) => text
            .lines()
            .filter(|l| !l.trim().is_empty())
            .map(parse_graph)
            .collect::<Result<Vec<_>>>()
            .map(Some),
        Err(e) if e.kind() == std::io::ErrorKind::NotFound => Ok(None),
        Err(e) => Err(io_err(path, e)),
    }
}

fn store(path: &Path, graphs: &[Graph]) -> Result<()> {
    if path.exists() {
        return Ok(());
    }
    if let Some(parent) = path.parent() {
        fs::create_dir_all(parent).map_err(|e| io_err(parent, e))?;
    }
    let mut text = String::new();
    for g in graphs {
        text.push_str(&serialize_graph(g, Format::Graph6)?);
        text.push('\n');
    }
    // Write-then-rename so a concurrent reader never sees a partial file.
    let tmp = path.with_extension(format!("g6.{}.tmp", std::process::id()));
    fs::write(&tmp, text).map_err(|e| io_err(&tmp, e))?;
    fs::rename(&tmp, path).map_err(|e| io_err(path, e))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_match_known_sequences() {
        // Connected graphs: 1, 1, 2, 6, 21, 112, 853.
        let connected: Vec<usize> = (1..=7).map(|n| connected_graphs(n).len()).collect();
        assert_eq!(connected, vec![1, 1, 2, 6, 21, 112, 853]);
        // All graphs: 1, 2, 4, 11, 34, 156.
        let all: Vec<usize> = (1..=6).map(|n| all_graphs(n).len()).collect();
        assert_eq!(all, vec![1, 2, 4, 11, 34, 156]);
        assert!(connected_graphs(6).iter().all(Graph::is_connected));
    }

    #[test]
    fn cache_round_trip() {
        let dir = std::env::temp_dir().join(format!("chibound-corpus-{}", std::process::id()));
        let fresh = Corpus::connected_up_to(5, Some(&dir)).unwrap();
        let cached = Corpus::connected_up_to(5, Some(&dir)).unwrap();
        assert_eq!(fresh.graphs, cached.graphs);
        assert_eq!(fresh.len(), 1 + 1 + 2 + 6 + 21);
        fs::remove_dir_all(&dir).unwrap();
    }
}
