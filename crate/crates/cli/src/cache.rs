//! On-disk catalog cache.
//!
//! A catalog is stored as graph6 lines in `<kind>-n<order>-<digest>.g6`,
//! where `<digest>` is the first 16 hex digits of the SHA-256 of the file
//! contents. A file is only used if its digest matches its name and every
//! line is a sorted, canonical graph of the right order and kind; anything
//! else is ignored and regenerated.

use std::fs;
use std::path::{Path, PathBuf};

use itdom_core::graph::{
    canonical_graph6, enumerate_connected_graphs, enumerate_graphs, parse_graph6,
};
use itdom_core::CatalogEntry;
use sha2::{Digest, Sha256};

use crate::error::CliError;

pub struct CatalogCache {
    dir: Option<PathBuf>,
}

fn digest(content: &str) -> String {
    let hash = Sha256::digest(content.as_bytes());
    hash.iter().take(8).map(|b| format!("{b:02x}")).collect()
}

fn kind(connected: bool) -> &'static str {
    if connected {
        "connected"
    } else {
        "all"
    }
}

/// `$ITDOM_CACHE_DIR`, else `$XDG_CACHE_HOME/itdom`, else `$HOME/.cache/itdom`,
/// else a directory under the system temp dir.
pub fn default_dir() -> PathBuf {
    let env = |k: &str| {
        std::env::var_os(k)
            .filter(|v| !v.is_empty())
            .map(PathBuf::from)
    };
    if let Some(d) = env("ITDOM_CACHE_DIR") {
        return d;
    }
    if let Some(d) = env("XDG_CACHE_HOME") {
        return d.join("itdom");
    }
    if let Some(d) = env("HOME") {
        return d.join(".cache").join("itdom");
    }
    std::env::temp_dir().join("itdom-cache")
}

impl CatalogCache {
    /// `dir = None` disables the cache.
    pub fn new(dir: Option<PathBuf>) -> Self {
        CatalogCache { dir }
    }

    pub fn catalog(&self, n: usize, connected: bool) -> Result<Vec<CatalogEntry>, CliError> {
        if let Some(dir) = &self.dir {
            if let Some(entries) = load(dir, n, connected) {
                return Ok(entries);
            }
        }
        let entries = if connected {
            enumerate_connected_graphs(n)?
        } else {
            enumerate_graphs(n)?
        };
        if let Some(dir) = &self.dir {
            // A cache that cannot be written is not an error.
            let _ = store(dir, n, connected, &entries);
        }
        Ok(entries)
    }
}

fn prefix(n: usize, connected: bool) -> String {
    format!("{}-n{}-", kind(connected), n)
}

fn load(dir: &Path, n: usize, connected: bool) -> Option<Vec<CatalogEntry>> {
    let prefix = prefix(n, connected);
    let mut names: Vec<PathBuf> = fs::read_dir(dir)
        .ok()?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| {
            p.file_name()
                .and_then(|s| s.to_str())
                .is_some_and(|s| s.starts_with(&prefix) && s.ends_with(".g6"))
        })
        .collect();
    names.sort();
    names
        .iter()
        .find_map(|path| validate(path, &prefix, n, connected))
}

fn validate(path: &Path, prefix: &str, n: usize, connected: bool) -> Option<Vec<CatalogEntry>> {
    let name = path.file_name()?.to_str()?;
    let expected = name.strip_prefix(prefix)?.strip_suffix(".g6")?;
    let content = fs::read_to_string(path).ok()?;
    if digest(&content) != expected {
        return None;
    }
    let mut out: Vec<CatalogEntry> = Vec::new();
    for line in content.lines() {
        let graph = parse_graph6(line).ok()?;
        if graph.order() != n || (connected && !graph.is_connected()) {
            return None;
        }
        if canonical_graph6(&graph).ok()? != line {
            return None;
        }
        if out.last().is_some_and(|prev| prev.graph6.as_str() >= line) {
            return None;
        }
        out.push(CatalogEntry {
            graph,
            graph6: line.to_string(),
            order: n,
        });
    }
    (!out.is_empty()).then_some(out)
}

fn store(dir: &Path, n: usize, connected: bool, entries: &[CatalogEntry]) -> std::io::Result<()> {
    fs::create_dir_all(dir)?;
    let mut content = String::new();
    for e in entries {
        content.push_str(&e.graph6);
        content.push('\n');
    }
    let name = format!("{}{}.g6", prefix(n, connected), digest(&content));
    let tmp = dir.join(format!(".{name}.{}.tmp", std::process::id()));
    fs::write(&tmp, &content)?;
    fs::rename(&tmp, dir.join(name))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn writes_then_reads_back() {
        let dir = tempfile::tempdir().unwrap();
        let cache = CatalogCache::new(Some(dir.path().to_path_buf()));
        let first = cache.catalog(5, true).unwrap();
        let files: Vec<_> = fs::read_dir(dir.path()).unwrap().collect();
        assert_eq!(files.len(), 1);
        assert!(load(dir.path(), 5, true).is_some());
        assert_eq!(cache.catalog(5, true).unwrap(), first);
    }

    #[test]
    fn corrupted_files_are_ignored() {
        let dir = tempfile::tempdir().unwrap();
        let cache = CatalogCache::new(Some(dir.path().to_path_buf()));
        let good = cache.catalog(4, true).unwrap();
        let path = fs::read_dir(dir.path())
            .unwrap()
            .next()
            .unwrap()
            .unwrap()
            .path();
        fs::write(&path, "C~\n").unwrap();
        assert!(load(dir.path(), 4, true).is_none());
        assert_eq!(cache.catalog(4, true).unwrap(), good);
    }

    #[test]
    fn disabled_cache_writes_nothing() {
        let cache = CatalogCache::new(None);
        assert_eq!(cache.catalog(3, false).unwrap().len(), 4);
    }
}
