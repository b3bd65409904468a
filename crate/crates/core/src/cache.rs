//! On-disk persistence of full character tables, one JSON file per `n`.
//!
//! A file is `{"format_version":1,"n":N,"rows":{"[3,2,2]":[...],...}}` with each
//! row listed in canonical class order. Loading checks every key and `⟨χ,χ⟩ = 1`.

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::characters::{global, inner_product, CharacterTable, Characters, ClassFunction};
use crate::error::{Error, Result};
use crate::partitions::enumerate;

pub const FORMAT_VERSION: u32 = 1;
pub const ENV_VAR: &str = "SYMSPLIT_CACHE_DIR";

#[derive(Serialize, Deserialize)]
struct CacheFile {
    format_version: u32,
    n: usize,
    rows: BTreeMap<String, Vec<i64>>,
}

/// `$SYMSPLIT_CACHE_DIR`, else `$XDG_CACHE_HOME/symsplit`, else `~/.cache/symsplit`.
pub fn default_dir() -> Option<PathBuf> {
    let var = |k: &str| {
        std::env::var_os(k)
            .filter(|v| !v.is_empty())
            .map(PathBuf::from)
    };
    var(ENV_VAR)
        .or_else(|| var("XDG_CACHE_HOME").map(|d| d.join("symsplit")))
        .or_else(|| var("HOME").map(|h| h.join(".cache").join("symsplit")))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CacheEntry {
    pub n: usize,
    pub rows: usize,
    pub path: PathBuf,
    /// Written by a different format version; ignored on load.
    pub stale: bool,
}

#[derive(Debug, Clone)]
pub struct TableCache {
    dir: PathBuf,
}

impl TableCache {
    pub fn new(dir: impl Into<PathBuf>) -> Self {
        TableCache { dir: dir.into() }
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    pub fn path(&self, n: usize) -> PathBuf {
        self.dir.join(format!("chars-n{n}.json"))
    }

    fn err(path: &Path, reason: impl Into<String>) -> Error {
        Error::Cache {
            path: path.display().to_string(),
            reason: reason.into(),
        }
    }

    fn io(context: String) -> impl FnOnce(std::io::Error) -> Error {
        move |source| Error::Io { context, source }
    }

    pub fn store(&self, table: &CharacterTable) -> Result<PathBuf> {
        fs::create_dir_all(&self.dir)
            .map_err(Self::io(format!("creating {}", self.dir.display())))?;
        let file = CacheFile {
            format_version: FORMAT_VERSION,
            n: table.n,
            rows: table
                .parts
                .iter()
                .zip(&table.rows)
                .map(|(p, r)| (p.to_string(), r.clone()))
                .collect(),
        };
        let path = self.path(table.n);
        let tmp = path.with_extension("json.tmp");
        let body = serde_json::to_vec(&file).map_err(|e| Self::err(&path, e.to_string()))?;
        fs::write(&tmp, body).map_err(Self::io(format!("writing {}", tmp.display())))?;
        fs::rename(&tmp, &path).map_err(Self::io(format!("renaming to {}", path.display())))?;
        Ok(path)
    }

    /// The table for `n`, or `None` when absent or written by another format version.
    pub fn load(&self, n: usize) -> Result<Option<CharacterTable>> {
        let path = self.path(n);
        let bytes = match fs::read(&path) {
            Ok(b) => b,
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(None),
            Err(e) => return Err(Self::io(format!("reading {}", path.display()))(e)),
        };
        let file: CacheFile =
            serde_json::from_slice(&bytes).map_err(|e| Self::err(&path, e.to_string()))?;
        if file.format_version != FORMAT_VERSION {
            return Ok(None);
        }
        if file.n != n {
            return Err(Self::err(&path, format!("holds n={}", file.n)));
        }
        let parts = enumerate(n, None)?;
        if file.rows.len() != parts.len() {
            return Err(Self::err(
                &path,
                format!("{} rows, expected {}", file.rows.len(), parts.len()),
            ));
        }
        let mut rows = Vec::with_capacity(parts.len());
        for p in &parts {
            let row = file
                .rows
                .get(&p.to_string())
                .ok_or_else(|| Self::err(&path, format!("missing row {p}")))?;
            if row.len() != parts.len() {
                return Err(Self::err(
                    &path,
                    format!("row {p} has {} entries", row.len()),
                ));
            }
            let chi = ClassFunction::from_values(n, row.iter().map(|&v| i128::from(v)).collect())?;
            if !matches!(inner_product(&chi, &chi), Ok(1)) {
                return Err(Self::err(&path, format!("row {p} is not irreducible")));
            }
            rows.push(row.clone());
        }
        Ok(Some(CharacterTable { n, parts, rows }))
    }

    /// Loads `n` into `engine` if cached; returns whether anything was installed.
    pub fn load_into(&self, engine: &Characters, n: usize) -> Result<bool> {
        match self.load(n)? {
            Some(t) => {
                engine.install_table(t)?;
                Ok(true)
            }
            None => Ok(false),
        }
    }

    /// Computes the full table for `S_n` and writes it.
    pub fn warm(&self, n: usize) -> Result<(PathBuf, usize)> {
        let table = global().table(n)?;
        Ok((self.store(&table)?, table.rows.len()))
    }

    pub fn status(&self) -> Result<Vec<CacheEntry>> {
        let mut out = Vec::new();
        for (n, path) in self.files()? {
            let bytes = fs::read(&path).map_err(Self::io(format!("reading {}", path.display())))?;
            let file: CacheFile =
                serde_json::from_slice(&bytes).map_err(|e| Self::err(&path, e.to_string()))?;
            out.push(CacheEntry {
                n,
                rows: file.rows.len(),
                stale: file.format_version != FORMAT_VERSION,
                path,
            });
        }
        Ok(out)
    }

    /// Removes every cached table; returns how many files went.
    pub fn clear(&self) -> Result<usize> {
        let files = self.files()?;
        for (_, path) in &files {
            fs::remove_file(path).map_err(Self::io(format!("removing {}", path.display())))?;
        }
        Ok(files.len())
    }

    fn files(&self) -> Result<Vec<(usize, PathBuf)>> {
        let entries = match fs::read_dir(&self.dir) {
            Ok(e) => e,
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(Vec::new()),
            Err(e) => return Err(Self::io(format!("listing {}", self.dir.display()))(e)),
        };
        let mut out = Vec::new();
        for entry in entries {
            let path = entry
                .map_err(Self::io(format!("listing {}", self.dir.display())))?
                .path();
            let name = path
                .file_name()
                .and_then(|s| s.to_str())
                .unwrap_or_default();
            if let Some(n) = name
                .strip_prefix("chars-n")
                .and_then(|s| s.strip_suffix(".json"))
                .and_then(|s| s.parse().ok())
            {
                out.push((n, path));
            }
        }
        out.sort();
        Ok(out)
    }
}
