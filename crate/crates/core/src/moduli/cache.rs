//! Optional on-disk store of `F` series, one JSON file per [`MemoKey`].
//!
//! A file carries a header with the key and a format version; a reader
//! trusts the payload only when the header matches the requested key.
//! Unreadable or mismatched files are treated as absent.

use std::fs;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use super::MemoKey;
use crate::json::{series_from_terms, series_terms, JsonTerm};
use crate::series::BiSeries;

pub const CACHE_FORMAT_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
struct CacheHeader {
    format_version: u32,
    n: u32,
    d_residue: u32,
    g: u32,
    cap: u32,
}

#[derive(Debug, Serialize, Deserialize)]
struct CacheFile {
    header: CacheHeader,
    terms: Vec<JsonTerm>,
}

impl CacheHeader {
    fn for_key(key: &MemoKey) -> Self {
        CacheHeader {
            format_version: CACHE_FORMAT_VERSION,
            n: key.n,
            d_residue: key.d_residue,
            g: key.g,
            cap: key.cap,
        }
    }
}

#[derive(Debug, Clone)]
pub struct DiskCache {
    dir: PathBuf,
}

impl DiskCache {
    pub fn open(dir: impl Into<PathBuf>) -> std::io::Result<Self> {
        let dir = dir.into();
        fs::create_dir_all(&dir)?;
        Ok(DiskCache { dir })
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    pub fn path_for(&self, key: &MemoKey) -> PathBuf {
        self.dir.join(format!(
            "F_n{}_r{}_g{}_cap{}.json",
            key.n, key.d_residue, key.g, key.cap
        ))
    }

    /// The cached series for `key`, if a valid file exists.
    pub fn load(&self, key: &MemoKey) -> Option<BiSeries> {
        let text = fs::read_to_string(self.path_for(key)).ok()?;
        let file: CacheFile = serde_json::from_str(&text).ok()?;
        if file.header != CacheHeader::for_key(key) {
            return None;
        }
        series_from_terms(key.cap, &file.terms).ok()
    }

    pub fn store(&self, key: &MemoKey, series: &BiSeries) -> std::io::Result<()> {
        let file = CacheFile {
            header: CacheHeader::for_key(key),
            terms: series_terms(series),
        };
        let text = serde_json::to_string_pretty(&file)?;
        let path = self.path_for(key);
        // write-then-rename so a concurrent reader never sees a partial file
        let tmp = path.with_extension(format!("tmp{}", std::process::id()));
        fs::write(&tmp, text)?;
        fs::rename(&tmp, &path)
    }
}
