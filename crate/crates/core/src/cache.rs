//! On-disk cache of computed `E^n_{k,l}` values.
//!
//! One file per normalized key, `E_{n}_{k}_{l}.json`, holding the Schur
//! expansion in canonical form together with a schema version. Writes go
//! through a temporary file and a rename so concurrent writers of the same
//! key leave exactly one complete file behind.

use std::fs;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::bigraded::BiSymFunc;
use crate::error::{Error, Result};
use crate::moduli::MemoKey;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Serialize, Deserialize)]
struct Entry {
    v: u32,
    n: usize,
    k: usize,
    l: usize,
    value: BiSymFunc,
}

#[derive(Clone, Debug)]
pub struct DiskCache {
    dir: PathBuf,
}

impl DiskCache {
    pub fn open(dir: impl Into<PathBuf>) -> Result<Self> {
        let dir = dir.into();
        fs::create_dir_all(&dir).map_err(|e| Error::Cache {
            path: dir.clone(),
            message: e.to_string(),
        })?;
        Ok(DiskCache { dir })
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    pub fn path_for(&self, key: MemoKey) -> PathBuf {
        self.dir.join(format!("E_{}_{}_{}.json", key.n, key.k, key.l))
    }

    /// Canonical file contents for a value (expects the Schur basis).
    pub fn encode(key: MemoKey, value: &BiSymFunc) -> Result<String> {
        let entry = Entry {
            v: SCHEMA_VERSION,
            n: key.n,
            k: key.k,
            l: key.l,
            value: value.to_schur(),
        };
        let mut s = serde_json::to_string(&entry)?;
        s.push('\n');
        Ok(s)
    }

    pub fn load(&self, key: MemoKey) -> Result<Option<BiSymFunc>> {
        let path = self.path_for(key);
        let text = match fs::read_to_string(&path) {
            Ok(t) => t,
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(None),
            Err(e) => {
                return Err(Error::Cache {
                    path,
                    message: e.to_string(),
                })
            }
        };
        let corrupt = |message: String| Error::Cache {
            path: path.clone(),
            message,
        };
        let raw: serde_json::Value =
            serde_json::from_str(&text).map_err(|e| corrupt(format!("unreadable entry: {e}")))?;
        match raw.get("v").and_then(serde_json::Value::as_u64) {
            Some(v) if v == u64::from(SCHEMA_VERSION) => {}
            Some(v) => {
                return Err(corrupt(format!(
                    "schema version {v}, expected {SCHEMA_VERSION}"
                )))
            }
            None => return Err(corrupt("missing schema version".into())),
        }
        let entry: Entry =
            serde_json::from_value(raw).map_err(|e| corrupt(format!("malformed entry: {e}")))?;
        if (entry.n, entry.k, entry.l) != (key.n, key.k, key.l) {
            return Err(corrupt(format!(
                "entry is for ({},{},{})",
                entry.n, entry.k, entry.l
            )));
        }
        Ok(Some(entry.value))
    }

    pub fn store(&self, key: MemoKey, value: &BiSymFunc) -> Result<()> {
        let path = self.path_for(key);
        let text = Self::encode(key, value)?;
        let tmp = self.dir.join(format!(
            ".E_{}_{}_{}.{}.tmp",
            key.n,
            key.k,
            key.l,
            std::process::id()
        ));
        let io = |e: std::io::Error| Error::Cache {
            path: path.clone(),
            message: e.to_string(),
        };
        fs::write(&tmp, text).map_err(io)?;
        fs::rename(&tmp, &path).map_err(io)?;
        Ok(())
    }

    /// Keys of all entries currently on disk, sorted.
    pub fn entries(&self) -> Result<Vec<MemoKey>> {
        let mut keys = Vec::new();
        let listing = fs::read_dir(&self.dir).map_err(|e| Error::Cache {
            path: self.dir.clone(),
            message: e.to_string(),
        })?;
        for item in listing {
            let name = item?.file_name();
            let name = name.to_string_lossy();
            let Some(stem) = name.strip_prefix("E_").and_then(|s| s.strip_suffix(".json")) else {
                continue;
            };
            let nums: Vec<usize> = stem.split('_').filter_map(|s| s.parse().ok()).collect();
            if let [n, k, l] = nums[..] {
                keys.push(MemoKey { n, k, l });
            }
        }
        keys.sort();
        Ok(keys)
    }

    /// Removes every cache entry; returns how many were deleted.
    pub fn clear(&self) -> Result<usize> {
        let keys = self.entries()?;
        for key in &keys {
            fs::remove_file(self.path_for(*key))?;
        }
        Ok(keys.len())
    }
}
