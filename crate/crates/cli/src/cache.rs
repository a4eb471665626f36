//! Optional on-disk memo of tensor rows.
//!
//! One JSON file with a version header. Keys are `operation:canonical input`.
//! In debug builds every hit is recomputed and compared.

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::CliError;

pub const CACHE_VERSION: &str = "pecomb-cache/1";

#[derive(Debug, Serialize, Deserialize)]
struct CacheFile {
    version: String,
    entries: BTreeMap<String, Value>,
}

#[derive(Debug)]
pub struct Cache {
    path: PathBuf,
    entries: BTreeMap<String, Value>,
    dirty: bool,
}

impl Cache {
    /// Opens `path`, starting empty if it does not exist. A file written by a
    /// different version is discarded.
    pub fn open(path: &Path) -> Result<Self, CliError> {
        let entries = match fs::read_to_string(path) {
            Ok(text) => match serde_json::from_str::<CacheFile>(&text) {
                Ok(file) if file.version == CACHE_VERSION => file.entries,
                Ok(_) => BTreeMap::new(),
                Err(e) => return Err(CliError::Cache(format!("{}: {e}", path.display()))),
            },
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => BTreeMap::new(),
            Err(e) => return Err(e.into()),
        };
        Ok(Cache {
            path: path.to_path_buf(),
            entries,
            dirty: false,
        })
    }

    /// Looks up `key`, computing and storing it on a miss.
    pub fn get_or_compute<T, F>(&mut self, key: &str, compute: F) -> Result<T, CliError>
    where
        T: Serialize + for<'de> Deserialize<'de> + PartialEq,
        F: Fn() -> T,
    {
        if let Some(stored) = self.entries.get(key) {
            let value: T = serde_json::from_value(stored.clone())
                .map_err(|e| CliError::Cache(format!("entry {key}: {e}")))?;
            if cfg!(debug_assertions) && value != compute() {
                return Err(CliError::Cache(format!("stale entry {key}")));
            }
            return Ok(value);
        }
        let value = compute();
        let json = serde_json::to_value(&value).map_err(|e| CliError::Cache(e.to_string()))?;
        self.entries.insert(key.to_string(), json);
        self.dirty = true;
        Ok(value)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn save(&mut self) -> Result<(), CliError> {
        if !self.dirty {
            return Ok(());
        }
        let file = CacheFile {
            version: CACHE_VERSION.to_string(),
            entries: self.entries.clone(),
        };
        let text = serde_json::to_string(&file).map_err(|e| CliError::Cache(e.to_string()))?;
        let tmp = self.path.with_extension("tmp");
        fs::write(&tmp, text)?;
        fs::rename(&tmp, &self.path)?;
        self.dirty = false;
        Ok(())
    }
}
