//! Content-addressed JSON cache of computed results.
//!
//! An entry lives at `<dir>/<sha256 of key>.json` and records the schema
//! version and the key next to the value. Anything that fails to parse or
//! does not match is treated as a miss.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::sync::atomic::{AtomicU64, Ordering};

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CacheKey {
    pub operation: String,
    pub type_letter: String,
    pub rank: usize,
    pub weight: Vec<i64>,
    /// Further arguments that change the result, such as a second weight.
    pub extra: Vec<i64>,
}

#[derive(Serialize, Deserialize)]
struct Entry<T> {
    schema: u32,
    key: CacheKey,
    value: T,
}

#[derive(Debug, Clone)]
pub struct Cache {
    dir: PathBuf,
}

static TMP_COUNTER: AtomicU64 = AtomicU64::new(0);

impl Cache {
    pub fn new(dir: impl Into<PathBuf>) -> Cache {
        Cache { dir: dir.into() }
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    pub fn path_for(&self, key: &CacheKey) -> PathBuf {
        let canonical = serde_json::to_vec(&(SCHEMA_VERSION, key)).expect("keys serialize");
        let digest = Sha256::digest(&canonical);
        self.dir.join(format!("{}.json", hex::encode(digest)))
    }

    pub fn load<T: DeserializeOwned>(&self, key: &CacheKey) -> Option<T> {
        let path = self.path_for(key);
        let bytes = fs::read(&path).ok()?;
        match serde_json::from_slice::<Entry<T>>(&bytes) {
            Ok(e) if e.schema == SCHEMA_VERSION && &e.key == key => Some(e.value),
            Ok(e) if e.schema != SCHEMA_VERSION => None,
            Ok(_) => {
                log::warn!(
                    "cache entry {} has a mismatched key; recomputing",
                    path.display()
                );
                None
            }
            Err(err) => {
                log::warn!("ignoring corrupt cache entry {}: {err}", path.display());
                None
            }
        }
    }

    /// Writes through a temporary file and a rename, so concurrent stores of
    /// the same key leave one complete entry.
    pub fn store<T: Serialize>(&self, key: &CacheKey, value: &T) -> std::io::Result<()> {
        fs::create_dir_all(&self.dir)?;
        let path = self.path_for(key);
        let tmp = self.dir.join(format!(
            ".tmp-{}-{}",
            std::process::id(),
            TMP_COUNTER.fetch_add(1, Ordering::Relaxed)
        ));
        let entry = Entry {
            schema: SCHEMA_VERSION,
            key: key.clone(),
            value,
        };
        let mut f = fs::File::create(&tmp)?;
        f.write_all(&serde_json::to_vec(&entry).map_err(std::io::Error::other)?)?;
        f.sync_all()?;
        drop(f);
        fs::rename(&tmp, &path).inspect_err(|_| {
            let _ = fs::remove_file(&tmp);
        })
    }

    /// Cached value for `key`, computing and storing it on a miss. Store
    /// failures are logged and do not affect the result.
    pub fn get_or_compute<T, E>(
        &self,
        key: &CacheKey,
        compute: impl FnOnce() -> Result<T, E>,
    ) -> Result<T, E>
    where
        T: Serialize + DeserializeOwned,
    {
        if let Some(v) = self.load(key) {
            return Ok(v);
        }
        let v = compute()?;
        if let Err(e) = self.store(key, &v) {
            log::warn!("could not write cache entry in {}: {e}", self.dir.display());
        }
        Ok(v)
    }
}
