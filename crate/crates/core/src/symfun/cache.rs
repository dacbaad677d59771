//! Advisory on-disk cache for character tables and Kostka matrices.
//! A missing, stale or corrupt file is rebuilt; results never depend on it.

use super::characters::CharacterTable;
use super::kostka::KostkaMatrix;
use serde::{de::DeserializeOwned, Deserialize, Serialize};
use std::path::{Path, PathBuf};

pub const CACHE_VERSION: u32 = 1;
pub const CACHE_ENV: &str = "TANGENT_CACHE_DIR";

#[derive(Serialize, Deserialize)]
struct Envelope<T> {
    version: u32,
    kind: String,
    key: usize,
    table: T,
}

#[derive(Clone, Debug, Default)]
pub struct TableCache {
    dir: Option<PathBuf>,
}

impl TableCache {
    pub fn new(dir: Option<PathBuf>) -> Self {
        TableCache { dir }
    }

    /// Explicit directory first, then `TANGENT_CACHE_DIR`, else no caching.
    pub fn resolve(dir: Option<PathBuf>) -> Self {
        TableCache { dir: dir.or_else(|| std::env::var_os(CACHE_ENV).map(PathBuf::from)) }
    }

    pub fn dir(&self) -> Option<&Path> {
        self.dir.as_deref()
    }

    pub fn character_table(&self, r: usize) -> CharacterTable {
        self.load_or_build("characters", r, || CharacterTable::build(r))
    }

    pub fn kostka_matrix(&self, n: usize) -> KostkaMatrix {
        self.load_or_build("kostka", n, || KostkaMatrix::build(n))
    }

    fn load_or_build<T, F>(&self, kind: &str, key: usize, build: F) -> T
    where
        T: Serialize + DeserializeOwned,
        F: FnOnce() -> T,
    {
        let Some(dir) = &self.dir else { return build() };
        let path = dir.join(format!("{kind}-v{CACHE_VERSION}-{key}.json"));
        if let Ok(text) = std::fs::read_to_string(&path) {
            if let Ok(env) = serde_json::from_str::<Envelope<T>>(&text) {
                if env.version == CACHE_VERSION && env.kind == kind && env.key == key {
                    return env.table;
                }
            }
        }
        let table = build();
        let env = Envelope { version: CACHE_VERSION, kind: kind.to_string(), key, table };
        if std::fs::create_dir_all(dir).is_ok() {
            let tmp = path.with_extension("tmp");
            if let Ok(s) = serde_json::to_string(&env) {
                if std::fs::write(&tmp, s).is_ok() {
                    let _ = std::fs::rename(&tmp, &path);
                }
            }
        }
        env.table
    }
}
