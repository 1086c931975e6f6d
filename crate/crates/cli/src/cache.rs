//! On-disk result cache.
//!
//! Each entry is a file named after the SHA-256 of its key. The first line is
//! `sha256:<hex>` over the remaining bytes, the rest is the JSON payload. An
//! entry whose checksum does not match is treated as absent and overwritten.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use anyhow::{Context, Result};
use serde::de::DeserializeOwned;
use serde::Serialize;
use sha2::{Digest, Sha256};

pub const CACHE_ENV: &str = "STACKWILF_CACHE_DIR";

/// Part of every key, so a new build never reads results of an old one.
pub const CODE_VERSION: &str = concat!(env!("CARGO_PKG_NAME"), "-", env!("CARGO_PKG_VERSION"), "/cache-v1");

fn hex_digest(bytes: &[u8]) -> String {
    format!("{:x}", Sha256::digest(bytes))
}

/// What a lookup found.
#[derive(Debug, PartialEq, Eq)]
pub enum Lookup<T> {
    Hit(T),
    Miss,
    /// The file existed but failed its checksum or did not parse.
    Corrupt,
}

#[derive(Clone, Debug)]
pub struct Cache {
    dir: PathBuf,
}

impl Cache {
    pub fn new(dir: impl Into<PathBuf>) -> Self {
        Cache { dir: dir.into() }
    }

    /// `$STACKWILF_CACHE_DIR`, else `$XDG_CACHE_HOME/stackwilf`, else
    /// `~/.cache/stackwilf`, else a directory under the system temp dir.
    pub fn default_dir() -> PathBuf {
        if let Some(d) = std::env::var_os(CACHE_ENV) {
            return d.into();
        }
        if let Some(d) = std::env::var_os("XDG_CACHE_HOME") {
            return Path::new(&d).join("stackwilf");
        }
        if let Some(h) = std::env::var_os("HOME") {
            return Path::new(&h).join(".cache").join("stackwilf");
        }
        std::env::temp_dir().join("stackwilf-cache")
    }

    /// Canonical key text: command, then the arguments in the given order.
    pub fn key(command: &str, args: &[(&str, String)]) -> String {
        let mut key = format!("{CODE_VERSION}\n{command}");
        for (name, value) in args {
            key.push_str(&format!("\n{name}={value}"));
        }
        key
    }

    fn path(&self, key: &str) -> PathBuf {
        self.dir.join(format!("{}.json", hex_digest(key.as_bytes())))
    }

    pub fn get<T: DeserializeOwned>(&self, key: &str) -> Lookup<T> {
        let Ok(raw) = fs::read_to_string(self.path(key)) else {
            return Lookup::Miss;
        };
        let Some((head, body)) = raw.split_once('\n') else {
            return Lookup::Corrupt;
        };
        if head.strip_prefix("sha256:") != Some(hex_digest(body.as_bytes()).as_str()) {
            return Lookup::Corrupt;
        }
        match serde_json::from_str(body) {
            Ok(v) => Lookup::Hit(v),
            Err(_) => Lookup::Corrupt,
        }
    }

    /// Writes through a temporary file and a rename, so readers never see a
    /// half-written entry.
    pub fn put<T: Serialize>(&self, key: &str, value: &T) -> Result<()> {
        fs::create_dir_all(&self.dir).with_context(|| format!("creating cache dir {}", self.dir.display()))?;
        let body = serde_json::to_string(value)?;
        let target = self.path(key);
        let tmp = target.with_extension(format!("tmp{}", std::process::id()));
        {
            let mut f = fs::File::create(&tmp)?;
            writeln!(f, "sha256:{}", hex_digest(body.as_bytes()))?;
            f.write_all(body.as_bytes())?;
            f.sync_all()?;
        }
        fs::rename(&tmp, &target).with_context(|| format!("writing cache entry {}", target.display()))?;
        Ok(())
    }

    /// Cached value for `key`, computing and storing it when missing or corrupt.
    pub fn get_or_compute<T, F>(&self, key: &str, compute: F) -> Result<T>
    where
        T: Serialize + DeserializeOwned,
        F: FnOnce() -> Result<T>,
    {
        match self.get(key) {
            Lookup::Hit(v) => Ok(v),
            Lookup::Miss | Lookup::Corrupt => {
                let v = compute()?;
                self.put(key, &v)?;
                Ok(v)
            }
        }
    }
}
