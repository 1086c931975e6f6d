use std::path::PathBuf;

use anyhow::{bail, Result};
use stackwilf::stats::Statistic;
use stackwilf::TreeFamily;

use crate::cache::Cache;
use crate::output::Format;

/// Lengths above this take hours or exhaust memory; `--unsafe` lifts it.
pub const HARD_CAP: usize = 10;

#[derive(Clone, Debug)]
pub struct RunConfig {
    pub n_max: Option<usize>,
    pub families: Vec<TreeFamily>,
    pub m_max: usize,
    pub max_subset: usize,
    pub stats: Vec<Statistic>,
    pub format: Format,
    pub cache: Option<Cache>,
    pub workers: usize,
    pub allow_large: bool,
}

impl RunConfig {
    pub fn validate(&self) -> Result<()> {
        if self.workers == 0 {
            bail!("--workers must be at least 1");
        }
        if let Some(n) = self.n_max {
            self.check_len(n)?;
        }
        Ok(())
    }

    /// Rejects lengths over the cap unless `--unsafe` was given.
    pub fn check_len(&self, n: usize) -> Result<()> {
        if n > HARD_CAP && !self.allow_large {
            bail!("length {n} is over the cap of {HARD_CAP}; pass --unsafe to run it anyway");
        }
        Ok(())
    }

    pub fn cache_dir(explicit: Option<PathBuf>) -> PathBuf {
        explicit.unwrap_or_else(Cache::default_dir)
    }
}
