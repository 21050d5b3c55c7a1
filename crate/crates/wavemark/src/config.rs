//! Optional `key = value` config file. Top-level keys set defaults for every
//! subcommand; a `[section]` named after a subcommand overrides them, and
//! command-line flags override both.

use crate::error::{Error, Result};
use std::path::Path;
use toml::Value;

#[derive(Debug, Clone, Default)]
pub struct ConfigFile {
    root: toml::Table,
}

impl ConfigFile {
    pub fn empty() -> Self {
        ConfigFile::default()
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
        let root: toml::Table = text
            .parse()
            .map_err(|e| Error::Config(format!("{}: {e}", path.display())))?;
        Ok(ConfigFile { root })
    }

    /// `[section].key` if present, else the top-level `key`.
    pub fn get(&self, section: &str, key: &str) -> Option<&Value> {
        self.root
            .get(section)
            .and_then(Value::as_table)
            .and_then(|t| t.get(key))
            .or_else(|| {
                let v = self.root.get(key)?;
                // a table at top level is a section header, not a default
                (!v.is_table()).then_some(v)
            })
    }

    fn typed<T>(
        &self,
        section: &str,
        key: &str,
        kind: &str,
        cast: impl Fn(&Value) -> Option<T>,
    ) -> Result<Option<T>> {
        match self.get(section, key) {
            None => Ok(None),
            Some(v) => cast(v).map(Some).ok_or_else(|| {
                Error::Config(format!("config key `{key}` must be {kind}, got {v}"))
            }),
        }
    }

    pub fn f64(&self, section: &str, key: &str) -> Result<Option<f64>> {
        self.typed(section, key, "a number", |v| {
            v.as_float().or_else(|| v.as_integer().map(|i| i as f64))
        })
    }

    pub fn u64(&self, section: &str, key: &str) -> Result<Option<u64>> {
        self.typed(section, key, "a non-negative integer", |v| {
            v.as_integer().and_then(|i| u64::try_from(i).ok())
        })
    }

    pub fn usize(&self, section: &str, key: &str) -> Result<Option<usize>> {
        Ok(self.u64(section, key)?.map(|v| v as usize))
    }

    pub fn string(&self, section: &str, key: &str) -> Result<Option<String>> {
        self.typed(section, key, "a string", |v| {
            v.as_str().map(ToString::to_string)
        })
    }

    pub fn bool(&self, section: &str, key: &str) -> Result<Option<bool>> {
        self.typed(section, key, "a boolean", Value::as_bool)
    }
}
