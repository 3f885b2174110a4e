//! Append-only JSON-lines store of solver results.
//!
//! Every line is `{"engine_version": ..., "key": ..., "value": ...}`. Lines written by
//! another engine version, or that fail to parse, are skipped and counted.

use std::collections::HashMap;
use std::fs::{File, OpenOptions};
use std::io::{BufRead, BufReader, Write};
use std::path::{Path, PathBuf};

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::sep::SepCertificate;
use crate::word::{to_digits, Word};

pub const ENGINE_VERSION: &str = concat!("sepwords-", env!("CARGO_PKG_VERSION"), "/1");

#[derive(Debug, Default)]
pub struct Cache {
    path: Option<PathBuf>,
    entries: HashMap<String, Value>,
    skipped: usize,
}

/// Key of an unordered word pair: the two digit strings in sorted order.
pub fn pair_key(w: &Word, x: &Word) -> String {
    let (a, b) = (to_digits(w), to_digits(x));
    let (a, b) = if (a.len(), &a) <= (b.len(), &b) { (a, b) } else { (b, a) };
    format!("sep:{}:{a}|{b}", w.alphabet_size().max(x.alphabet_size()))
}

impl Cache {
    /// A cache that lives only in memory.
    pub fn in_memory() -> Self {
        Cache::default()
    }

    /// Loads `path` if it exists; later stores append to it.
    pub fn open(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref().to_path_buf();
        let mut cache = Cache {
            path: Some(path.clone()),
            ..Cache::default()
        };
        let file = match File::open(&path) {
            Ok(f) => f,
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(cache),
            Err(e) => return Err(io_error(&path, e)),
        };
        for line in BufReader::new(file).lines() {
            let line = line.map_err(|e| io_error(&path, e))?;
            if line.trim().is_empty() {
                continue;
            }
            match parse_line(&line) {
                Some((key, value)) => {
                    cache.entries.insert(key, value);
                }
                None => cache.skipped += 1,
            }
        }
        Ok(cache)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Lines ignored while loading: corrupted, or from another engine version.
    pub fn skipped(&self) -> usize {
        self.skipped
    }

    pub fn get(&self, key: &str) -> Option<&Value> {
        self.entries.get(key)
    }

    pub fn store(&mut self, key: &str, value: Value) -> Result<()> {
        if let Some(path) = &self.path {
            let line = json!({"engine_version": ENGINE_VERSION, "key": key, "value": value}).to_string() + "\n";
            let mut file = OpenOptions::new()
                .create(true)
                .append(true)
                .open(path)
                .map_err(|e| io_error(path, e))?;
            // one write per line keeps appends from interleaving
            file.write_all(line.as_bytes()).map_err(|e| io_error(path, e))?;
        }
        self.entries.insert(key.to_string(), value);
        Ok(())
    }

    pub fn get_certificate(&self, w: &Word, x: &Word) -> Option<SepCertificate> {
        let cert = SepCertificate::from_json_value(self.get(&pair_key(w, x))?).ok()?;
        let same = |a: &Word, b: &Word| to_digits(a) == to_digits(b);
        ((same(&cert.w, w) && same(&cert.x, x)) || (same(&cert.w, x) && same(&cert.x, w))).then_some(cert)
    }

    pub fn store_certificate(&mut self, cert: &SepCertificate) -> Result<()> {
        self.store(&pair_key(&cert.w, &cert.x), cert.to_json_value())
    }
}

fn parse_line(line: &str) -> Option<(String, Value)> {
    let mut v: Value = serde_json::from_str(line).ok()?;
    if v.get("engine_version")?.as_str()? != ENGINE_VERSION {
        return None;
    }
    let key = v.get("key")?.as_str()?.to_string();
    Some((key, v.get_mut("value")?.take()))
}

fn io_error(path: &Path, e: std::io::Error) -> Error {
    Error::Io(format!("{}: {e}", path.display()))
}
