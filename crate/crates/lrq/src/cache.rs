//! Persistent coefficient cache and the in-process memo.
//!
//! The cache file holds one JSON record per line. It is only ever appended
//! to; on load a later record for the same key replaces an earlier one, and
//! lines that fail to parse or validate are skipped and counted.

use std::collections::HashMap;
use std::fs::{File, OpenOptions};
use std::io::{BufRead, BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::{Mutex, RwLock};

use lrq_core::lr::{compute_record, CoeffKey, CoeffRecord, Method};
use lrq_core::LaurentPoly;

use crate::error::CliError;
use crate::json;

/// Environment variable naming the default cache file.
pub const CACHE_ENV: &str = "LRQ_CACHE";

#[derive(Debug, Default)]
pub struct Loaded {
    pub records: HashMap<CoeffKey, CoeffRecord>,
    pub skipped: usize,
}

/// Reads a cache file. A missing file is an empty cache.
pub fn load(path: &Path) -> Result<Loaded, CliError> {
    let file = match File::open(path) {
        Ok(f) => f,
        Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(Loaded::default()),
        Err(e) => return Err(CliError::io(path, e)),
    };
    let mut loaded = Loaded::default();
    for line in BufReader::new(file).lines() {
        let line = line.map_err(|e| CliError::io(path, e))?;
        if line.trim().is_empty() {
            continue;
        }
        match json::parse(&line) {
            Ok(r) => {
                loaded.records.insert(r.key.clone(), r);
            }
            Err(_) => loaded.skipped += 1,
        }
    }
    Ok(loaded)
}

/// Appends records to a cache file through a single locked writer.
pub struct Appender {
    path: PathBuf,
    out: Mutex<BufWriter<File>>,
}

impl Appender {
    pub fn open(path: &Path) -> Result<Self, CliError> {
        let file = OpenOptions::new().create(true).append(true).open(path).map_err(|e| CliError::io(path, e))?;
        Ok(Appender { path: path.to_path_buf(), out: Mutex::new(BufWriter::new(file)) })
    }

    pub fn append(&self, record: &CoeffRecord) -> Result<(), CliError> {
        let mut out = self.out.lock().expect("writer lock poisoned");
        writeln!(out, "{}", json::render(record)).map_err(|e| CliError::io(&self.path, e))
    }

    pub fn flush(&self) -> Result<(), CliError> {
        self.out.lock().expect("writer lock poisoned").flush().map_err(|e| CliError::io(&self.path, e))
    }
}

/// Thread-safe memo of computed records. Racing threads may compute the
/// same key twice; both produce the same value and either insert wins.
#[derive(Default)]
pub struct Memo {
    records: RwLock<HashMap<CoeffKey, CoeffRecord>>,
    computed: AtomicUsize,
}

impl Memo {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn seeded(records: HashMap<CoeffKey, CoeffRecord>) -> Self {
        Memo { records: RwLock::new(records), computed: AtomicUsize::new(0) }
    }

    /// Number of records computed rather than found.
    pub fn computed(&self) -> usize {
        self.computed.load(Ordering::Relaxed)
    }

    pub fn len(&self) -> usize {
        self.records.read().expect("memo lock poisoned").len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Returns the memoized record for `key` or computes it with `method`.
    /// The flag says whether it was computed now.
    pub fn get_or_compute(
        &self,
        key: &CoeffKey,
        method: Method,
    ) -> Result<(CoeffRecord, bool), (LaurentPoly, LaurentPoly)> {
        if let Some(r) = self.records.read().expect("memo lock poisoned").get(key) {
            return Ok((r.clone(), false));
        }
        let record = compute_record(key, method)?;
        self.computed.fetch_add(1, Ordering::Relaxed);
        self.records.write().expect("memo lock poisoned").insert(key.clone(), record.clone());
        Ok((record, true))
    }
}
