//! Keyed-record storage contract with point-in-time snapshots.
//!
//! Two operation families share one global, monotone sequence number:
//!
//! - `put`/`get`: versioned key/value documents (latest version wins);
//! - `append`/`scan`: append-only streams.
//!
//! A [`Snapshot`] is the sequence watermark at the time it was taken; reads
//! through it ignore every later write.
//!
//! [`FileStore`] keeps the same in-memory state as [`MemoryStore`] and also
//! writes every operation to an append-only JSON-lines log, replayed on open.

use std::collections::BTreeMap;
use std::fmt;
use std::fs::{File, OpenOptions};
use std::io::{BufRead, BufReader, Write};
use std::path::{Path, PathBuf};

use parking_lot::{Mutex, RwLock};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum StoreError {
    #[error("store i/o: {0}")]
    Io(#[from] std::io::Error),
    #[error("corrupt store log at line {line}: {message}")]
    Corrupt { line: usize, message: String },
    #[error("encoding: {0}")]
    Encoding(#[from] serde_json::Error),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Snapshot(pub u64);

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StreamEntry {
    pub seq: u64,
    pub value: String,
}

pub trait StoreAdapter: Send + Sync + fmt::Debug {
    /// Write a new version of `key`; returns its sequence number.
    fn put(&self, key: &str, value: &str) -> Result<u64, StoreError>;
    /// Append to `stream`; returns the entry's sequence number.
    fn append(&self, stream: &str, value: &str) -> Result<u64, StoreError>;
    fn snapshot(&self) -> Snapshot;
    fn get_at(&self, key: &str, at: Snapshot) -> Option<String>;
    fn scan_at(&self, stream: &str, at: Snapshot) -> Vec<StreamEntry>;
    /// Keys with the given prefix that have a version visible at `at`.
    fn keys_at(&self, prefix: &str, at: Snapshot) -> Vec<String>;

    fn get(&self, key: &str) -> Option<String> {
        self.get_at(key, self.snapshot())
    }

    fn scan(&self, stream: &str) -> Vec<StreamEntry> {
        self.scan_at(stream, self.snapshot())
    }
}

#[derive(Debug, Default)]
struct State {
    seq: u64,
    kv: BTreeMap<String, Vec<(u64, String)>>,
    streams: BTreeMap<String, Vec<StreamEntry>>,
}

impl State {
    fn put(&mut self, key: &str, value: &str) -> u64 {
        self.seq += 1;
        self.kv
            .entry(key.to_owned())
            .or_default()
            .push((self.seq, value.to_owned()));
        self.seq
    }

    fn append(&mut self, stream: &str, value: &str) -> u64 {
        self.seq += 1;
        self.streams.entry(stream.to_owned()).or_default().push(StreamEntry {
            seq: self.seq,
            value: value.to_owned(),
        });
        self.seq
    }

    fn get_at(&self, key: &str, at: Snapshot) -> Option<String> {
        self.kv
            .get(key)?
            .iter()
            .rev()
            .find(|(seq, _)| *seq <= at.0)
            .map(|(_, v)| v.clone())
    }

    fn scan_at(&self, stream: &str, at: Snapshot) -> Vec<StreamEntry> {
        self.streams
            .get(stream)
            .map(|entries| entries.iter().take_while(|e| e.seq <= at.0).cloned().collect())
            .unwrap_or_default()
    }

    fn keys_at(&self, prefix: &str, at: Snapshot) -> Vec<String> {
        self.kv
            .range(prefix.to_owned()..)
            .take_while(|(k, _)| k.starts_with(prefix))
            .filter(|(_, versions)| versions.first().is_some_and(|(seq, _)| *seq <= at.0))
            .map(|(k, _)| k.clone())
            .collect()
    }
}

#[derive(Debug, Default)]
pub struct MemoryStore {
    state: RwLock<State>,
}

impl MemoryStore {
    pub fn new() -> Self {
        Self::default()
    }
}

impl StoreAdapter for MemoryStore {
    fn put(&self, key: &str, value: &str) -> Result<u64, StoreError> {
        Ok(self.state.write().put(key, value))
    }

    fn append(&self, stream: &str, value: &str) -> Result<u64, StoreError> {
        Ok(self.state.write().append(stream, value))
    }

    fn snapshot(&self) -> Snapshot {
        Snapshot(self.state.read().seq)
    }

    fn get_at(&self, key: &str, at: Snapshot) -> Option<String> {
        self.state.read().get_at(key, at)
    }

    fn scan_at(&self, stream: &str, at: Snapshot) -> Vec<StreamEntry> {
        self.state.read().scan_at(stream, at)
    }

    fn keys_at(&self, prefix: &str, at: Snapshot) -> Vec<String> {
        self.state.read().keys_at(prefix, at)
    }
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(tag = "op", rename_all = "snake_case")]
enum LogRecord {
    Put { key: String, value: String },
    Append { stream: String, value: String },
}

/// Append-log backed store.
#[derive(Debug)]
pub struct FileStore {
    path: PathBuf,
    state: RwLock<State>,
    log: Mutex<File>,
}

impl FileStore {
    /// Open (creating if needed) and replay the log at `path`.
    pub fn open(path: impl AsRef<Path>) -> Result<Self, StoreError> {
        let path = path.as_ref().to_path_buf();
        let mut state = State::default();
        if path.exists() {
            let reader = BufReader::new(File::open(&path)?);
            for (i, line) in reader.lines().enumerate() {
                let line = line?;
                if line.trim().is_empty() {
                    continue;
                }
                let record: LogRecord = serde_json::from_str(&line).map_err(|e| StoreError::Corrupt {
                    line: i + 1,
                    message: e.to_string(),
                })?;
                match record {
                    LogRecord::Put { key, value } => state.put(&key, &value),
                    LogRecord::Append { stream, value } => state.append(&stream, &value),
                };
            }
        }
        let log = OpenOptions::new().create(true).append(true).open(&path)?;
        Ok(Self {
            path,
            state: RwLock::new(state),
            log: Mutex::new(log),
        })
    }

    pub fn path(&self) -> &Path {
        &self.path
    }

    fn write_log(&self, record: &LogRecord) -> Result<(), StoreError> {
        let mut line = serde_json::to_string(record)?;
        line.push('\n');
        let mut log = self.log.lock();
        log.write_all(line.as_bytes())?;
        log.flush()?;
        Ok(())
    }
}

impl StoreAdapter for FileStore {
    fn put(&self, key: &str, value: &str) -> Result<u64, StoreError> {
        // hold the state lock across the log write so log order == seq order
        let mut state = self.state.write();
        self.write_log(&LogRecord::Put {
            key: key.to_owned(),
            value: value.to_owned(),
        })?;
        Ok(state.put(key, value))
    }

    fn append(&self, stream: &str, value: &str) -> Result<u64, StoreError> {
        let mut state = self.state.write();
        self.write_log(&LogRecord::Append {
            stream: stream.to_owned(),
            value: value.to_owned(),
        })?;
        Ok(state.append(stream, value))
    }

    fn snapshot(&self) -> Snapshot {
        Snapshot(self.state.read().seq)
    }

    fn get_at(&self, key: &str, at: Snapshot) -> Option<String> {
        self.state.read().get_at(key, at)
    }

    fn scan_at(&self, stream: &str, at: Snapshot) -> Vec<StreamEntry> {
        self.state.read().scan_at(stream, at)
    }

    fn keys_at(&self, prefix: &str, at: Snapshot) -> Vec<String> {
        self.state.read().keys_at(prefix, at)
    }
}
