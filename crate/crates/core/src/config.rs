//! Service configuration: a flat `key = value` file with environment
//! overrides.
//!
//! Lines starting with `#` and blank lines are ignored. Every key must be
//! known; an unknown key is an error naming it. An environment variable
//! `T2MD_<KEY>` overrides the file, where `<KEY>` is the key uppercased with
//! `.` replaced by `__` (so `store.path` is `T2MD_STORE__PATH`).

use std::path::{Path, PathBuf};
use std::time::Duration;

use thiserror::Error;

use crate::dialogue::QaConfig;
use crate::records::CareConfig;

pub const ENV_PREFIX: &str = "T2MD_";

#[derive(Debug, Error, PartialEq)]
pub enum ConfigError {
    #[error("unknown config key `{0}`")]
    UnknownKey(String),
    #[error("invalid value {value:?} for `{key}`: {reason}")]
    InvalidValue { key: String, value: String, reason: String },
    #[error("line {0}: expected `key = value`")]
    Syntax(usize),
    #[error("cannot read config {path}: {message}")]
    Io { path: String, message: String },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StoreKind {
    Memory,
    File,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ServiceConfig {
    pub listen: String,
    pub store: StoreKind,
    pub store_path: PathBuf,
    /// Graph document to load; the bundled fixture graph when absent.
    pub graph_path: Option<PathBuf>,
    /// Question bank to load; the bundled bank when absent.
    pub question_bank_path: Option<PathBuf>,
    /// Principal list, `U id role password` and `A patient physician` lines.
    pub users_path: Option<PathBuf>,
    pub auth_secret: String,
    pub token_ttl: Duration,
    pub care: CareConfig,
    pub qa: QaConfig,
    pub feedback_threshold: usize,
    pub reminder_lead: Duration,
}

impl Default for ServiceConfig {
    fn default() -> Self {
        Self {
            listen: "127.0.0.1:8080".into(),
            store: StoreKind::Memory,
            store_path: PathBuf::from("t2md-store.jsonl"),
            graph_path: None,
            question_bank_path: None,
            users_path: None,
            auth_secret: "change-me".into(),
            token_ttl: Duration::from_secs(3600),
            care: CareConfig::default(),
            qa: QaConfig::default(),
            feedback_threshold: crate::reporting::DEFAULT_THRESHOLD,
            reminder_lead: Duration::from_secs(15 * 60),
        }
    }
}

pub const KEYS: &[&str] = &[
    "listen",
    "store",
    "store.path",
    "graph.path",
    "question_bank.path",
    "users.path",
    "auth.secret",
    "auth.token_ttl_secs",
    "care.gap_days",
    "care.high_mmol",
    "care.consecutive_missed",
    "qa.min_score",
    "qa.k",
    "qa.rrf_k",
    "qa.generator_timeout_ms",
    "feedback.threshold",
    "reminders.lead_minutes",
];

fn parse<T: std::str::FromStr>(key: &str, value: &str) -> Result<T, ConfigError>
where
    T::Err: std::fmt::Display,
{
    value.parse().map_err(|e: T::Err| ConfigError::InvalidValue {
        key: key.into(),
        value: value.into(),
        reason: e.to_string(),
    })
}

fn path(value: &str) -> Option<PathBuf> {
    (!value.is_empty()).then(|| PathBuf::from(value))
}

impl ServiceConfig {
    pub fn set(&mut self, key: &str, value: &str) -> Result<(), ConfigError> {
        let value = value.trim();
        match key {
            "listen" => self.listen = value.into(),
            "store" => {
                self.store = match value {
                    "memory" => StoreKind::Memory,
                    "file" => StoreKind::File,
                    _ => {
                        return Err(ConfigError::InvalidValue {
                            key: key.into(),
                            value: value.into(),
                            reason: "expected memory or file".into(),
                        })
                    }
                }
            }
            "store.path" => self.store_path = value.into(),
            "graph.path" => self.graph_path = path(value),
            "question_bank.path" => self.question_bank_path = path(value),
            "users.path" => self.users_path = path(value),
            "auth.secret" => self.auth_secret = value.into(),
            "auth.token_ttl_secs" => self.token_ttl = Duration::from_secs(parse(key, value)?),
            "care.gap_days" => self.care.gap_days = parse(key, value)?,
            "care.high_mmol" => self.care.high_mmol = parse(key, value)?,
            "care.consecutive_missed" => self.care.consecutive_missed = parse(key, value)?,
            "qa.min_score" => self.qa.min_score = parse(key, value)?,
            "qa.k" => self.qa.k = parse(key, value)?,
            "qa.rrf_k" => self.qa.rrf_k = parse(key, value)?,
            "qa.generator_timeout_ms" => self.qa.generator_timeout = Duration::from_millis(parse(key, value)?),
            "feedback.threshold" => self.feedback_threshold = parse(key, value)?,
            "reminders.lead_minutes" => self.reminder_lead = Duration::from_secs(60 * parse::<u64>(key, value)?),
            _ => return Err(ConfigError::UnknownKey(key.into())),
        }
        Ok(())
    }

    pub fn parse(text: &str) -> Result<Self, ConfigError> {
        let mut cfg = Self::default();
        for (i, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (k, v) = line.split_once('=').ok_or(ConfigError::Syntax(i + 1))?;
            cfg.set(k.trim(), v)?;
        }
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn load(path: &Path) -> Result<Self, ConfigError> {
        let text = std::fs::read_to_string(path).map_err(|e| ConfigError::Io {
            path: path.display().to_string(),
            message: e.to_string(),
        })?;
        Self::parse(&text)
    }

    /// Apply `T2MD_*` variables. Unrecognised names under the prefix are
    /// unknown keys.
    pub fn apply_env<I, K, V>(&mut self, vars: I) -> Result<(), ConfigError>
    where
        I: IntoIterator<Item = (K, V)>,
        K: AsRef<str>,
        V: AsRef<str>,
    {
        for (name, value) in vars {
            let Some(rest) = name.as_ref().strip_prefix(ENV_PREFIX) else {
                continue;
            };
            let key = rest.replace("__", ".").to_lowercase();
            self.set(&key, value.as_ref())?;
        }
        self.validate()
    }

    pub fn validate(&self) -> Result<(), ConfigError> {
        let invalid = |key: &str, value: String, reason: &str| ConfigError::InvalidValue {
            key: key.into(),
            value,
            reason: reason.into(),
        };
        self.care
            .validate()
            .map_err(|e| invalid("care", format!("{:?}", self.care), &e.to_string()))?;
        if !(self.qa.min_score >= 0.0) {
            return Err(invalid("qa.min_score", self.qa.min_score.to_string(), "must be non-negative"));
        }
        if self.qa.k == 0 {
            return Err(invalid("qa.k", "0".into(), "must be positive"));
        }
        if !(self.qa.rrf_k > 0.0) {
            return Err(invalid("qa.rrf_k", self.qa.rrf_k.to_string(), "must be positive"));
        }
        if self.auth_secret.is_empty() {
            return Err(invalid("auth.secret", String::new(), "must not be empty"));
        }
        if self.token_ttl.is_zero() {
            return Err(invalid("auth.token_ttl_secs", "0".into(), "must be positive"));
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn defaults_parse_from_empty() {
        assert_eq!(ServiceConfig::parse("# nothing\n\n").unwrap(), ServiceConfig::default());
    }

    #[test]
    fn unknown_key_is_named() {
        let err = ServiceConfig::parse("listen = 0.0.0.0:1\nstroe = memory\n").unwrap_err();
        assert_eq!(err, ConfigError::UnknownKey("stroe".into()));
        assert!(err.to_string().contains("stroe"));
    }

    #[test]
    fn values_and_env() {
        let mut cfg = ServiceConfig::parse("care.gap_days = 5\nstore = file\nqa.k=3").unwrap();
        assert_eq!(cfg.care.gap_days, 5.0);
        assert_eq!(cfg.store, StoreKind::File);
        assert_eq!(cfg.qa.k, 3);
        cfg.apply_env([("T2MD_STORE__PATH", "/tmp/x.jsonl"), ("HOME", "/root"), ("T2MD_CARE__HIGH_MMOL", "15")])
            .unwrap();
        assert_eq!(cfg.store_path, PathBuf::from("/tmp/x.jsonl"));
        assert_eq!(cfg.care.high_mmol, 15.0);
        assert_eq!(
            cfg.apply_env([("T2MD_NOPE", "1")]).unwrap_err(),
            ConfigError::UnknownKey("nope".into())
        );
    }

    #[test]
    fn bad_values() {
        assert!(matches!(ServiceConfig::parse("qa.k = many"), Err(ConfigError::InvalidValue { .. })));
        assert!(matches!(ServiceConfig::parse("care.gap_days = -1"), Err(ConfigError::InvalidValue { .. })));
        assert_eq!(ServiceConfig::parse("listen"), Err(ConfigError::Syntax(1)));
        assert!(KEYS.iter().all(|k| ServiceConfig::default().set(k, "1").map_or_else(
            |e| !matches!(e, ConfigError::UnknownKey(_)),
            |_| true
        )));
    }
}
