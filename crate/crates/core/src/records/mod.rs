//! Append-only health records, dose scheduling and care-mode rules.
//!
//! Every record type lives in its own per-patient stream
//! (`<kind>/<patient>`). Nothing is ever overwritten: a correction is a new
//! record whose `supersedes` names the old one, and reads hide superseded
//! records. Reads go through a [`RecordsView`], which pins a store snapshot
//! so one evaluation never mixes two points in time.

use std::collections::HashSet;
use std::sync::Arc;

use chrono::NaiveTime;
use parking_lot::Mutex;
use serde::{Deserialize, Serialize};
use thiserror::Error;

pub mod care;
pub mod model;
pub mod schedule;

pub use care::{evaluate_care_rules, Alert, AlertBook, AlertKind, AlertStatus, CareConfig, EvidenceRef};
pub use model::*;
pub use schedule::{
    adherence, due_prompts, due_reminders, scheduled_slots, DoseSlot, Notification, Prompt,
    PromptKind, Reminder, ReminderScheduler, ScheduleConfig,
};

use crate::store::{Snapshot, StoreAdapter, StoreError};
use crate::time::{Timestamp, Window};

#[derive(Debug, Error)]
pub enum RecordError {
    #[error("glucose value {value} mmol/L is outside the plausible band ({low}, {high})")]
    Implausible { value: f64, low: f64, high: f64 },
    #[error("invalid record: {0}")]
    Invalid(String),
    #[error("a medication event for {med} at {at} already exists")]
    DuplicateEvent { med: String, at: String },
    #[error("record {0:?} to supersede was not found")]
    UnknownRecord(String),
    #[error("invalid care config: {0}")]
    InvalidConfig(String),
    #[error(transparent)]
    Store(#[from] StoreError),
    #[error("stored record could not be decoded: {0}")]
    Decode(#[from] serde_json::Error),
}

#[derive(Debug, Serialize, Deserialize)]
struct Envelope {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    supersedes: Option<String>,
    entry: RecordEntry,
}

fn stream_key(kind: StreamKind, patient_id: &str) -> String {
    format!("{kind}/{patient_id}")
}

fn record_id(kind: StreamKind, seq: u64) -> String {
    format!("{kind}-{seq}")
}

/// Default patient-local mealtimes.
pub fn default_meals() -> Vec<NaiveTime> {
    ["07:30", "12:00", "18:30"]
        .iter()
        .map(|t| NaiveTime::parse_from_str(t, "%H:%M").expect("static time"))
        .collect()
}

#[derive(Debug, Clone)]
pub struct HealthRecords {
    store: Arc<dyn StoreAdapter>,
    writes: Arc<Mutex<()>>,
}

impl HealthRecords {
    pub fn new(store: Arc<dyn StoreAdapter>) -> Self {
        Self {
            store,
            writes: Arc::new(Mutex::new(())),
        }
    }

    pub fn store(&self) -> &Arc<dyn StoreAdapter> {
        &self.store
    }

    pub fn record(&self, entry: RecordEntry) -> Result<String, RecordError> {
        self.write(entry, None)
    }

    /// Store `entry` as a correction of the record `supersedes`.
    pub fn correct(&self, entry: RecordEntry, supersedes: &str) -> Result<String, RecordError> {
        self.write(entry, Some(supersedes.to_owned()))
    }

    fn write(&self, entry: RecordEntry, supersedes: Option<String>) -> Result<String, RecordError> {
        entry.validate()?;
        let kind = entry.stream();
        let _guard = self.writes.lock();
        let view = self.view();
        if let Some(old) = &supersedes {
            let exists = view
                .raw(kind, entry.patient_id())?
                .iter()
                .any(|(id, _, _)| id == old);
            if !exists {
                return Err(RecordError::UnknownRecord(old.clone()));
            }
        }
        if let RecordEntry::Medication(ev) = &entry {
            let clash = view.medication_events(&ev.patient_id)?.into_iter().any(|s| {
                s.entry.med_name == ev.med_name
                    && s.entry.scheduled_at == ev.scheduled_at
                    && supersedes.as_deref() != Some(s.id.as_str())
            });
            if clash {
                return Err(RecordError::DuplicateEvent {
                    med: ev.med_name.clone(),
                    at: crate::time::format_timestamp(&ev.scheduled_at),
                });
            }
        }
        let key = stream_key(kind, entry.patient_id());
        let doc = serde_json::to_string(&Envelope { supersedes, entry })?;
        let seq = self.store.append(&key, &doc)?;
        Ok(record_id(kind, seq))
    }

    pub fn set_meal_times(&self, patient_id: &str, meals: &[NaiveTime]) -> Result<(), RecordError> {
        let mut sorted = meals.to_vec();
        sorted.sort();
        let text: Vec<String> = sorted.iter().map(|t| t.format("%H:%M").to_string()).collect();
        self.store
            .put(&format!("meals/{patient_id}"), &serde_json::to_string(&text)?)?;
        Ok(())
    }

    /// A read view pinned to the current snapshot.
    pub fn view(&self) -> RecordsView {
        RecordsView {
            store: self.store.clone(),
            at: self.store.snapshot(),
        }
    }
}

#[derive(Debug, Clone)]
pub struct RecordsView {
    store: Arc<dyn StoreAdapter>,
    at: Snapshot,
}

impl RecordsView {
    pub fn snapshot(&self) -> Snapshot {
        self.at
    }

    /// Raw stream read at the pinned snapshot.
    pub fn scan(&self, stream: &str) -> Vec<crate::store::StreamEntry> {
        self.store.scan_at(stream, self.at)
    }

    /// Raw key read at the pinned snapshot.
    pub fn get(&self, key: &str) -> Option<String> {
        self.store.get_at(key, self.at)
    }

    fn raw(&self, kind: StreamKind, patient_id: &str) -> Result<Vec<(String, Option<String>, RecordEntry)>, RecordError> {
        self.store
            .scan_at(&stream_key(kind, patient_id), self.at)
            .into_iter()
            .map(|e| {
                let env: Envelope = serde_json::from_str(&e.value)?;
                Ok((record_id(kind, e.seq), env.supersedes, env.entry))
            })
            .collect()
    }

    /// Live (not superseded) records of one stream, sorted by their
    /// timestamp then arrival.
    pub fn entries(&self, kind: StreamKind, patient_id: &str) -> Result<Vec<Stored<RecordEntry>>, RecordError> {
        let raw = self.raw(kind, patient_id)?;
        let superseded: HashSet<&str> = raw.iter().filter_map(|(_, s, _)| s.as_deref()).collect();
        let mut live: Vec<Stored<RecordEntry>> = raw
            .iter()
            .filter(|(id, _, _)| !superseded.contains(id.as_str()))
            .map(|(id, sup, entry)| Stored {
                id: id.clone(),
                supersedes: sup.clone(),
                entry: entry.clone(),
            })
            .collect();
        // stable: equal timestamps keep arrival order
        live.sort_by_key(|s| s.entry.timestamp());
        Ok(live)
    }

    fn typed<T>(&self, kind: StreamKind, patient_id: &str, pick: fn(RecordEntry) -> Option<T>) -> Result<Vec<Stored<T>>, RecordError> {
        Ok(self
            .entries(kind, patient_id)?
            .into_iter()
            .filter_map(|s| {
                pick(s.entry).map(|entry| Stored {
                    id: s.id,
                    supersedes: s.supersedes,
                    entry,
                })
            })
            .collect())
    }

    pub fn glucose(&self, patient_id: &str) -> Result<Vec<Stored<GlucoseReading>>, RecordError> {
        self.typed(StreamKind::Glucose, patient_id, |e| match e {
            RecordEntry::Glucose(r) => Some(r),
            _ => None,
        })
    }

    /// Readings with `taken_at` inside `window`, time-sorted.
    pub fn glucose_series(&self, patient_id: &str, window: Window) -> Result<Vec<Stored<GlucoseReading>>, RecordError> {
        let mut all = self.glucose(patient_id)?;
        all.retain(|r| window.contains(&r.entry.taken_at));
        Ok(all)
    }

    pub fn schedules(&self, patient_id: &str) -> Result<Vec<Stored<MedicationSchedule>>, RecordError> {
        self.typed(StreamKind::Schedule, patient_id, |e| match e {
            RecordEntry::Schedule(r) => Some(r),
            _ => None,
        })
    }

    pub fn medication_events(&self, patient_id: &str) -> Result<Vec<Stored<MedicationEvent>>, RecordError> {
        self.typed(StreamKind::Medication, patient_id, |e| match e {
            RecordEntry::Medication(r) => Some(r),
            _ => None,
        })
    }

    pub fn symptoms(&self, patient_id: &str) -> Result<Vec<Stored<SymptomEntry>>, RecordError> {
        self.typed(StreamKind::Symptom, patient_id, |e| match e {
            RecordEntry::Symptom(r) => Some(r),
            _ => None,
        })
    }

    pub fn sleep(&self, patient_id: &str) -> Result<Vec<Stored<SleepEntry>>, RecordError> {
        self.typed(StreamKind::Sleep, patient_id, |e| match e {
            RecordEntry::Sleep(r) => Some(r),
            _ => None,
        })
    }

    pub fn meal_times(&self, patient_id: &str) -> Result<Vec<NaiveTime>, RecordError> {
        match self.store.get_at(&format!("meals/{patient_id}"), self.at) {
            None => Ok(default_meals()),
            Some(doc) => {
                let text: Vec<String> = serde_json::from_str(&doc)?;
                text.iter()
                    .map(|t| {
                        crate::time::parse_clock(t)
                            .map_err(|e| RecordError::Invalid(format!("stored meal time {t:?}: {e}")))
                    })
                    .collect()
            }
        }
    }

    /// Every live record of every stream for one patient.
    pub fn all_entries(&self, patient_id: &str) -> Result<Vec<Stored<RecordEntry>>, RecordError> {
        let mut out = Vec::new();
        for kind in StreamKind::ALL {
            out.extend(self.entries(*kind, patient_id)?);
        }
        Ok(out)
    }

    pub(crate) fn latest_glucose_before(&self, patient_id: &str, now: Timestamp) -> Result<Option<Stored<GlucoseReading>>, RecordError> {
        Ok(self
            .glucose(patient_id)?
            .into_iter()
            .filter(|r| r.entry.taken_at <= now)
            .next_back())
    }
}
