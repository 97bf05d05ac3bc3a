//! Care-mode rules: tracking gaps, hyperglycaemia and missed doses.
//!
//! Detection is a pure function of a [`RecordsView`]; the [`AlertBook`]
//! keeps at most one open alert per (patient, kind) and folds repeated
//! detections into it.

use std::collections::BTreeMap;
use std::sync::Arc;

use chrono::Duration;
use parking_lot::Mutex;
use serde::{Deserialize, Serialize};

use super::model::{dose_grace, string_enum, MedicationSchedule};
use super::schedule::scheduled_slots;
use super::{RecordError, RecordsView};
use crate::store::StoreAdapter;
use crate::time::{Timestamp, Window};

/// How far back missed-dose runs are examined.
pub const MISSED_LOOKBACK_DAYS: i64 = 14;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CareConfig {
    /// Days without any glucose reading before a tracking-gap alert.
    pub gap_days: f64,
    /// mmol/L at or above which a reading in the last 24 h alerts.
    pub high_mmol: f64,
    /// Consecutive overdue slots without a taken dose before alerting.
    pub consecutive_missed: u32,
}

impl Default for CareConfig {
    fn default() -> Self {
        Self {
            gap_days: 3.0,
            high_mmol: 13.9,
            consecutive_missed: 2,
        }
    }
}

impl CareConfig {
    pub fn validate(&self) -> Result<(), RecordError> {
        if !(self.gap_days > 0.0) {
            return Err(RecordError::InvalidConfig("care.gap_days must be > 0".into()));
        }
        if !(self.high_mmol > 0.0) {
            return Err(RecordError::InvalidConfig("care.high_mmol must be > 0".into()));
        }
        if self.consecutive_missed == 0 {
            return Err(RecordError::InvalidConfig("care.consecutive_missed must be > 0".into()));
        }
        Ok(())
    }
}

string_enum!(AlertKind {
    TrackingGap => "tracking_gap",
    Hyperglycemia => "hyperglycemia",
    MissedMedication => "missed_medication",
});

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum EvidenceRef {
    /// A stored record.
    Record { id: String },
    /// A scheduled dose with no event at all.
    MissingDose { med_name: String, scheduled_at: Timestamp },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum AlertStatus {
    Open,
    Resolved,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Alert {
    pub id: String,
    pub patient_id: String,
    pub kind: AlertKind,
    pub detected_at: Timestamp,
    pub evidence: Vec<EvidenceRef>,
    pub delivered_to: Vec<String>,
    pub status: AlertStatus,
}

/// Which rules fire at `now`, with their evidence. Evidence lists are
/// sorted and non-empty.
pub fn detect(
    view: &RecordsView,
    patient_id: &str,
    now: Timestamp,
    config: &CareConfig,
) -> Result<BTreeMap<AlertKind, Vec<EvidenceRef>>, RecordError> {
    config.validate()?;
    let mut found = BTreeMap::new();

    if let Some(latest) = view.latest_glucose_before(patient_id, now)? {
        let gap = now - latest.entry.taken_at;
        if gap.num_milliseconds() as f64 >= config.gap_days * 86_400_000.0 {
            found.insert(AlertKind::TrackingGap, vec![EvidenceRef::Record { id: latest.id }]);
        }
    }

    let day_ago = now - Duration::hours(24);
    let high: Vec<EvidenceRef> = view
        .glucose(patient_id)?
        .into_iter()
        .filter(|r| r.entry.taken_at > day_ago && r.entry.taken_at <= now && r.entry.value >= config.high_mmol)
        .map(|r| EvidenceRef::Record { id: r.id })
        .collect();
    if !high.is_empty() {
        found.insert(AlertKind::Hyperglycemia, high);
    }

    let missed = missed_dose_runs(view, patient_id, now, config.consecutive_missed as usize)?;
    if !missed.is_empty() {
        found.insert(AlertKind::MissedMedication, missed);
    }

    for evidence in found.values_mut() {
        evidence.sort();
    }
    Ok(found)
}

/// For each medication, the run of overdue slots without a taken dose that
/// ends at the most recent overdue slot. Returns the evidence of every run
/// at least `threshold` long.
fn missed_dose_runs(
    view: &RecordsView,
    patient_id: &str,
    now: Timestamp,
    threshold: usize,
) -> Result<Vec<EvidenceRef>, RecordError> {
    let versions: Vec<MedicationSchedule> = view.schedules(patient_id)?.into_iter().map(|s| s.entry).collect();
    if versions.is_empty() {
        return Ok(Vec::new());
    }
    let horizon = Window::new(now - Duration::days(MISSED_LOOKBACK_DAYS), now + Duration::seconds(1));
    let events: BTreeMap<(String, Timestamp), (String, bool)> = view
        .medication_events(patient_id)?
        .into_iter()
        .map(|e| ((e.entry.med_name.clone(), e.entry.scheduled_at), (e.id, e.entry.is_taken())))
        .collect();

    let mut per_med: BTreeMap<String, Vec<Timestamp>> = BTreeMap::new();
    for slot in scheduled_slots(&versions, horizon) {
        if slot.at + dose_grace() <= now {
            per_med.entry(slot.med_name).or_default().push(slot.at);
        }
    }

    let mut evidence = Vec::new();
    for (med, slots) in per_med {
        let mut run = Vec::new();
        for at in slots.iter().rev() {
            match events.get(&(med.clone(), *at)) {
                Some((_, true)) => break,
                Some((id, false)) => run.push(EvidenceRef::Record { id: id.clone() }),
                None => run.push(EvidenceRef::MissingDose {
                    med_name: med.clone(),
                    scheduled_at: *at,
                }),
            }
        }
        if run.len() >= threshold {
            evidence.extend(run);
        }
    }
    Ok(evidence)
}

/// Store-backed book of alerts; one current alert per (patient, kind).
#[derive(Debug, Clone)]
pub struct AlertBook {
    store: Arc<dyn StoreAdapter>,
    writes: Arc<Mutex<()>>,
}

impl AlertBook {
    pub fn new(store: Arc<dyn StoreAdapter>) -> Self {
        Self {
            store,
            writes: Arc::new(Mutex::new(())),
        }
    }

    fn key(patient_id: &str, kind: AlertKind) -> String {
        format!("alerts/{patient_id}/{kind}")
    }

    fn load(&self, key: &str) -> Result<Option<Alert>, RecordError> {
        self.store
            .get(key)
            .map(|doc| serde_json::from_str(&doc))
            .transpose()
            .map_err(Into::into)
    }

    fn save(&self, alert: &Alert) -> Result<(), RecordError> {
        self.store
            .put(&Self::key(&alert.patient_id, alert.kind), &serde_json::to_string(alert)?)?;
        Ok(())
    }

    fn next_id(&self) -> Result<String, RecordError> {
        let n: u64 = self
            .store
            .get("alerts/_counter")
            .and_then(|v| v.parse().ok())
            .unwrap_or(0)
            + 1;
        self.store.put("alerts/_counter", &n.to_string())?;
        Ok(format!("alert-{n}"))
    }

    /// Open a new alert or extend the open one's evidence.
    pub fn raise(
        &self,
        patient_id: &str,
        kind: AlertKind,
        now: Timestamp,
        evidence: Vec<EvidenceRef>,
    ) -> Result<Alert, RecordError> {
        let _guard = self.writes.lock();
        let key = Self::key(patient_id, kind);
        let alert = match self.load(&key)? {
            Some(mut open) if open.status == AlertStatus::Open => {
                let before = open.evidence.len();
                for e in evidence {
                    if !open.evidence.contains(&e) {
                        open.evidence.push(e);
                    }
                }
                if open.evidence.len() == before {
                    return Ok(open);
                }
                open.evidence.sort();
                open
            }
            _ => Alert {
                id: self.next_id()?,
                patient_id: patient_id.to_owned(),
                kind,
                detected_at: now,
                evidence,
                delivered_to: Vec::new(),
                status: AlertStatus::Open,
            },
        };
        self.save(&alert)?;
        Ok(alert)
    }

    pub fn open_alerts(&self, patient_id: &str) -> Result<Vec<Alert>, RecordError> {
        open_alerts_with(patient_id, |key| self.store.get(key))
    }

    pub fn find(&self, patient_id: &str, alert_id: &str) -> Result<Option<Alert>, RecordError> {
        Ok(self.open_alerts(patient_id)?.into_iter().find(|a| a.id == alert_id))
    }

    pub fn resolve(&self, patient_id: &str, kind: AlertKind) -> Result<Option<Alert>, RecordError> {
        let _guard = self.writes.lock();
        let Some(mut alert) = self.load(&Self::key(patient_id, kind))? else {
            return Ok(None);
        };
        alert.status = AlertStatus::Resolved;
        self.save(&alert)?;
        Ok(Some(alert))
    }

    pub fn record_delivery(&self, alert: &Alert, recipients: &[String]) -> Result<Alert, RecordError> {
        let _guard = self.writes.lock();
        let mut current = self
            .load(&Self::key(&alert.patient_id, alert.kind))?
            .filter(|a| a.id == alert.id)
            .unwrap_or_else(|| alert.clone());
        for r in recipients {
            if !current.delivered_to.contains(r) {
                current.delivered_to.push(r.clone());
            }
        }
        self.save(&current)?;
        Ok(current)
    }
}

fn open_alerts_with(patient_id: &str, get: impl Fn(&str) -> Option<String>) -> Result<Vec<Alert>, RecordError> {
    let mut out = Vec::new();
    for kind in AlertKind::ALL {
        if let Some(doc) = get(&AlertBook::key(patient_id, *kind)) {
            let a: Alert = serde_json::from_str(&doc)?;
            if a.status == AlertStatus::Open {
                out.push(a);
            }
        }
    }
    Ok(out)
}

impl RecordsView {
    /// Open alerts as of the view's snapshot.
    pub fn open_alerts(&self, patient_id: &str) -> Result<Vec<Alert>, RecordError> {
        open_alerts_with(patient_id, |key| self.get(key))
    }
}

/// Run the rules and fold the results into `book`. Returns the open alert
/// of every kind that fired.
pub fn evaluate_care_rules(
    view: &RecordsView,
    book: &AlertBook,
    patient_id: &str,
    now: Timestamp,
    config: &CareConfig,
) -> Result<Vec<Alert>, RecordError> {
    detect(view, patient_id, now, config)?
        .into_iter()
        .map(|(kind, evidence)| book.raise(patient_id, kind, now, evidence))
        .collect()
}
