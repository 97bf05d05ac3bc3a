use chrono::{Duration, NaiveTime};
use serde::{Deserialize, Serialize};

use super::RecordError;
use crate::time::Timestamp;

/// Plausibility band for glucose values, mmol/L, exclusive on both ends.
pub const GLUCOSE_BAND: (f64, f64) = (0.0, 50.0);

/// A dose may be confirmed up to this long before or after its slot; a slot
/// with no confirmation becomes overdue after the same interval.
pub fn dose_grace() -> Duration {
    Duration::hours(6)
}

/// mg/dL → mmol/L for inputs from meters that report mg/dL.
pub fn mgdl_to_mmol(mg_dl: f64) -> f64 {
    mg_dl / 18.0
}

macro_rules! string_enum {
    ($(#[$meta:meta])* $name:ident { $($variant:ident => $text:literal),+ $(,)? }) => {
        $(#[$meta])*
        #[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, ::serde::Serialize, ::serde::Deserialize)]
        #[serde(rename_all = "snake_case")]
        pub enum $name { $($variant),+ }

        impl $name {
            pub const ALL: &'static [$name] = &[$($name::$variant),+];

            pub fn as_str(&self) -> &'static str {
                match self { $($name::$variant => $text),+ }
            }
        }

        impl ::std::fmt::Display for $name {
            fn fmt(&self, f: &mut ::std::fmt::Formatter<'_>) -> ::std::fmt::Result {
                f.write_str(self.as_str())
            }
        }

        impl ::std::str::FromStr for $name {
            type Err = String;

            fn from_str(s: &str) -> Result<Self, Self::Err> {
                match s.trim() {
                    $($text => Ok($name::$variant),)+
                    other => Err(format!(concat!("unknown ", stringify!($name), " {:?}"), other)),
                }
            }
        }
    };
}

pub(crate) use string_enum;

string_enum!(GlucoseContext {
    Fasting => "fasting",
    Postprandial => "postprandial",
    Random => "random",
});

string_enum!(SymptomCode {
    BlurredVision => "blurred_vision",
    Numbness => "numbness",
    Fatigue => "fatigue",
    Thirst => "thirst",
    FrequentUrination => "frequent_urination",
    Other => "other",
});

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GlucoseReading {
    pub patient_id: String,
    pub taken_at: Timestamp,
    /// mmol/L
    pub value: f64,
    pub context: GlucoseContext,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MedicationSchedule {
    pub patient_id: String,
    pub med_name: String,
    pub dose: String,
    pub purpose: String,
    pub times_of_day: Vec<NaiveTime>,
    pub active: bool,
    /// The version applies from this instant until the next version of the
    /// same medication.
    pub effective_from: Timestamp,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "outcome", content = "at", rename_all = "snake_case")]
pub enum DoseOutcome {
    Taken(Timestamp),
    Missed,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MedicationEvent {
    pub patient_id: String,
    pub med_name: String,
    pub scheduled_at: Timestamp,
    pub outcome: DoseOutcome,
}

impl MedicationEvent {
    pub fn is_taken(&self) -> bool {
        matches!(self.outcome, DoseOutcome::Taken(_))
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SymptomEntry {
    pub patient_id: String,
    pub at: Timestamp,
    pub code: SymptomCode,
    pub severity: u8,
    pub note: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SleepEntry {
    pub patient_id: String,
    /// When the entry was made (usually on waking).
    pub at: Timestamp,
    pub hours: f64,
    /// 1 (poor) to 5 (excellent)
    pub quality: u8,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum RecordEntry {
    Glucose(GlucoseReading),
    Schedule(MedicationSchedule),
    Medication(MedicationEvent),
    Symptom(SymptomEntry),
    Sleep(SleepEntry),
}

string_enum!(
    /// Name of the store stream a record lives in.
    StreamKind {
        Glucose => "glucose",
        Schedule => "schedule",
        Medication => "medication",
        Symptom => "symptom",
        Sleep => "sleep",
    }
);

impl RecordEntry {
    pub fn patient_id(&self) -> &str {
        match self {
            RecordEntry::Glucose(r) => &r.patient_id,
            RecordEntry::Schedule(r) => &r.patient_id,
            RecordEntry::Medication(r) => &r.patient_id,
            RecordEntry::Symptom(r) => &r.patient_id,
            RecordEntry::Sleep(r) => &r.patient_id,
        }
    }

    pub fn stream(&self) -> StreamKind {
        match self {
            RecordEntry::Glucose(_) => StreamKind::Glucose,
            RecordEntry::Schedule(_) => StreamKind::Schedule,
            RecordEntry::Medication(_) => StreamKind::Medication,
            RecordEntry::Symptom(_) => StreamKind::Symptom,
            RecordEntry::Sleep(_) => StreamKind::Sleep,
        }
    }

    /// The time the record is about, used for chronological ordering.
    pub fn timestamp(&self) -> Timestamp {
        match self {
            RecordEntry::Glucose(r) => r.taken_at,
            RecordEntry::Schedule(r) => r.effective_from,
            RecordEntry::Medication(r) => r.scheduled_at,
            RecordEntry::Symptom(r) => r.at,
            RecordEntry::Sleep(r) => r.at,
        }
    }

    pub fn validate(&self) -> Result<(), RecordError> {
        if self.patient_id().trim().is_empty() {
            return Err(RecordError::Invalid("patient id is required".into()));
        }
        match self {
            RecordEntry::Glucose(r) => {
                let (lo, hi) = GLUCOSE_BAND;
                if !(r.value > lo && r.value < hi) {
                    return Err(RecordError::Implausible {
                        value: r.value,
                        low: lo,
                        high: hi,
                    });
                }
            }
            RecordEntry::Schedule(s) => {
                if s.med_name.trim().is_empty() {
                    return Err(RecordError::Invalid("medication name is required".into()));
                }
                if s.times_of_day.is_empty() {
                    return Err(RecordError::Invalid("schedule needs at least one time of day".into()));
                }
                if s.times_of_day.windows(2).any(|w| w[0] >= w[1]) {
                    return Err(RecordError::Invalid("schedule times must be strictly increasing".into()));
                }
            }
            RecordEntry::Medication(e) => {
                if let DoseOutcome::Taken(at) = e.outcome {
                    if (at - e.scheduled_at).abs() > dose_grace() {
                        return Err(RecordError::Invalid(
                            "taken time must be within 6 h of the scheduled time".into(),
                        ));
                    }
                }
            }
            RecordEntry::Symptom(s) => {
                if !(1..=5).contains(&s.severity) {
                    return Err(RecordError::Invalid(format!(
                        "symptom severity must be 1..=5, got {}",
                        s.severity
                    )));
                }
            }
            RecordEntry::Sleep(s) => {
                if !(0.0..=24.0).contains(&s.hours) || !(1..=5).contains(&s.quality) {
                    return Err(RecordError::Invalid("sleep hours 0..=24 and quality 1..=5".into()));
                }
            }
        }
        Ok(())
    }
}

/// A record as stored: envelope plus payload.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Stored<T> {
    pub id: String,
    /// Id of an earlier record this one corrects.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub supersedes: Option<String>,
    pub entry: T,
}
