//! Chronological and thematic views of a patient's record.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::history::DialogueHistory;
use super::ReportError;
use crate::records::{DoseOutcome, RecordEntry, RecordsView};
use crate::time::{Timestamp, Window};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Theme {
    Glucose,
    Medication,
    Symptoms,
    Knowledge,
    Mood,
}

impl Theme {
    pub const ALL: [Theme; 5] = [Theme::Glucose, Theme::Medication, Theme::Symptoms, Theme::Knowledge, Theme::Mood];

    /// The theme each source stream belongs to.
    pub fn of_source(source: &str) -> Theme {
        match source {
            "glucose" => Theme::Glucose,
            "schedule" | "medication" => Theme::Medication,
            "symptom" => Theme::Symptoms,
            "session" | "assessment" => Theme::Knowledge,
            _ => Theme::Mood,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TimelineEvent {
    pub at: Timestamp,
    /// Stream the event came from.
    pub source: String,
    pub id: String,
    pub summary: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrganizedRecord {
    pub chronological: Vec<TimelineEvent>,
    /// All five themes, possibly empty.
    pub thematic: BTreeMap<Theme, Vec<TimelineEvent>>,
}

fn describe(entry: &RecordEntry) -> String {
    match entry {
        RecordEntry::Glucose(g) => format!("{:.1} mmol/L ({})", g.value, g.context),
        RecordEntry::Schedule(s) => {
            let times: Vec<String> = s.times_of_day.iter().map(|t| t.format("%H:%M").to_string()).collect();
            format!(
                "{} {} at {}{}",
                s.med_name,
                s.dose,
                times.join(", "),
                if s.active { "" } else { " (stopped)" }
            )
        }
        RecordEntry::Medication(m) => match m.outcome {
            DoseOutcome::Taken(at) => format!("{} taken at {}", m.med_name, at.format("%H:%M")),
            DoseOutcome::Missed => format!("{} missed", m.med_name),
        },
        RecordEntry::Symptom(s) => {
            if s.note.is_empty() {
                format!("{} (severity {})", s.code, s.severity)
            } else {
                format!("{} (severity {}): {}", s.code, s.severity, s.note)
            }
        }
        RecordEntry::Sleep(s) => format!("slept {:.1} h, quality {}", s.hours, s.quality),
    }
}

pub fn organize_record(
    patient_id: &str,
    horizon: Window,
    view: &RecordsView,
    history: &DialogueHistory,
) -> Result<OrganizedRecord, ReportError> {
    let mut events = Vec::new();
    for s in view.all_entries(patient_id)? {
        let at = s.entry.timestamp();
        if horizon.contains(&at) {
            events.push(TimelineEvent {
                at,
                source: s.entry.stream().to_string(),
                id: s.id,
                summary: describe(&s.entry),
            });
        }
    }
    let h = history.within(horizon);
    for s in &h.sessions {
        events.push(TimelineEvent {
            at: s.opened_at,
            source: "session".into(),
            id: s.id.clone(),
            summary: format!("consultation with {} ({} segments)", s.physician_id, s.segments.len()),
        });
    }
    for (i, a) in h.assessments.iter().enumerate() {
        let gaps: Vec<String> = a.gaps.iter().map(|(t, l)| format!("{} (level {l})", t.label())).collect();
        events.push(TimelineEvent {
            at: a.at,
            source: "assessment".into(),
            id: format!("assessment-{}", i + 1),
            summary: if gaps.is_empty() {
                format!("assessment, {} questions, no gaps", a.questions)
            } else {
                format!("assessment, {} questions, gaps: {}", a.questions, gaps.join(", "))
            },
        });
    }
    for (i, u) in h.utterances.iter().enumerate() {
        events.push(TimelineEvent {
            at: u.at,
            source: "utterance".into(),
            id: format!("utterance-{}", i + 1),
            summary: u.text.clone(),
        });
    }
    // stable: equal (time, source) keep insertion order
    events.sort_by(|a, b| a.at.cmp(&b.at).then_with(|| a.source.cmp(&b.source)));
    let mut thematic: BTreeMap<Theme, Vec<TimelineEvent>> = Theme::ALL.iter().map(|t| (*t, Vec::new())).collect();
    for e in &events {
        thematic.get_mut(&Theme::of_source(&e.source)).expect("all themes").push(e.clone());
    }
    Ok(OrganizedRecord {
        chronological: events,
        thematic,
    })
}
