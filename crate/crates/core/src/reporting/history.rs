//! Dialogue-side history kept in the store next to the health records:
//! closed consultations, patient utterances and finished assessments.

use serde::{Deserialize, Serialize};

use crate::dialogue::{AssessmentState, Topic};
use crate::records::RecordsView;
use crate::store::{StoreAdapter, StoreError};
use crate::time::{Timestamp, Window};
use crate::transcript::{session_key, utterance_key, ConsultationSession, Utterance};

use super::ReportError;

pub fn assessment_key(patient_id: &str) -> String {
    format!("assessment/{patient_id}")
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AssessmentRecord {
    pub at: Timestamp,
    pub patient_id: String,
    pub questions: usize,
    pub gaps: Vec<(Topic, u8)>,
}

impl AssessmentRecord {
    pub fn from_state(state: &AssessmentState, at: Timestamp) -> Result<Self, crate::dialogue::DialogueError> {
        Ok(Self {
            at,
            patient_id: state.patient_id.clone(),
            questions: state.asked.len(),
            gaps: state.knowledge_gaps()?,
        })
    }
}

pub fn record_assessment(store: &dyn StoreAdapter, record: &AssessmentRecord) -> Result<u64, StoreError> {
    store.append(&assessment_key(&record.patient_id), &serde_json::to_string(record)?)
}

pub fn record_utterance(store: &dyn StoreAdapter, patient_id: &str, utterance: &Utterance) -> Result<u64, StoreError> {
    store.append(&utterance_key(patient_id), &serde_json::to_string(utterance)?)
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct DialogueHistory {
    pub sessions: Vec<ConsultationSession>,
    pub utterances: Vec<Utterance>,
    pub assessments: Vec<AssessmentRecord>,
}

fn decode<T: serde::de::DeserializeOwned>(view: &RecordsView, stream: &str) -> Result<Vec<T>, ReportError> {
    view.scan(stream)
        .into_iter()
        .map(|e| serde_json::from_str(&e.value).map_err(ReportError::from))
        .collect()
}

impl DialogueHistory {
    /// Everything stored for the patient at the view's snapshot, time-sorted.
    pub fn load(view: &RecordsView, patient_id: &str) -> Result<Self, ReportError> {
        let mut h = Self {
            sessions: decode(view, &session_key(patient_id))?,
            utterances: decode(view, &utterance_key(patient_id))?,
            assessments: decode(view, &assessment_key(patient_id))?,
        };
        h.sessions.sort_by_key(|s| s.opened_at);
        h.utterances.sort_by_key(|u| u.at);
        h.assessments.sort_by_key(|a| a.at);
        Ok(h)
    }

    pub fn within(&self, window: Window) -> Self {
        Self {
            sessions: self.sessions.iter().filter(|s| window.contains(&s.opened_at)).cloned().collect(),
            utterances: self.utterances.iter().filter(|u| window.contains(&u.at)).cloned().collect(),
            assessments: self.assessments.iter().filter(|a| window.contains(&a.at)).cloned().collect(),
        }
    }

    /// Per topic, the lowest failed level across all assessments.
    pub fn knowledge_gaps(&self) -> Vec<(Topic, u8)> {
        let mut gaps: std::collections::BTreeMap<Topic, u8> = Default::default();
        for (topic, level) in self.assessments.iter().flat_map(|a| a.gaps.iter()) {
            let e = gaps.entry(*topic).or_insert(*level);
            *e = (*e).min(*level);
        }
        gaps.into_iter().collect()
    }
}
