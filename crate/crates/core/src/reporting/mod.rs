//! Monthly reports, record organisation and the interaction feedback loop.
//!
//! A report is a pure projection of one store snapshot: building it twice
//! from the same [`RecordsView`] gives byte-identical canonical JSON.

pub mod analytics;
pub mod feedback;
pub mod history;
pub mod organize;
pub mod sentiment;

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use analytics::{glucose_trend, ols_slope, symptom_frequency, GlucoseTrend, TARGET_RANGE};
pub use feedback::{
    aggregate_feedback, load_interactions, question_normal_form, record_interaction, FeedbackAggregate, Interaction,
    MisunderstoodTerm, DEFAULT_THRESHOLD,
};
pub use history::{assessment_key, record_assessment, record_utterance, AssessmentRecord, DialogueHistory};
pub use organize::{organize_record, OrganizedRecord, Theme, TimelineEvent};
pub use sentiment::{sentiment_summary, LexiconClassifier, SentimentClass, SentimentClassifier, SentimentSummary};

use crate::dialogue::Topic;
use crate::records::{adherence, Alert, RecordError, RecordsView, SymptomCode};
use crate::time::{Month, Timestamp};

#[derive(Debug, Error)]
pub enum ReportError {
    #[error("period {0} has not ended; use preview to build it early")]
    PeriodOpen(Month),
    #[error(transparent)]
    Record(#[from] RecordError),
    #[error("stored history is unreadable: {0}")]
    Decode(#[from] serde_json::Error),
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MonthlyReport {
    pub patient_id: String,
    pub period: Month,
    pub preview: bool,
    pub glucose_trend: GlucoseTrend,
    pub adherence: f64,
    pub symptom_frequency: BTreeMap<SymptomCode, usize>,
    pub knowledge_gaps: Vec<(Topic, u8)>,
    pub sentiment: SentimentSummary,
    pub open_alerts: Vec<Alert>,
    pub narrative: OrganizedRecord,
}

impl MonthlyReport {
    /// Pretty JSON with every object's keys sorted.
    pub fn to_canonical_json(&self) -> String {
        let value = serde_json::to_value(self).expect("report is always serializable");
        let mut out = serde_json::to_string_pretty(&value).expect("value is always serializable");
        out.push('\n');
        out
    }
}

pub fn build_monthly_report(
    patient_id: &str,
    period: Month,
    view: &RecordsView,
    classifier: &dyn SentimentClassifier,
    now: Timestamp,
    preview: bool,
) -> Result<MonthlyReport, ReportError> {
    let window = period.window();
    if now < window.end && !preview {
        return Err(ReportError::PeriodOpen(period));
    }
    let history = DialogueHistory::load(view, patient_id)?;
    let in_period = history.within(window);
    let glucose: Vec<_> = view.glucose(patient_id)?.into_iter().map(|s| s.entry).collect();
    let symptoms: Vec<_> = view.symptoms(patient_id)?.into_iter().map(|s| s.entry).collect();
    let utterances: Vec<&str> = in_period.utterances.iter().map(|u| u.text.as_str()).collect();
    Ok(MonthlyReport {
        patient_id: patient_id.to_owned(),
        period,
        preview: now < window.end,
        glucose_trend: glucose_trend(&glucose, window),
        adherence: adherence(view, patient_id, window)?,
        symptom_frequency: symptom_frequency(&symptoms, window),
        knowledge_gaps: in_period.knowledge_gaps(),
        sentiment: sentiment_summary(&utterances, classifier),
        open_alerts: view.open_alerts(patient_id)?,
        narrative: organize_record(patient_id, window, view, &history)?,
    })
}
