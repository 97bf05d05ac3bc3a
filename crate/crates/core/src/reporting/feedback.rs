//! Interaction log aggregation feeding graph-update proposals.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::knowledge::{normalize_str, KnowledgeGraph, PendingUpdate, ReviewQueue, UpdateCandidate};
use crate::store::{StoreAdapter, StoreError};
use crate::time::{Month, Timestamp};

pub const DEFAULT_THRESHOLD: usize = 3;
pub const INTERACTION_STREAM: &str = "interactions";

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum Interaction {
    Question { at: Timestamp, patient_id: String, text: String },
    ExplanationRequest { at: Timestamp, patient_id: String, node_id: String },
    DialectIssue { at: Timestamp, patient_id: String },
}

impl Interaction {
    pub fn at(&self) -> Timestamp {
        match self {
            Interaction::Question { at, .. }
            | Interaction::ExplanationRequest { at, .. }
            | Interaction::DialectIssue { at, .. } => *at,
        }
    }
}

pub fn record_interaction(store: &dyn StoreAdapter, interaction: &Interaction) -> Result<u64, StoreError> {
    store.append(INTERACTION_STREAM, &serde_json::to_string(interaction)?)
}

pub fn load_interactions(store: &dyn StoreAdapter) -> Result<Vec<Interaction>, serde_json::Error> {
    store
        .scan(INTERACTION_STREAM)
        .into_iter()
        .map(|e| serde_json::from_str(&e.value))
        .collect()
}

/// Drop a trailing ` (context: ...)` added by question rewriting, fold
/// case, strip punctuation and collapse whitespace.
pub fn question_normal_form(text: &str) -> String {
    let base = match text.rfind(" (context:") {
        Some(i) if text.trim_end().ends_with(')') => &text[..i],
        _ => text,
    };
    let folded = normalize_str(base);
    let cleaned: String = folded
        .chars()
        .map(|c| if c.is_alphanumeric() || c.is_whitespace() { c } else { ' ' })
        .collect();
    cleaned.split_whitespace().collect::<Vec<_>>().join(" ")
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MisunderstoodTerm {
    pub node_id: String,
    /// Explanation requests for the term over all patients.
    pub requests: usize,
    /// Most requests by one patient.
    pub max_per_patient: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FeedbackAggregate {
    pub period: Month,
    pub top_questions: Vec<(String, usize)>,
    pub misunderstood_terms: Vec<MisunderstoodTerm>,
    pub dialect_issue_count: usize,
}

/// Aggregate one month. A term is misunderstood when some patient asked for
/// its explanation at least `threshold` times; each such term that exists in
/// `graph` gets one lay-rewrite proposal in `queue`.
pub fn aggregate_feedback(
    log: &[Interaction],
    period: Month,
    threshold: usize,
    graph: &KnowledgeGraph,
    queue: &ReviewQueue,
) -> (FeedbackAggregate, Vec<PendingUpdate>) {
    let window = period.window();
    let mut questions: BTreeMap<String, usize> = BTreeMap::new();
    let mut requests: BTreeMap<String, BTreeMap<String, usize>> = BTreeMap::new();
    let mut dialect = 0;
    for i in log.iter().filter(|i| window.contains(&i.at())) {
        match i {
            Interaction::Question { text, .. } => {
                let nf = question_normal_form(text);
                if !nf.is_empty() {
                    *questions.entry(nf).or_default() += 1;
                }
            }
            Interaction::ExplanationRequest { patient_id, node_id, .. } => {
                *requests.entry(node_id.clone()).or_default().entry(patient_id.clone()).or_default() += 1;
            }
            Interaction::DialectIssue { .. } => dialect += 1,
        }
    }
    let mut top_questions: Vec<(String, usize)> = questions.into_iter().collect();
    top_questions.sort_by(|a, b| b.1.cmp(&a.1).then_with(|| a.0.cmp(&b.0)));
    let misunderstood_terms: Vec<MisunderstoodTerm> = requests
        .into_iter()
        .filter_map(|(node_id, per_patient)| {
            let max = per_patient.values().copied().max().unwrap_or(0);
            (max >= threshold.max(1)).then(|| MisunderstoodTerm {
                node_id,
                requests: per_patient.values().sum(),
                max_per_patient: max,
            })
        })
        .collect();
    let proposals = misunderstood_terms
        .iter()
        .filter_map(|t| {
            let node = graph.node(&t.node_id)?;
            queue
                .propose(UpdateCandidate::LayRewrite {
                    node_id: t.node_id.clone(),
                    current_explanation: node.lay_explanation.clone(),
                    request_count: t.requests,
                })
                .ok()
        })
        .collect();
    (
        FeedbackAggregate {
            period,
            top_questions,
            misunderstood_terms,
            dialect_issue_count: dialect,
        },
        proposals,
    )
}
