//! Patient Q&A: question rewriting, thresholded hybrid retrieval and
//! clarification when data is missing.

use std::collections::BTreeSet;
use std::sync::Arc;
use std::time::Duration;

use serde::{Deserialize, Serialize};

use super::generator::{generate_bounded, GenerationRequest, TextGenerator, INSTRUCTION_ANSWER};
use crate::knowledge::{hybrid_retrieve, normalize_str, threshold_filter, KnowledgeSnapshot, DEFAULT_RRF_K};

/// Condition name added to rewritten questions.
pub const CONDITION_TERM: &str = "type 2 diabetes";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum EducationLevel {
    Basic,
    #[default]
    Intermediate,
    Advanced,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub enum GlucoseUnit {
    #[default]
    #[serde(rename = "mmol/L")]
    MmolPerL,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GlucoseSummary {
    pub mean: f64,
    pub latest: f64,
    #[serde(default)]
    pub unit: GlucoseUnit,
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct PatientContext {
    pub patient_id: String,
    #[serde(default)]
    pub education_level: EducationLevel,
    #[serde(default)]
    pub dialect_tag: Option<String>,
    #[serde(default)]
    pub medications: Vec<String>,
    #[serde(default)]
    pub recent_glucose: Option<GlucoseSummary>,
}

impl PatientContext {
    fn has_clinical_data(&self) -> bool {
        !self.medications.is_empty() || self.recent_glucose.is_some()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PersonalData {
    RecentGlucose,
    Medications,
}

impl PersonalData {
    fn describe(&self) -> &'static str {
        match self {
            PersonalData::RecentGlucose => "your recent blood glucose readings",
            PersonalData::Medications => "the medicines you take and when",
        }
    }
}

const GLUCOSE_PHRASES: &[&str] = &[
    "my blood sugar", "my sugar", "my glucose", "my reading", "my level", "my a1c", "my hba1c", "血糖",
];
const MEDICATION_PHRASES: &[&str] = &[
    "my medication", "my medicine", "my meds", "my pill", "my tablet", "my dose", "my insulin",
    "when should i take", "what time should i take", "my schedule",
];
const FOLLOW_UP_PHRASES: &[&str] = &[
    "follow up", "follow-up", "followup", "next visit", "next appointment", "come back", "see the doctor again",
];

/// Personal-data categories the question depends on that `context` lacks.
pub fn missing_personal_data(question: &str, context: &PatientContext) -> Vec<PersonalData> {
    let q = normalize_str(question);
    let mentions = |phrases: &[&str]| phrases.iter().any(|p| q.contains(p));
    let mut missing = BTreeSet::new();
    if (mentions(GLUCOSE_PHRASES) || mentions(FOLLOW_UP_PHRASES)) && context.recent_glucose.is_none() {
        missing.insert(PersonalData::RecentGlucose);
    }
    if mentions(MEDICATION_PHRASES) && context.medications.is_empty() {
        missing.insert(PersonalData::Medications);
    }
    missing.into_iter().collect()
}

/// Append context terms the question does not already mention.
///
/// The terms are the patient's medications plus the condition name; a
/// context with no medications and no glucose summary adds nothing.
pub fn rewrite_question(question: &str, context: &PatientContext) -> String {
    if !context.has_clinical_data() {
        return question.to_owned();
    }
    let present = normalize_str(question);
    let mut terms: Vec<&str> = Vec::new();
    for t in context.medications.iter().map(String::as_str).chain([CONDITION_TERM]) {
        let t = t.trim();
        if t.is_empty() || present.contains(&normalize_str(t)) || terms.iter().any(|x| normalize_str(x) == normalize_str(t)) {
            continue;
        }
        terms.push(t);
    }
    if terms.is_empty() {
        question.to_owned()
    } else {
        format!("{question} (context: {})", terms.join(", "))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum QaKind {
    Answer,
    ClarificationRequest,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct QaResponse {
    pub kind: QaKind,
    pub text: String,
    pub citations: Vec<String>,
    /// Best fused retrieval score before thresholding.
    pub retrieval_score: f64,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub missing_data: Vec<PersonalData>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct QaConfig {
    pub min_score: f64,
    pub k: usize,
    pub rrf_k: f64,
    pub generator_timeout: Duration,
}

impl Default for QaConfig {
    fn default() -> Self {
        Self {
            min_score: 0.016,
            k: 5,
            rrf_k: DEFAULT_RRF_K,
            generator_timeout: Duration::from_secs(2),
        }
    }
}

fn clarification(missing: &[PersonalData], retrieval_score: f64) -> QaResponse {
    let text = if missing.is_empty() {
        "I could not find enough reliable information to answer that. Could you tell me more about what you would like to know?".to_owned()
    } else {
        let needs: Vec<&str> = missing.iter().map(PersonalData::describe).collect();
        format!("To answer this for you I need {}. Could you share that with me?", needs.join(" and "))
    };
    QaResponse {
        kind: QaKind::ClarificationRequest,
        text,
        citations: Vec::new(),
        retrieval_score,
        missing_data: missing.to_vec(),
    }
}

fn context_line(context: &PatientContext) -> Option<String> {
    let mut parts = Vec::new();
    if !context.medications.is_empty() {
        parts.push(format!("you take {}", context.medications.join(" and ")));
    }
    if let Some(g) = &context.recent_glucose {
        parts.push(format!("your recent blood sugar averages {:.1} mmol/L (latest {:.1})", g.mean, g.latest));
    }
    (!parts.is_empty()).then(|| parts.join(" and "))
}

pub fn answer_question(
    question: &str,
    context: &PatientContext,
    knowledge: &KnowledgeSnapshot,
    generator: &Arc<dyn TextGenerator>,
    config: &QaConfig,
) -> QaResponse {
    let missing = missing_personal_data(question, context);
    let rewritten = rewrite_question(question, context);
    let results = hybrid_retrieve(&rewritten, &knowledge.graph, &knowledge.index, config.k.max(1), config.rrf_k);
    let retrieval_score = results.first().map_or(0.0, |r| r.score);
    let surviving = threshold_filter(&results, config.min_score);
    if !missing.is_empty() || surviving.is_empty() {
        return clarification(&missing, retrieval_score);
    }
    let passages: Vec<String> = surviving
        .iter()
        .filter_map(|r| knowledge.index.get(&r.doc_id))
        .map(|d| d.text.clone())
        .collect();
    let mut request = GenerationRequest::new(INSTRUCTION_ANSWER)
        .slot("question", vec![question.to_owned()])
        .slot("rewritten", vec![rewritten])
        .slot("passages", passages.clone())
        .slot("education_level", vec![format!("{:?}", context.education_level).to_lowercase()]);
    if let Some(line) = context_line(context) {
        request = request.slot("context", vec![line]);
    }
    let text = match generate_bounded(generator, &request, config.generator_timeout) {
        Ok(r) if !r.text.trim().is_empty() => r.text,
        _ => passages.join(" "),
    };
    QaResponse {
        kind: QaKind::Answer,
        text,
        citations: surviving.into_iter().map(|r| r.doc_id).collect(),
        retrieval_score,
        missing_data: Vec::new(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dialogue::generator::{FailingGenerator, TemplateGenerator};
    use crate::knowledge::{Category, KnowledgeGraph, Relation, TermEdge, TermNode};

    fn ctx(meds: &[&str], glucose: bool) -> PatientContext {
        PatientContext {
            patient_id: "p1".into(),
            medications: meds.iter().map(|m| (*m).to_owned()).collect(),
            recent_glucose: glucose.then(|| GlucoseSummary { mean: 7.4, latest: 8.1, unit: GlucoseUnit::MmolPerL }),
            ..PatientContext::default()
        }
    }

    fn knowledge() -> KnowledgeSnapshot {
        let graph = KnowledgeGraph::from_parts(
            vec![
                TermNode::new("metformin", "metformin", Category::Drug, "A tablet that lowers blood sugar."),
                TermNode::new("t2dm", "type 2 diabetes mellitus", Category::Condition, "The common kind of diabetes.")
                    .with_surface_forms(["type 2 diabetes"]),
                TermNode::new("fruit", "fruit", Category::Lifestyle, "Whole fruit in small portions is fine."),
            ],
            vec![TermEdge::new("metformin", Relation::Treats, "t2dm")],
            1,
        )
        .unwrap();
        KnowledgeSnapshot::new(graph)
    }

    fn gen() -> Arc<dyn TextGenerator> {
        Arc::new(TemplateGenerator)
    }

    #[test]
    fn rewrite_rules() {
        let c = ctx(&["metformin"], false);
        assert_eq!(
            rewrite_question("Can I eat fruit?", &c),
            "Can I eat fruit? (context: metformin, type 2 diabetes)"
        );
        let q = "Does metformin help type 2 diabetes?";
        assert_eq!(rewrite_question(q, &c), q);
        assert_eq!(rewrite_question("Can I eat fruit?", &ctx(&[], false)), "Can I eat fruit?");
        let once = rewrite_question("Can I eat fruit?", &c);
        assert_eq!(rewrite_question(&once, &c), once);
    }

    #[test]
    fn empty_index_asks_for_more() {
        let empty = KnowledgeSnapshot::new(KnowledgeGraph::empty());
        let r = answer_question("Can I eat fruit?", &ctx(&["metformin"], true), &empty, &gen(), &QaConfig::default());
        assert_eq!(r.kind, QaKind::ClarificationRequest);
        assert!(r.text.contains('?'));
        assert!(r.citations.is_empty());
    }

    #[test]
    fn fruit_question_cites_metformin() {
        let r = answer_question("Can I eat fruit?", &ctx(&["metformin"], true), &knowledge(), &gen(), &QaConfig::default());
        assert_eq!(r.kind, QaKind::Answer);
        assert!(r.citations.contains(&"metformin".to_owned()), "{:?}", r.citations);
        assert!(r.text.contains("you take metformin"));
    }

    #[test]
    fn follow_up_without_glucose_asks_for_readings() {
        let r = answer_question("When should I follow up?", &ctx(&["metformin"], false), &knowledge(), &gen(), &QaConfig::default());
        assert_eq!(r.kind, QaKind::ClarificationRequest);
        assert_eq!(r.missing_data, [PersonalData::RecentGlucose]);
        assert!(r.text.contains("blood glucose readings"));
    }

    #[test]
    fn generator_failure_still_answers_from_passages() {
        let failing: Arc<dyn TextGenerator> = Arc::new(FailingGenerator);
        let r = answer_question("Can I eat fruit?", &ctx(&["metformin"], true), &knowledge(), &failing, &QaConfig::default());
        assert_eq!(r.kind, QaKind::Answer);
        assert!(!r.citations.is_empty());
    }

    #[test]
    fn personal_medication_question() {
        assert_eq!(
            missing_personal_data("Should I change my medication?", &ctx(&[], true)),
            [PersonalData::Medications]
        );
        assert!(missing_personal_data("What is fruit?", &ctx(&[], false)).is_empty());
    }
}
