//! Four-part pre-visit summary plus rule-derived attention flags.

use std::sync::Arc;
use std::time::Duration;

use serde::{Deserialize, Serialize};

use super::assessment::{AssessmentState, AssessmentStatus};
use super::bank::Grade;
use super::generator::{generate_bounded, GenerationRequest, TextGenerator, INSTRUCTION_SUMMARY};
use super::DialogueError;
use crate::time::{format_timestamp, parse_timestamp, Timestamp};

/// Phrases that mark a worry about treatment.
pub const CONCERN_LEXICON: &[&str] = &[
    "worry", "worried", "afraid", "scared", "fear", "side effect", "hurt me", "harm", "dangerous", "nervous",
];

/// Phrases that declare not taking medication as prescribed.
pub const NON_ADHERENCE_LEXICON: &[&str] = &[
    "forgot", "forget", "skipped", "skip my", "stopped taking", "don't take", "do not take", "missed my", "ran out",
];

pub fn matches_lexicon(text: &str, lexicon: &[&str]) -> bool {
    let lower = text.to_lowercase();
    lexicon.iter().any(|k| lower.contains(k))
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FreeTextResponse {
    pub at: Timestamp,
    pub text: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AttentionFlag {
    pub text: String,
    /// Item id or verbatim quote the flag rests on.
    pub evidence: String,
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct AssessmentSummary {
    pub chief_complaint_timeline: Vec<(Timestamp, String)>,
    pub concerns: Vec<String>,
    pub key_questions: Vec<String>,
    pub emotional_behavioral_patterns: Vec<String>,
    pub attention_flags: Vec<AttentionFlag>,
    /// The generator failed; only the flags are filled.
    pub degraded: bool,
}

const TIMELINE: &str = "chief_complaint_timeline";
const CONCERNS: &str = "concerns";
const QUESTIONS: &str = "key_questions";
const PATTERNS: &str = "emotional_behavioral_patterns";

pub fn attention_flags(state: &AssessmentState, free_text: &[FreeTextResponse]) -> Vec<AttentionFlag> {
    let mut flags = Vec::new();
    let mut seen = Vec::new();
    for a in &state.asked {
        if a.grade == Grade::Incorrect && a.difficulty == 1 && !seen.contains(&a.topic) {
            seen.push(a.topic);
            flags.push(AttentionFlag {
                text: format!("{} knowledge gap (level 1)", a.topic.label()),
                evidence: a.item_id.clone(),
            });
        }
    }
    for r in free_text {
        if matches_lexicon(&r.text, CONCERN_LEXICON) {
            flags.push(AttentionFlag {
                text: "concern about treatment or side effects".into(),
                evidence: r.text.clone(),
            });
        }
        if matches_lexicon(&r.text, NON_ADHERENCE_LEXICON) {
            flags.push(AttentionFlag {
                text: "possible medication non-adherence".into(),
                evidence: r.text.clone(),
            });
        }
    }
    flags
}

fn request(state: &AssessmentState, free_text: &[FreeTextResponse]) -> GenerationRequest {
    let mut sorted = free_text.to_vec();
    sorted.sort_by_key(|r| r.at);
    let timeline = sorted
        .iter()
        .map(|r| format!("{}\t{}", format_timestamp(&r.at), r.text))
        .collect();
    let concerns = sorted
        .iter()
        .filter(|r| matches_lexicon(&r.text, CONCERN_LEXICON))
        .map(|r| r.text.clone())
        .collect();
    let mut questions: Vec<String> = sorted.iter().filter(|r| r.text.contains('?')).map(|r| r.text.clone()).collect();
    if let Ok(gaps) = state.knowledge_gaps() {
        for (topic, level) in gaps {
            questions.push(format!("Review {} with the patient (lowest failed level {level}).", topic.label()));
        }
    }
    let mut patterns = Vec::new();
    for r in &sorted {
        if matches_lexicon(&r.text, CONCERN_LEXICON) {
            patterns.push(format!("Expresses worry: \"{}\"", r.text));
        }
        if matches_lexicon(&r.text, NON_ADHERENCE_LEXICON) {
            patterns.push(format!("Reports irregular medication taking: \"{}\"", r.text));
        }
    }
    GenerationRequest::new(INSTRUCTION_SUMMARY)
        .slot(TIMELINE, timeline)
        .slot(CONCERNS, concerns)
        .slot(QUESTIONS, questions)
        .slot(PATTERNS, patterns)
}

fn parse_sections(text: &str, summary: &mut AssessmentSummary) -> Result<(), String> {
    for line in text.lines().filter(|l| !l.trim().is_empty()) {
        let (section, entry) = line.split_once('\t').ok_or_else(|| format!("malformed line {line:?}"))?;
        match section {
            TIMELINE => {
                let (ts, text) = entry.split_once('\t').ok_or("timeline entry needs a timestamp")?;
                let at = parse_timestamp(ts).map_err(|e| e.to_string())?;
                summary.chief_complaint_timeline.push((at, text.to_owned()));
            }
            CONCERNS => summary.concerns.push(entry.to_owned()),
            QUESTIONS => summary.key_questions.push(entry.to_owned()),
            PATTERNS => summary.emotional_behavioral_patterns.push(entry.to_owned()),
            other => return Err(format!("unknown section {other:?}")),
        }
    }
    Ok(())
}

pub fn summarize_assessment(
    state: &AssessmentState,
    free_text: &[FreeTextResponse],
    generator: &Arc<dyn TextGenerator>,
    timeout: Duration,
) -> Result<AssessmentSummary, DialogueError> {
    if state.status != AssessmentStatus::Done {
        return Err(DialogueError::StillActive);
    }
    let flags = attention_flags(state, free_text);
    let degraded = AssessmentSummary {
        attention_flags: flags.clone(),
        degraded: true,
        ..AssessmentSummary::default()
    };
    let Ok(response) = generate_bounded(generator, &request(state, free_text), timeout) else {
        return Ok(degraded);
    };
    let mut summary = AssessmentSummary {
        attention_flags: flags,
        ..AssessmentSummary::default()
    };
    match parse_sections(&response.text, &mut summary) {
        Ok(()) => Ok(summary),
        Err(_) => Ok(degraded),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dialogue::assessment::AskedItem;
    use crate::dialogue::bank::Topic;
    use crate::dialogue::generator::{FailingGenerator, TemplateGenerator};

    fn done_state(asked: Vec<AskedItem>) -> AssessmentState {
        AssessmentState {
            patient_id: "p1".into(),
            current_level: 2,
            asked,
            question_budget: 8,
            status: AssessmentStatus::Done,
            issued: None,
        }
    }

    fn gen() -> Arc<dyn TextGenerator> {
        Arc::new(TemplateGenerator)
    }

    fn at(s: &str) -> Timestamp {
        parse_timestamp(s).unwrap()
    }

    #[test]
    fn clean_assessment_has_no_flags() {
        let s = summarize_assessment(&done_state(vec![]), &[], &gen(), Duration::from_secs(1)).unwrap();
        assert!(s.attention_flags.is_empty());
        assert!(!s.degraded);
        assert!(s.concerns.is_empty() && s.chief_complaint_timeline.is_empty());
    }

    #[test]
    fn worry_becomes_concern_and_flag() {
        let text = "I worry insulin will hurt me";
        let free = [FreeTextResponse { at: at("2025-04-01T09:00:00"), text: text.into() }];
        let s = summarize_assessment(&done_state(vec![]), &free, &gen(), Duration::from_secs(1)).unwrap();
        assert_eq!(s.concerns, [text]);
        assert_eq!(s.chief_complaint_timeline, [(at("2025-04-01T09:00:00"), text.to_owned())]);
        assert!(s.attention_flags.iter().any(|f| f.evidence == text));
    }

    #[test]
    fn level_one_failure_flag() {
        let asked = vec![AskedItem {
            item_id: "med-1a".into(),
            topic: Topic::Medication,
            difficulty: 1,
            response: "a".into(),
            grade: Grade::Incorrect,
        }];
        let s = summarize_assessment(&done_state(asked), &[], &gen(), Duration::from_secs(1)).unwrap();
        assert_eq!(
            s.attention_flags,
            [AttentionFlag {
                text: "medication knowledge gap (level 1)".into(),
                evidence: "med-1a".into()
            }]
        );
        assert_eq!(s.key_questions.len(), 1);
    }

    #[test]
    fn generator_failure_degrades() {
        let free = [FreeTextResponse { at: at("2025-04-01T09:00:00"), text: "I forgot my pills twice".into() }];
        let failing: Arc<dyn TextGenerator> = Arc::new(FailingGenerator);
        let s = summarize_assessment(&done_state(vec![]), &free, &failing, Duration::from_secs(1)).unwrap();
        assert!(s.degraded);
        assert!(s.chief_complaint_timeline.is_empty());
        assert_eq!(s.attention_flags[0].text, "possible medication non-adherence");
    }

    #[test]
    fn active_state_rejected() {
        let mut st = done_state(vec![]);
        st.status = AssessmentStatus::Active;
        assert_eq!(
            summarize_assessment(&st, &[], &gen(), Duration::from_secs(1)),
            Err(DialogueError::StillActive)
        );
    }
}
