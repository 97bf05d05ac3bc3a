use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SentimentClass {
    Anxiety,
    Confusion,
    Satisfaction,
    Neutral,
}

impl SentimentClass {
    pub const ALL: [SentimentClass; 4] = [
        SentimentClass::Anxiety,
        SentimentClass::Confusion,
        SentimentClass::Satisfaction,
        SentimentClass::Neutral,
    ];
}

pub trait SentimentClassifier: Send + Sync {
    fn classify(&self, utterance: &str) -> Result<SentimentClass, String>;
}

pub const ANXIETY_WORDS: &[&str] = &[
    "worried", "worry", "afraid", "scared", "anxious", "nervous", "fear", "panic", "担心", "害怕",
];
pub const CONFUSION_WORDS: &[&str] = &[
    "confused", "confusing", "don't understand", "do not understand", "not sure", "unclear", "what does", "不明白", "不懂",
];
pub const SATISFACTION_WORDS: &[&str] = &[
    "thank", "helpful", "great", "better", "happy", "glad", "good", "谢谢",
];

/// Keyword lexicon; anxiety outranks confusion, which outranks satisfaction.
#[derive(Debug, Clone, Copy, Default)]
pub struct LexiconClassifier;

impl SentimentClassifier for LexiconClassifier {
    fn classify(&self, utterance: &str) -> Result<SentimentClass, String> {
        let text = utterance.to_lowercase();
        let has = |words: &[&str]| words.iter().any(|w| text.contains(w));
        Ok(if has(ANXIETY_WORDS) {
            SentimentClass::Anxiety
        } else if has(CONFUSION_WORDS) {
            SentimentClass::Confusion
        } else if has(SATISFACTION_WORDS) {
            SentimentClass::Satisfaction
        } else {
            SentimentClass::Neutral
        })
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SentimentSummary {
    /// Fraction per class; all four classes always present.
    pub distribution: BTreeMap<SentimentClass, f64>,
    /// First utterance of each non-empty class.
    pub evidence: BTreeMap<SentimentClass, String>,
    pub utterances: usize,
    /// No utterances: the distribution is the neutral convention.
    pub empty: bool,
    /// The classifier failed: the distribution is all-neutral.
    pub degraded: bool,
}

fn all_neutral(utterances: usize, empty: bool, degraded: bool) -> SentimentSummary {
    SentimentSummary {
        distribution: SentimentClass::ALL
            .iter()
            .map(|c| (*c, if *c == SentimentClass::Neutral { 1.0 } else { 0.0 }))
            .collect(),
        evidence: BTreeMap::new(),
        utterances,
        empty,
        degraded,
    }
}

pub fn sentiment_summary<S: AsRef<str>>(utterances: &[S], classifier: &dyn SentimentClassifier) -> SentimentSummary {
    if utterances.is_empty() {
        return all_neutral(0, true, false);
    }
    let mut counts: BTreeMap<SentimentClass, usize> = SentimentClass::ALL.iter().map(|c| (*c, 0)).collect();
    let mut evidence = BTreeMap::new();
    for u in utterances {
        let Ok(class) = classifier.classify(u.as_ref()) else {
            return all_neutral(utterances.len(), false, true);
        };
        *counts.get_mut(&class).expect("all classes present") += 1;
        evidence.entry(class).or_insert_with(|| u.as_ref().to_owned());
    }
    let total = utterances.len() as f64;
    SentimentSummary {
        distribution: counts.into_iter().map(|(c, n)| (c, n as f64 / total)).collect(),
        evidence,
        utterances: utterances.len(),
        empty: false,
        degraded: false,
    }
}
