use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::DialogueError;
use crate::tsv;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Topic {
    GlucoseMonitoring,
    Diet,
    Medication,
    Complications,
    Exercise,
    FollowUp,
}

impl Topic {
    pub const ALL: [Topic; 6] = [
        Topic::GlucoseMonitoring,
        Topic::Diet,
        Topic::Medication,
        Topic::Complications,
        Topic::Exercise,
        Topic::FollowUp,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            Topic::GlucoseMonitoring => "glucose_monitoring",
            Topic::Diet => "diet",
            Topic::Medication => "medication",
            Topic::Complications => "complications",
            Topic::Exercise => "exercise",
            Topic::FollowUp => "follow_up",
        }
    }

    /// Human-readable name used in summaries.
    pub fn label(&self) -> &'static str {
        match self {
            Topic::GlucoseMonitoring => "glucose monitoring",
            Topic::Diet => "diet",
            Topic::Medication => "medication",
            Topic::Complications => "complications",
            Topic::Exercise => "exercise",
            Topic::FollowUp => "follow-up",
        }
    }

    pub fn index(&self) -> usize {
        Topic::ALL.iter().position(|t| t == self).expect("listed")
    }
}

impl fmt::Display for Topic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Topic {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Topic::ALL
            .into_iter()
            .find(|t| t.as_str() == s.trim())
            .ok_or_else(|| format!("unknown topic {s:?}"))
    }
}

pub const MIN_LEVEL: u8 = 1;
pub const MAX_LEVEL: u8 = 3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Grade {
    Correct,
    Incorrect,
    /// Free-text items are not graded.
    NotApplicable,
}

/// Expected-answer schema.
///
/// Text form: `choice:a|b` (any listed option, case-insensitive),
/// `range:lo..hi` (inclusive numeric range) or `free`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum AnswerKey {
    Choice { accepted: BTreeSet<String> },
    Range { lo: f64, hi: f64 },
    Free,
}

impl AnswerKey {
    pub fn grade(&self, response: &str) -> Grade {
        match self {
            AnswerKey::Choice { accepted } => {
                if accepted.contains(&response.trim().to_lowercase()) {
                    Grade::Correct
                } else {
                    Grade::Incorrect
                }
            }
            AnswerKey::Range { lo, hi } => match response.trim().parse::<f64>() {
                Ok(v) if v >= *lo && v <= *hi => Grade::Correct,
                _ => Grade::Incorrect,
            },
            AnswerKey::Free => Grade::NotApplicable,
        }
    }
}

impl fmt::Display for AnswerKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AnswerKey::Choice { accepted } => {
                let opts: Vec<&str> = accepted.iter().map(String::as_str).collect();
                write!(f, "choice:{}", opts.join("|"))
            }
            AnswerKey::Range { lo, hi } => write!(f, "range:{lo}..{hi}"),
            AnswerKey::Free => f.write_str("free"),
        }
    }
}

impl FromStr for AnswerKey {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s == "free" {
            return Ok(AnswerKey::Free);
        }
        if let Some(opts) = s.strip_prefix("choice:") {
            let accepted: BTreeSet<String> = tsv::split_list(opts).into_iter().map(|o| o.to_lowercase()).collect();
            if accepted.is_empty() {
                return Err("choice key lists no options".into());
            }
            return Ok(AnswerKey::Choice { accepted });
        }
        if let Some(range) = s.strip_prefix("range:") {
            let (lo, hi) = range.split_once("..").ok_or("range key needs lo..hi")?;
            let lo: f64 = lo.trim().parse().map_err(|_| format!("bad range bound {lo:?}"))?;
            let hi: f64 = hi.trim().parse().map_err(|_| format!("bad range bound {hi:?}"))?;
            if !(lo <= hi) {
                return Err("range key needs lo <= hi".into());
            }
            return Ok(AnswerKey::Range { lo, hi });
        }
        Err(format!("unknown answer key {s:?}"))
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct QuestionItem {
    pub id: String,
    pub text: String,
    pub topic: Topic,
    pub difficulty: u8,
    pub answer_key: AnswerKey,
}

/// Items sorted by id.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct QuestionBank {
    items: Vec<QuestionItem>,
}

impl QuestionBank {
    pub fn new(mut items: Vec<QuestionItem>) -> Result<Self, DialogueError> {
        items.sort_by(|a, b| a.id.cmp(&b.id));
        for pair in items.windows(2) {
            if pair[0].id == pair[1].id {
                return Err(DialogueError::DuplicateItem(pair[0].id.clone()));
            }
        }
        for item in &items {
            if !(MIN_LEVEL..=MAX_LEVEL).contains(&item.difficulty) {
                return Err(DialogueError::InvalidItem {
                    id: item.id.clone(),
                    reason: format!("difficulty {} outside 1..=3", item.difficulty),
                });
            }
        }
        Ok(Self { items })
    }

    /// Parse `Q<TAB>id<TAB>topic<TAB>difficulty<TAB>text<TAB>answer_key` lines.
    pub fn parse(text: &str) -> Result<Self, DialogueError> {
        let mut items = Vec::new();
        for line in tsv::lines(text) {
            let err = |message: String| DialogueError::Parse {
                line: line.number,
                message,
            };
            if line.tag() != "Q" {
                return Err(err(format!("unknown record tag {:?}", line.tag())));
            }
            if line.fields.len() != 6 {
                return Err(err(format!("question line needs 6 fields, found {}", line.fields.len())));
            }
            let f = &line.fields;
            items.push(QuestionItem {
                id: f[1].trim().to_owned(),
                topic: f[2].parse().map_err(err)?,
                difficulty: f[3].trim().parse().map_err(|_| err(format!("bad difficulty {:?}", f[3])))?,
                text: f[4].trim().to_owned(),
                answer_key: f[5].parse().map_err(err)?,
            });
        }
        Self::new(items)
    }

    pub fn to_document(&self) -> String {
        let mut out = String::new();
        for q in &self.items {
            out.push_str(&format!(
                "Q\t{}\t{}\t{}\t{}\t{}\n",
                q.id, q.topic, q.difficulty, q.text, q.answer_key
            ));
        }
        out
    }

    /// Every (topic, difficulty) cell must hold at least one item.
    pub fn validate_coverage(&self) -> Result<(), DialogueError> {
        for topic in Topic::ALL {
            for level in MIN_LEVEL..=MAX_LEVEL {
                if self.cell(topic, level).next().is_none() {
                    return Err(DialogueError::MissingCell { topic, difficulty: level });
                }
            }
        }
        Ok(())
    }

    pub fn items(&self) -> &[QuestionItem] {
        &self.items
    }

    pub fn item(&self, id: &str) -> Option<&QuestionItem> {
        self.items
            .binary_search_by(|q| q.id.as_str().cmp(id))
            .ok()
            .map(|i| &self.items[i])
    }

    /// Items of one cell, in id order.
    pub fn cell(&self, topic: Topic, difficulty: u8) -> impl Iterator<Item = &QuestionItem> {
        self.items
            .iter()
            .filter(move |q| q.topic == topic && q.difficulty == difficulty)
    }
}
