//! Adaptive pre-visit assessment.
//!
//! A three-level staircase: start at level 2, one step up after a correct
//! answer, one step down after an incorrect one, clamped to 1..=3. Topics
//! are visited round-robin in [`Topic::ALL`] order. The assessment ends when
//! the question budget is spent or every topic has a correct answer at
//! level 2 or above.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::bank::{Grade, QuestionBank, QuestionItem, Topic, MAX_LEVEL, MIN_LEVEL};
use super::DialogueError;

pub const DEFAULT_BUDGET: usize = 8;
pub const START_LEVEL: u8 = 2;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum AssessmentStatus {
    Active,
    Done,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AskedItem {
    pub item_id: String,
    pub topic: Topic,
    pub difficulty: u8,
    pub response: String,
    pub grade: Grade,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AssessmentState {
    pub patient_id: String,
    pub current_level: u8,
    pub asked: Vec<AskedItem>,
    pub question_budget: usize,
    pub status: AssessmentStatus,
    /// The item issued by the last `next_question` and not yet answered.
    pub issued: Option<String>,
}

#[derive(Debug, Clone, PartialEq)]
pub enum NextQuestion {
    Item(QuestionItem),
    Done,
}

/// Level after one graded response.
pub fn step_level(level: u8, grade: Grade) -> u8 {
    match grade {
        Grade::Correct => (level + 1).min(MAX_LEVEL),
        Grade::Incorrect => level.saturating_sub(1).max(MIN_LEVEL),
        Grade::NotApplicable => level,
    }
}

pub fn start_assessment(patient_id: &str, bank: &QuestionBank) -> Result<AssessmentState, DialogueError> {
    start_with_budget(patient_id, bank, DEFAULT_BUDGET)
}

pub fn start_with_budget(patient_id: &str, bank: &QuestionBank, budget: usize) -> Result<AssessmentState, DialogueError> {
    bank.validate_coverage()?;
    Ok(AssessmentState {
        patient_id: patient_id.to_owned(),
        current_level: START_LEVEL,
        asked: Vec::new(),
        question_budget: budget,
        status: if budget == 0 { AssessmentStatus::Done } else { AssessmentStatus::Active },
        issued: None,
    })
}

impl AssessmentState {
    fn covered(&self) -> bool {
        Topic::ALL.iter().all(|t| {
            self.asked
                .iter()
                .any(|a| a.topic == *t && a.grade == Grade::Correct && a.difficulty >= 2)
        })
    }

    fn was_asked(&self, id: &str) -> bool {
        self.asked.iter().any(|a| a.item_id == id)
    }

    /// Issue the next item, or finish. Calling again before responding
    /// returns the same item.
    pub fn next_question(&mut self, bank: &QuestionBank) -> NextQuestion {
        if self.status == AssessmentStatus::Done {
            return NextQuestion::Done;
        }
        if let Some(id) = &self.issued {
            if let Some(item) = bank.item(id) {
                return NextQuestion::Item(item.clone());
            }
        }
        if self.asked.len() >= self.question_budget || self.covered() {
            self.status = AssessmentStatus::Done;
            return NextQuestion::Done;
        }
        let first = self.asked.len() % Topic::ALL.len();
        let mut levels: Vec<u8> = (MIN_LEVEL..=MAX_LEVEL).collect();
        // nearest level first, lower level on ties
        levels.sort_by_key(|l| ((*l as i16 - self.current_level as i16).abs(), *l));
        for offset in 0..Topic::ALL.len() {
            let topic = Topic::ALL[(first + offset) % Topic::ALL.len()];
            for level in &levels {
                if let Some(item) = bank.cell(topic, *level).find(|q| !self.was_asked(&q.id)) {
                    self.issued = Some(item.id.clone());
                    return NextQuestion::Item(item.clone());
                }
            }
        }
        self.status = AssessmentStatus::Done;
        NextQuestion::Done
    }

    pub fn record_response(&mut self, bank: &QuestionBank, item_id: &str, response: &str) -> Result<Grade, DialogueError> {
        if self.issued.as_deref() != Some(item_id) {
            return Err(DialogueError::NotIssued(item_id.to_owned()));
        }
        let item = bank
            .item(item_id)
            .ok_or_else(|| DialogueError::NotIssued(item_id.to_owned()))?;
        let grade = item.answer_key.grade(response);
        self.asked.push(AskedItem {
            item_id: item.id.clone(),
            topic: item.topic,
            difficulty: item.difficulty,
            response: response.to_owned(),
            grade,
        });
        self.current_level = step_level(self.current_level, grade);
        self.issued = None;
        Ok(grade)
    }

    /// Per topic with at least one incorrect answer, the lowest difficulty
    /// failed, in topic order.
    pub fn knowledge_gaps(&self) -> Result<Vec<(Topic, u8)>, DialogueError> {
        if self.status != AssessmentStatus::Done {
            return Err(DialogueError::StillActive);
        }
        let mut gaps: BTreeMap<Topic, u8> = BTreeMap::new();
        for a in self.asked.iter().filter(|a| a.grade == Grade::Incorrect) {
            let lowest = gaps.entry(a.topic).or_insert(a.difficulty);
            *lowest = (*lowest).min(a.difficulty);
        }
        Ok(gaps.into_iter().collect())
    }
}
