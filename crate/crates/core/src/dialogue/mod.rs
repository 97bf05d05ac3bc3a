//! Adaptive assessment, pre-visit summary and patient Q&A.

use thiserror::Error;

pub mod assessment;
pub mod bank;
pub mod generator;
pub mod qa;
pub mod summary;

pub use assessment::{
    start_assessment, start_with_budget, step_level, AskedItem, AssessmentState, AssessmentStatus, NextQuestion,
    DEFAULT_BUDGET, START_LEVEL,
};
pub use bank::{AnswerKey, Grade, QuestionBank, QuestionItem, Topic};
pub use generator::{
    generate_bounded, FailingGenerator, GenerationRequest, GenerationResponse, GeneratorError, SlowGenerator,
    TemplateGenerator, TextGenerator,
};
pub use qa::{
    answer_question, missing_personal_data, rewrite_question, EducationLevel, GlucoseSummary, GlucoseUnit,
    PatientContext, PersonalData, QaConfig, QaKind, QaResponse,
};
pub use summary::{summarize_assessment, AssessmentSummary, AttentionFlag, FreeTextResponse};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum DialogueError {
    #[error("question bank line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("duplicate question id {0:?}")]
    DuplicateItem(String),
    #[error("question {id:?}: {reason}")]
    InvalidItem { id: String, reason: String },
    #[error("question bank has no {topic} item at difficulty {difficulty}")]
    MissingCell { topic: Topic, difficulty: u8 },
    #[error("item {0:?} was not the last question issued")]
    NotIssued(String),
    #[error("the assessment is still active")]
    StillActive,
}
