//! Evaluation statistics: knowledge-test scoring, balanced group
//! assignment, Welch's t from summary statistics, Mann-Whitney U with an
//! exact small-sample path, a normality heuristic, SUS and the weighted
//! physician rubric. Everything here is a pure function.

pub mod hypothesis;
pub mod scoring;
pub mod special;

use thiserror::Error;

pub use hypothesis::{
    compare_samples, doubled_midranks, doubled_u_deviation, mann_whitney_u, normality_heuristic, welch_t_from_summary,
    Comparison, MannWhitney, Normality, SummaryStats, TTest, TestChoice, UMethod, EXACT_LIMIT, EXACT_MAX_N,
};
pub use scoring::{
    balanced_split, rubric_score, score_test, sus_score, sus_score_of_means, ItemKind, KnowledgeTest, ObjectiveItem,
    Split, SusResponse, RUBRIC_WEIGHTS, TEST_TOTAL,
};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum EvalError {
    #[error("invalid test definition: {0}")]
    InvalidTest(String),
    #[error("malformed responses: {0}")]
    MalformedResponses(String),
    #[error("out of range: {0}")]
    OutOfRange(String),
    #[error("{scores} scores cannot fill {groups} groups")]
    TooFewScores { scores: usize, groups: usize },
    #[error("need at least {needed} observations, got {got}")]
    TooFewObservations { needed: usize, got: usize },
    #[error("empty sample")]
    EmptySample,
    #[error("values must be finite")]
    NotFinite,
    #[error("sample has zero variance")]
    ZeroVariance,
    #[error("exact enumeration over {0} values is too large")]
    ExactTooLarge(usize),
}
