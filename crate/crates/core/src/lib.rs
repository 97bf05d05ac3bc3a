//! Core logic for the T2MD Health platform.
//!
//! The crate is organised by subsystem:
//!
//! - [`knowledge`]: the medical-term knowledge graph, term recognition and
//!   hybrid graph + vector retrieval.
//! - [`dialogue`]: adaptive pre-visit assessment and the Q&A pipeline.
//! - [`transcript`]: consultation sessions and streaming term annotation.
//! - [`records`]: append-only health records, reminders and care-mode rules.
//! - [`collaboration`]: patient-managed access grants and alert routing.
//! - [`reporting`]: monthly reports, record organisation and feedback loop.
//! - [`evalkit`]: evaluation statistics (knowledge tests, t-test,
//!   Mann-Whitney U, SUS, rubric).
//! - [`store`]: the key/stream store contract and its two adapters.
//!
//! Everything that crosses a process boundary (graph documents, question
//! banks, event frames, reports) is plain text or JSON and is documented on
//! the type that owns it.

pub mod collaboration;
pub mod config;
pub mod dialogue;
pub mod evalkit;
pub mod events;
pub mod fixtures;
pub mod knowledge;
pub mod records;
pub mod reporting;
pub mod store;
pub mod time;
pub mod transcript;
pub mod tsv;

pub use collaboration::{AccessControl, Decision, Grant, Principal, Role, Scope};
pub use dialogue::{AssessmentState, PatientContext, QaResponse, QuestionBank};
pub use events::{EventFrame, EventKind, EventLog};
pub use knowledge::{KnowledgeGraph, RankedResult, TermMatch, VectorIndex};
pub use records::{Alert, AlertKind, CareConfig, HealthRecords};
pub use reporting::MonthlyReport;
pub use store::{FileStore, MemoryStore, StoreAdapter};
pub use time::Timestamp;
pub use transcript::{ConsultationSession, SessionManager};
