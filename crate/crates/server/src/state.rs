//! Service state shared by every handler, and startup from a config.

use std::collections::HashMap;
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::{Arc, Mutex};

use thiserror::Error;
use tokio::sync::{broadcast, watch};

use t2md_core::collaboration::{AccessControl, CollabError, Role};
use t2md_core::config::{ConfigError, ServiceConfig, StoreKind};
use t2md_core::dialogue::{AssessmentState, DialogueError, QuestionBank, TemplateGenerator, TextGenerator};
use t2md_core::events::{alert_stream, EventKind, EventLog};
use t2md_core::fixtures;
use t2md_core::knowledge::{GraphStore, KnowledgeError, KnowledgeGraph};
use t2md_core::records::{
    evaluate_care_rules, Alert, AlertBook, HealthRecords, Notification, RecordError, ReminderScheduler, ScheduleConfig,
};
use t2md_core::store::{FileStore, MemoryStore, StoreAdapter, StoreError};
use t2md_core::time::Timestamp;
use t2md_core::transcript::{AsrAdapter, ReferenceAsr, SessionManager};

use crate::auth::{TokenSigner, Users, UsersError};

pub trait Clock: Send + Sync {
    fn now(&self) -> Timestamp;
}

#[derive(Debug, Clone, Copy, Default)]
pub struct SystemClock;

impl Clock for SystemClock {
    fn now(&self) -> Timestamp {
        t2md_core::time::now()
    }
}

/// A clock that only moves when told to.
#[derive(Debug)]
pub struct ManualClock(Mutex<Timestamp>);

impl ManualClock {
    pub fn new(at: Timestamp) -> Self {
        Self(Mutex::new(at))
    }

    pub fn set(&self, at: Timestamp) {
        *self.0.lock().expect("clock lock") = at;
    }

    pub fn advance(&self, by: chrono::Duration) {
        *self.0.lock().expect("clock lock") += by;
    }
}

impl Clock for ManualClock {
    fn now(&self) -> Timestamp {
        *self.0.lock().expect("clock lock")
    }
}

#[derive(Debug, Error)]
pub enum StartupError {
    #[error(transparent)]
    Config(#[from] ConfigError),
    #[error("cannot read {what} file {path}: {message}")]
    File { what: &'static str, path: String, message: String },
    #[error("graph: {0}")]
    Graph(#[from] KnowledgeError),
    #[error("question bank: {0}")]
    Bank(#[from] DialogueError),
    #[error(transparent)]
    Users(#[from] UsersError),
    #[error("directory: {0}")]
    Directory(#[from] CollabError),
    #[error("store: {0}")]
    Store(#[from] StoreError),
    #[error("cannot listen on {addr}: {message}")]
    Bind { addr: String, message: String },
}

fn read(what: &'static str, path: &std::path::Path) -> Result<String, StartupError> {
    std::fs::read_to_string(path).map_err(|e| StartupError::File {
        what,
        path: path.display().to_string(),
        message: e.to_string(),
    })
}

pub struct AppState {
    pub config: ServiceConfig,
    pub clock: Arc<dyn Clock>,
    pub store: Arc<dyn StoreAdapter>,
    pub users: Users,
    pub signer: TokenSigner,
    pub acl: Arc<AccessControl>,
    pub graph: Arc<GraphStore>,
    pub bank: Arc<QuestionBank>,
    pub records: HealthRecords,
    pub alerts: AlertBook,
    pub events: Arc<EventLog>,
    pub sessions: Arc<SessionManager>,
    pub generator: Arc<dyn TextGenerator>,
    pub asr: Arc<dyn AsrAdapter>,
    pub scheduler: ReminderScheduler,
    pub assessments: Mutex<HashMap<String, AssessmentState>>,
    next_assessment: AtomicU64,
    /// `(stream, seq)` of every published frame, for live subscribers.
    pub frames: broadcast::Sender<(String, u64)>,
    shutdown: watch::Sender<bool>,
}

impl std::fmt::Debug for AppState {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("AppState").field("listen", &self.config.listen).finish_non_exhaustive()
    }
}

impl AppState {
    pub fn build(config: ServiceConfig, clock: Arc<dyn Clock>) -> Result<Self, StartupError> {
        config.validate()?;
        let graph = match &config.graph_path {
            Some(p) => KnowledgeGraph::parse_document(&read("graph", p)?)?,
            None => fixtures::bundled_graph(),
        };
        let bank = match &config.question_bank_path {
            Some(p) => {
                let bank = QuestionBank::parse(&read("question bank", p)?)?;
                bank.validate_coverage()?;
                bank
            }
            None => fixtures::bundled_question_bank(),
        };
        let users = match &config.users_path {
            Some(p) => Users::parse(&read("users", p)?)?,
            None => Users::default(),
        };
        let store: Arc<dyn StoreAdapter> = match config.store {
            StoreKind::Memory => Arc::new(MemoryStore::new()),
            StoreKind::File => Arc::new(FileStore::open(&config.store_path)?),
        };
        let acl = Arc::new(AccessControl::with_store(store.clone())?);
        for (p, _) in &users.principals {
            acl.register(p.clone())?;
        }
        for (patient, physician) in &users.assignments {
            acl.assign_physician(patient, physician)?;
        }
        let graph = Arc::new(GraphStore::new(graph));
        let events = Arc::new(EventLog::new());
        for p in acl.principals().into_iter().filter(|p| p.role == Role::Patient) {
            events.ensure(&alert_stream(&p.id));
        }
        let (frames, _) = broadcast::channel(1024);
        let tx = frames.clone();
        events.on_publish(move |f| {
            let _ = tx.send((f.stream.clone(), f.seq));
        });
        let sessions = Arc::new(SessionManager::new(graph.clone(), acl.clone(), events.clone()).with_store(store.clone()));
        let signer = TokenSigner::new(
            &config.auth_secret,
            chrono::Duration::from_std(config.token_ttl).unwrap_or(chrono::Duration::hours(1)),
        );
        Ok(Self {
            signer,
            clock,
            records: HealthRecords::new(store.clone()),
            alerts: AlertBook::new(store.clone()),
            store,
            users,
            acl,
            graph,
            bank: Arc::new(bank),
            events,
            sessions,
            generator: Arc::new(TemplateGenerator),
            asr: Arc::new(ReferenceAsr),
            scheduler: ReminderScheduler::new(),
            assessments: Mutex::new(HashMap::new()),
            next_assessment: AtomicU64::new(1),
            frames,
            shutdown: watch::channel(false).0,
            config,
        })
    }

    pub fn now(&self) -> Timestamp {
        self.clock.now()
    }

    pub fn next_assessment_id(&self) -> String {
        format!("a-{}", self.next_assessment.fetch_add(1, Ordering::SeqCst))
    }

    pub fn patients(&self) -> Vec<String> {
        self.acl
            .principals()
            .into_iter()
            .filter(|p| p.role == Role::Patient)
            .map(|p| p.id)
            .collect()
    }

    /// Run the care rules for `patient_id` and publish a frame for every
    /// alert that is new or gained evidence.
    pub fn evaluate_care(&self, patient_id: &str, now: Timestamp) -> Result<Vec<Alert>, RecordError> {
        let before = self.alerts.open_alerts(patient_id)?;
        let fired = evaluate_care_rules(&self.records.view(), &self.alerts, patient_id, now, &self.config.care)?;
        let mut out = Vec::new();
        for alert in fired {
            if before.iter().any(|b| b.id == alert.id && b.evidence == alert.evidence) {
                out.push(alert);
                continue;
            }
            let recipients: Vec<String> = self
                .acl
                .route_alert(&alert, now)
                .into_iter()
                .map(|n| n.recipient_id)
                .collect();
            let delivered = self.alerts.record_delivery(&alert, &recipients)?;
            self.events.publish(
                &alert_stream(patient_id),
                EventKind::Alert,
                serde_json::json!({ "alert": delivered, "recipients": recipients }),
            );
            out.push(delivered);
        }
        Ok(out)
    }

    /// Periodic work for every patient: care rules, then reminders and
    /// prompts, each delivered once on the patient's alert stream.
    pub fn tick(&self, now: Timestamp) -> Result<usize, RecordError> {
        let cfg = ScheduleConfig {
            reminder_window_min: (self.config.reminder_lead.as_secs() / 60).max(1) as u32,
        };
        let mut published = 0;
        for patient in self.patients() {
            let before = self.events.last_seq(&alert_stream(&patient));
            self.evaluate_care(&patient, now)?;
            for n in self.scheduler.tick(&self.records.view(), &patient, now, &cfg)? {
                let kind = match n {
                    Notification::Reminder(_) => EventKind::Reminder,
                    Notification::Prompt(_) => EventKind::Prompt,
                };
                let payload = serde_json::to_value(&n).expect("notifications serialize");
                self.events.publish(&alert_stream(&patient), kind, payload);
            }
            published += (self.events.last_seq(&alert_stream(&patient)) - before) as usize;
        }
        Ok(published)
    }

    pub fn shutdown_signal(&self) -> watch::Receiver<bool> {
        self.shutdown.subscribe()
    }

    /// Stop live streams and close every live session.
    pub fn begin_shutdown(&self) -> Vec<String> {
        let _ = self.shutdown.send(true);
        self.sessions.close_all(self.now())
    }
}
