//! Consultation sessions: audio chunks in, transcript segments and term
//! highlights out, one serialized ingestion lane per session.
//!
//! Each chunk is transcribed by an [`AsrAdapter`]; every final segment is
//! annotated as soon as it exists and its highlight frames are published
//! right after the segment frame, so subscribers see them in order.

use std::collections::{BTreeSet, HashMap};
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::Arc;
use std::time::{Duration, Instant};

use parking_lot::{Mutex, RwLock};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::collaboration::{AccessControl, Role};
use crate::events::{session_stream, EventKind, EventLog};
use crate::knowledge::{GraphStore, KnowledgeGraph, TermMatch};
use crate::records::model::string_enum;
use crate::store::{StoreAdapter, StoreError};
use crate::time::{self, Timestamp};
use crate::tsv;

/// Chunk-to-highlight budget.
pub const LATENCY_BUDGET: Duration = Duration::from_millis(1400);

string_enum!(SessionState {
    Pre => "pre",
    Live => "live",
    Closed => "closed",
});

string_enum!(Speaker {
    Patient => "patient",
    Physician => "physician",
    Unknown => "unknown",
});

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AudioChunk {
    pub session_id: String,
    pub seq: u64,
    /// Milliseconds since the session opened.
    pub offset_ms: u64,
    pub dialect_hint: Option<String>,
    pub payload: Vec<u8>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TranscriptSegment {
    pub session_id: String,
    pub seq: u64,
    pub chunk_seq: u64,
    pub speaker: Speaker,
    pub text: String,
    /// (start_ms, end_ms) since session start.
    pub span: (u64, u64),
    #[serde(rename = "final")]
    pub is_final: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermHighlight {
    pub session_id: String,
    pub segment_seq: u64,
    #[serde(rename = "match")]
    pub term: TermMatch,
    pub emitted_at: Timestamp,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConsultationSession {
    pub id: String,
    pub patient_id: String,
    pub physician_id: String,
    pub state: SessionState,
    pub segments: Vec<TranscriptSegment>,
    pub highlights: Vec<TermHighlight>,
    pub opened_at: Timestamp,
    pub closed_at: Option<Timestamp>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SidebarEntry {
    pub node_id: String,
    pub canonical_name: String,
    pub first_segment_seq: u64,
}

/// The deterministic part of a session: segments and sidebar.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SessionTranscript {
    pub session_id: String,
    pub segments: Vec<TranscriptSegment>,
    pub sidebar: Vec<SidebarEntry>,
}

/// One recognised stretch of speech, times relative to the chunk.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AsrSegment {
    pub speaker: Speaker,
    pub text: String,
    pub start_ms: u64,
    pub end_ms: u64,
    #[serde(rename = "final")]
    pub is_final: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("speech recognition failed: {0}")]
pub struct AsrError(pub String);

pub trait AsrAdapter: Send + Sync {
    fn transcribe(&self, payload: &[u8], dialect_hint: Option<&str>, deadline: Instant) -> Result<Vec<AsrSegment>, AsrError>;
}

/// Reads the payload as UTF-8 `speaker|text`. Duration is estimated at
/// 300 ms per word. Dialect hints are ignored.
#[derive(Debug, Clone, Copy, Default)]
pub struct ReferenceAsr;

impl AsrAdapter for ReferenceAsr {
    fn transcribe(&self, payload: &[u8], _dialect_hint: Option<&str>, _deadline: Instant) -> Result<Vec<AsrSegment>, AsrError> {
        let text = std::str::from_utf8(payload).map_err(|e| AsrError(format!("payload is not UTF-8: {e}")))?;
        let (speaker, body) = text
            .split_once('|')
            .ok_or_else(|| AsrError("payload is not speaker|text".into()))?;
        let speaker = speaker.trim().parse().unwrap_or(Speaker::Unknown);
        let body = body.trim();
        let words = body.split_whitespace().count().max(1) as u64;
        Ok(vec![AsrSegment {
            speaker,
            text: body.to_owned(),
            start_ms: 0,
            end_ms: words * 300,
            is_final: true,
        }])
    }
}

#[derive(Debug, Error)]
pub enum TranscriptError {
    #[error("unknown participant {0:?}")]
    UnknownParticipant(String),
    #[error("unknown session {0:?}")]
    UnknownSession(String),
    #[error("session {0:?} is not live")]
    NotLive(String),
    #[error("session {0:?} is already closed")]
    AlreadyClosed(String),
    #[error("chunk log line {line}: {message}")]
    ChunkLog { line: usize, message: String },
    #[error(transparent)]
    Store(#[from] StoreError),
    #[error("encoding: {0}")]
    Encoding(#[from] serde_json::Error),
}

/// Result of one chunk.
#[derive(Debug, Clone, PartialEq)]
pub struct IngestOutcome {
    pub segments: Vec<TranscriptSegment>,
    pub highlights: Vec<TermHighlight>,
    /// The chunk's seq had been seen before; nothing was done.
    pub duplicate: bool,
    pub error: Option<String>,
    /// Chunk arrival to last frame emitted.
    pub latency: Duration,
}

pub fn annotate_segment(segment: &TranscriptSegment, graph: &KnowledgeGraph, emitted_at: Timestamp) -> Vec<TermHighlight> {
    if !segment.is_final {
        return Vec::new();
    }
    graph
        .find_terms(&segment.text)
        .into_iter()
        .map(|term| TermHighlight {
            session_id: segment.session_id.clone(),
            segment_seq: segment.seq,
            term,
            emitted_at,
        })
        .collect()
}

#[derive(Debug)]
struct SessionLane {
    session: ConsultationSession,
    seen_chunks: BTreeSet<u64>,
}

/// Owns live sessions. Ingestion is serialized per session and parallel
/// across sessions.
pub struct SessionManager {
    graph: Arc<GraphStore>,
    directory: Arc<AccessControl>,
    events: Arc<EventLog>,
    store: Option<Arc<dyn StoreAdapter>>,
    sessions: RwLock<HashMap<String, Arc<Mutex<SessionLane>>>>,
    next_id: AtomicU64,
}

impl std::fmt::Debug for SessionManager {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("SessionManager")
            .field("sessions", &self.sessions.read().len())
            .finish_non_exhaustive()
    }
}

impl SessionManager {
    pub fn new(graph: Arc<GraphStore>, directory: Arc<AccessControl>, events: Arc<EventLog>) -> Self {
        Self {
            graph,
            directory,
            events,
            store: None,
            sessions: RwLock::new(HashMap::new()),
            next_id: AtomicU64::new(1),
        }
    }

    /// Closed sessions and patient utterances are written to `store`.
    pub fn with_store(mut self, store: Arc<dyn StoreAdapter>) -> Self {
        self.store = Some(store);
        self
    }

    pub fn events(&self) -> &Arc<EventLog> {
        &self.events
    }

    fn lane(&self, id: &str) -> Result<Arc<Mutex<SessionLane>>, TranscriptError> {
        self.sessions
            .read()
            .get(id)
            .cloned()
            .ok_or_else(|| TranscriptError::UnknownSession(id.to_owned()))
    }

    pub fn open_session(&self, patient_id: &str, physician_id: &str, now: Timestamp) -> Result<ConsultationSession, TranscriptError> {
        if self.directory.role_of(patient_id) != Some(Role::Patient) {
            return Err(TranscriptError::UnknownParticipant(patient_id.to_owned()));
        }
        if self.directory.role_of(physician_id) != Some(Role::Physician) {
            return Err(TranscriptError::UnknownParticipant(physician_id.to_owned()));
        }
        let id = format!("s-{}", self.next_id.fetch_add(1, Ordering::SeqCst));
        let session = ConsultationSession {
            id: id.clone(),
            patient_id: patient_id.to_owned(),
            physician_id: physician_id.to_owned(),
            state: SessionState::Live,
            segments: Vec::new(),
            highlights: Vec::new(),
            opened_at: now,
            closed_at: None,
        };
        self.events.ensure(&session_stream(&id));
        self.sessions.write().insert(
            id,
            Arc::new(Mutex::new(SessionLane {
                session: session.clone(),
                seen_chunks: BTreeSet::new(),
            })),
        );
        Ok(session)
    }

    pub fn session(&self, id: &str) -> Result<ConsultationSession, TranscriptError> {
        Ok(self.lane(id)?.lock().session.clone())
    }

    pub fn sessions(&self) -> Vec<ConsultationSession> {
        let lanes: Vec<_> = self.sessions.read().values().cloned().collect();
        let mut out: Vec<_> = lanes.iter().map(|l| l.lock().session.clone()).collect();
        out.sort_by(|a, b| a.opened_at.cmp(&b.opened_at).then_with(|| a.id.cmp(&b.id)));
        out
    }

    pub fn ingest_chunk(&self, chunk: &AudioChunk, asr: &dyn AsrAdapter) -> Result<IngestOutcome, TranscriptError> {
        let arrived = Instant::now();
        let lane = self.lane(&chunk.session_id)?;
        let mut lane = lane.lock();
        if lane.session.state != SessionState::Live {
            return Err(TranscriptError::NotLive(chunk.session_id.clone()));
        }
        if !lane.seen_chunks.insert(chunk.seq) {
            tracing::warn!(session = %chunk.session_id, seq = chunk.seq, "dropping duplicate chunk");
            return Ok(IngestOutcome {
                segments: Vec::new(),
                highlights: Vec::new(),
                duplicate: true,
                error: None,
                latency: arrived.elapsed(),
            });
        }
        let stream = session_stream(&chunk.session_id);
        let graph = self.graph.snapshot();
        let mut outcome = IngestOutcome {
            segments: Vec::new(),
            highlights: Vec::new(),
            duplicate: false,
            error: None,
            latency: Duration::ZERO,
        };
        let recognised = asr.transcribe(&chunk.payload, chunk.dialect_hint.as_deref(), arrived + LATENCY_BUDGET);
        let pieces = match recognised {
            Ok(pieces) => pieces,
            Err(e) => {
                outcome.error = Some(e.to_string());
                vec![AsrSegment {
                    speaker: Speaker::Unknown,
                    text: String::new(),
                    start_ms: 0,
                    end_ms: 0,
                    is_final: false,
                }]
            }
        };
        for piece in pieces {
            let segment = TranscriptSegment {
                session_id: chunk.session_id.clone(),
                seq: lane.session.segments.len() as u64 + 1,
                chunk_seq: chunk.seq,
                speaker: piece.speaker,
                text: piece.text,
                span: (chunk.offset_ms + piece.start_ms, chunk.offset_ms + piece.end_ms.max(piece.start_ms)),
                is_final: piece.is_final,
            };
            self.events.publish(&stream, EventKind::Segment, serde_json::to_value(&segment)?);
            let highlights = annotate_segment(&segment, &graph.graph, time::now());
            for h in &highlights {
                self.events.publish(&stream, EventKind::Highlight, serde_json::to_value(h)?);
            }
            lane.session.segments.push(segment.clone());
            lane.session.highlights.extend(highlights.iter().cloned());
            outcome.segments.push(segment);
            outcome.highlights.extend(highlights);
        }
        if let Some(err) = &outcome.error {
            self.events.publish(
                &stream,
                EventKind::PipelineError,
                serde_json::json!({ "chunk_seq": chunk.seq, "error": err }),
            );
        }
        outcome.latency = arrived.elapsed();
        Ok(outcome)
    }

    pub fn session_transcript(&self, id: &str) -> Result<SessionTranscript, TranscriptError> {
        let lane = self.lane(id)?;
        let lane = lane.lock();
        Ok(transcript_of(&lane.session, &self.graph.snapshot().graph))
    }

    pub fn close_session(&self, id: &str, now: Timestamp) -> Result<ConsultationSession, TranscriptError> {
        let lane = self.lane(id)?;
        let mut lane = lane.lock();
        if lane.session.state == SessionState::Closed {
            return Err(TranscriptError::AlreadyClosed(id.to_owned()));
        }
        lane.session.state = SessionState::Closed;
        lane.session.closed_at = Some(now);
        if let Some(store) = &self.store {
            persist_closed(store.as_ref(), &lane.session)?;
        }
        Ok(lane.session.clone())
    }

    /// Close every live session; used on shutdown.
    pub fn close_all(&self, now: Timestamp) -> Vec<String> {
        let ids: Vec<String> = self.sessions.read().keys().cloned().collect();
        let mut closed: Vec<String> = ids.into_iter().filter(|id| self.close_session(id, now).is_ok()).collect();
        closed.sort();
        closed
    }
}

/// Segments by seq plus the sidebar: each node once, by first mention.
pub fn transcript_of(session: &ConsultationSession, graph: &KnowledgeGraph) -> SessionTranscript {
    let mut sidebar: Vec<SidebarEntry> = Vec::new();
    for h in &session.highlights {
        if sidebar.iter().any(|e| e.node_id == h.term.node_id) {
            continue;
        }
        sidebar.push(SidebarEntry {
            node_id: h.term.node_id.clone(),
            canonical_name: graph
                .node(&h.term.node_id)
                .map(|n| n.canonical_name.clone())
                .unwrap_or_else(|| h.term.matched_surface.clone()),
            first_segment_seq: h.segment_seq,
        });
    }
    SessionTranscript {
        session_id: session.id.clone(),
        segments: session.segments.clone(),
        sidebar,
    }
}

/// A patient utterance kept for later analysis.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Utterance {
    pub at: Timestamp,
    pub session_id: Option<String>,
    pub text: String,
}

pub fn session_key(patient_id: &str) -> String {
    format!("session/{patient_id}")
}

pub fn utterance_key(patient_id: &str) -> String {
    format!("utterance/{patient_id}")
}

fn persist_closed(store: &dyn StoreAdapter, session: &ConsultationSession) -> Result<(), TranscriptError> {
    store.append(&session_key(&session.patient_id), &serde_json::to_string(session)?)?;
    for seg in session.segments.iter().filter(|s| s.is_final && s.speaker == Speaker::Patient) {
        let u = Utterance {
            at: session.opened_at + chrono::Duration::milliseconds(seg.span.0 as i64),
            session_id: Some(session.id.clone()),
            text: seg.text.clone(),
        };
        store.append(&utterance_key(&session.patient_id), &serde_json::to_string(&u)?)?;
    }
    Ok(())
}

/// One line of a recorded chunk log:
/// `C<TAB>seq<TAB>offset_ms<TAB>dialect|-<TAB>payload`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LoggedChunk {
    pub seq: u64,
    pub offset_ms: u64,
    pub dialect_hint: Option<String>,
    pub payload: String,
}

impl LoggedChunk {
    pub fn to_chunk(&self, session_id: &str) -> AudioChunk {
        AudioChunk {
            session_id: session_id.to_owned(),
            seq: self.seq,
            offset_ms: self.offset_ms,
            dialect_hint: self.dialect_hint.clone(),
            payload: self.payload.as_bytes().to_vec(),
        }
    }

    pub fn line(&self) -> String {
        format!(
            "C\t{}\t{}\t{}\t{}",
            self.seq,
            self.offset_ms,
            self.dialect_hint.as_deref().unwrap_or("-"),
            self.payload
        )
    }
}

pub fn parse_chunk_log(text: &str) -> Result<Vec<LoggedChunk>, TranscriptError> {
    tsv::lines(text)
        .map(|line| {
            let err = |message: String| TranscriptError::ChunkLog {
                line: line.number,
                message,
            };
            if line.tag() != "C" || line.fields.len() != 5 {
                return Err(err("expected C<TAB>seq<TAB>offset_ms<TAB>dialect<TAB>payload".into()));
            }
            let f = &line.fields;
            Ok(LoggedChunk {
                seq: f[1].trim().parse().map_err(|_| err(format!("bad seq {:?}", f[1])))?,
                offset_ms: f[2].trim().parse().map_err(|_| err(format!("bad offset {:?}", f[2])))?,
                dialect_hint: Some(f[3].trim()).filter(|d| *d != "-" && !d.is_empty()).map(str::to_owned),
                payload: f[4].to_owned(),
            })
        })
        .collect()
}

#[derive(Debug, Clone)]
pub struct ReplayReport {
    pub transcript: SessionTranscript,
    pub latencies: Vec<Duration>,
}

impl ReplayReport {
    pub fn max_latency(&self) -> Duration {
        self.latencies.iter().copied().max().unwrap_or_default()
    }
}

/// Feed a chunk log through a live session, chunk by chunk.
pub fn replay(
    manager: &SessionManager,
    session_id: &str,
    chunks: &[LoggedChunk],
    asr: &dyn AsrAdapter,
) -> Result<ReplayReport, TranscriptError> {
    let mut latencies = Vec::with_capacity(chunks.len());
    for c in chunks {
        latencies.push(manager.ingest_chunk(&c.to_chunk(session_id), asr)?.latency);
    }
    Ok(ReplayReport {
        transcript: manager.session_transcript(session_id)?,
        latencies,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::collaboration::Principal;
    use crate::knowledge::{Category, Relation, TermEdge, TermNode};
    use crate::time::parse_timestamp;

    fn now() -> Timestamp {
        parse_timestamp("2025-04-10T09:00:00").unwrap()
    }

    fn manager() -> SessionManager {
        let graph = KnowledgeGraph::from_parts(
            vec![
                TermNode::new("metformin", "metformin", Category::Drug, "Lowers blood sugar."),
                TermNode::new("t2dm", "type 2 diabetes mellitus", Category::Condition, "Common diabetes.")
                    .with_surface_forms(["type 2 diabetes"]),
            ],
            vec![TermEdge::new("metformin", Relation::Treats, "t2dm")],
            1,
        )
        .unwrap();
        let acl = AccessControl::new();
        acl.register(Principal { id: "p1".into(), role: Role::Patient }).unwrap();
        acl.register(Principal { id: "dr".into(), role: Role::Physician }).unwrap();
        SessionManager::new(Arc::new(GraphStore::new(graph)), Arc::new(acl), Arc::new(EventLog::new()))
    }

    fn chunk(session: &str, seq: u64, payload: &[u8]) -> AudioChunk {
        AudioChunk {
            session_id: session.into(),
            seq,
            offset_ms: seq * 1000,
            dialect_hint: None,
            payload: payload.to_vec(),
        }
    }

    #[test]
    fn open_validates_participants() {
        let m = manager();
        let s = m.open_session("p1", "dr", now()).unwrap();
        assert_eq!((s.state, s.segments.len()), (SessionState::Live, 0));
        assert!(matches!(m.open_session("p1", "nobody", now()), Err(TranscriptError::UnknownParticipant(_))));
        let s2 = m.open_session("p1", "dr", now()).unwrap();
        assert_ne!(s.id, s2.id);
    }

    #[test]
    fn reference_adapter_segment() {
        let m = manager();
        let s = m.open_session("p1", "dr", now()).unwrap();
        let out = m.ingest_chunk(&chunk(&s.id, 1, b"patient|my sugar is high"), &ReferenceAsr).unwrap();
        assert_eq!(out.segments.len(), 1);
        assert_eq!(out.segments[0].speaker, Speaker::Patient);
        assert!(out.segments[0].is_final);
        assert!(out.highlights.is_empty());
        let dup = m.ingest_chunk(&chunk(&s.id, 1, b"patient|again"), &ReferenceAsr).unwrap();
        assert!(dup.duplicate);
        assert_eq!(m.session(&s.id).unwrap().segments.len(), 1);
    }

    #[test]
    fn highlight_follows_segment() {
        let m = manager();
        let s = m.open_session("p1", "dr", now()).unwrap();
        let out = m.ingest_chunk(&chunk(&s.id, 1, b"physician|start metformin"), &ReferenceAsr).unwrap();
        assert_eq!(out.highlights.len(), 1);
        assert_eq!(out.highlights[0].term.node_id, "metformin");
        let frames = m.events().since(&session_stream(&s.id), 0);
        let kinds: Vec<EventKind> = frames.iter().map(|f| f.kind).collect();
        assert_eq!(kinds, [EventKind::Segment, EventKind::Highlight]);
    }

    #[test]
    fn adapter_failure_emits_error_frame() {
        let m = manager();
        let s = m.open_session("p1", "dr", now()).unwrap();
        let out = m.ingest_chunk(&chunk(&s.id, 1, b"no separator"), &ReferenceAsr).unwrap();
        assert!(out.error.is_some());
        assert_eq!(out.segments[0].speaker, Speaker::Unknown);
        assert!(!out.segments[0].is_final && out.segments[0].text.is_empty());
        let kinds: Vec<EventKind> = m.events().since(&session_stream(&s.id), 0).iter().map(|f| f.kind).collect();
        assert_eq!(kinds, [EventKind::Segment, EventKind::PipelineError]);
        assert!(m.ingest_chunk(&chunk(&s.id, 2, &[0xff, 0xfe]), &ReferenceAsr).unwrap().error.is_some());
    }

    #[test]
    fn sidebar_dedups_by_first_mention() {
        let m = manager();
        let s = m.open_session("p1", "dr", now()).unwrap();
        assert_eq!(m.session_transcript(&s.id).unwrap().sidebar, []);
        let lines = [
            "patient|hello",
            "physician|how are you",
            "physician|metformin helps",
            "patient|ok",
            "physician|type 2 diabetes is common",
            "patient|fine",
            "physician|keep taking metformin",
        ];
        for (i, l) in lines.iter().enumerate() {
            m.ingest_chunk(&chunk(&s.id, i as u64 + 1, l.as_bytes()), &ReferenceAsr).unwrap();
        }
        let t = m.session_transcript(&s.id).unwrap();
        let side: Vec<(&str, u64)> = t.sidebar.iter().map(|e| (e.node_id.as_str(), e.first_segment_seq)).collect();
        assert_eq!(side, [("metformin", 3), ("t2dm", 5)]);
        m.close_session(&s.id, now()).unwrap();
        assert_eq!(m.session_transcript(&s.id).unwrap(), t);
    }

    #[test]
    fn close_rules() {
        let m = manager();
        let s = m.open_session("p1", "dr", now()).unwrap();
        let closed = m.close_session(&s.id, now()).unwrap();
        assert_eq!(closed.state, SessionState::Closed);
        assert_eq!(closed.closed_at, Some(now()));
        assert!(matches!(m.ingest_chunk(&chunk(&s.id, 1, b"patient|x"), &ReferenceAsr), Err(TranscriptError::NotLive(_))));
        assert!(matches!(m.close_session(&s.id, now()), Err(TranscriptError::AlreadyClosed(_))));
        assert!(matches!(m.session_transcript("zz"), Err(TranscriptError::UnknownSession(_))));
    }

    #[test]
    fn annotate_is_pure() {
        let m = manager();
        let seg = TranscriptSegment {
            session_id: "s".into(),
            seq: 1,
            chunk_seq: 1,
            speaker: Speaker::Physician,
            text: "metformin".into(),
            span: (0, 300),
            is_final: true,
        };
        let g = m.graph.snapshot();
        let a = annotate_segment(&seg, &g.graph, now());
        assert_eq!(a.len(), 1);
        assert_eq!(a, annotate_segment(&seg, &g.graph, now()));
        let plain = TranscriptSegment { text: "nothing here".into(), ..seg };
        assert!(annotate_segment(&plain, &g.graph, now()).is_empty());
    }

    #[test]
    fn chunk_log_round_trip() {
        let text = "# demo\nC\t1\t0\t-\tpatient|hello\nC\t2\t2500\tsichuan\tphysician|start metformin\n";
        let chunks = parse_chunk_log(text).unwrap();
        assert_eq!(chunks[1].dialect_hint.as_deref(), Some("sichuan"));
        assert_eq!(chunks[1].line(), "C\t2\t2500\tsichuan\tphysician|start metformin");
        assert!(matches!(parse_chunk_log("C\t1\tx\t-\tp|t"), Err(TranscriptError::ChunkLog { line: 1, .. })));
    }
}
