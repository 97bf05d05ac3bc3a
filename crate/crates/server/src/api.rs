//! Request/response endpoints. Handlers only authenticate, gate through
//! the access chokepoint and delegate to the core modules.

use std::collections::BTreeSet;
use std::sync::Arc;

use axum::extract::{FromRequest, FromRequestParts, Path, Query, Request, State};
use axum::http::request::Parts;
use axum::http::StatusCode;
use axum::response::IntoResponse;
use axum::routing::{delete, get, post};
use axum::{Json, Router};
use chrono::Duration;
use serde::de::DeserializeOwned;
use serde::Deserialize;
use serde_json::{json, Value};

use t2md_core::collaboration::{AllowReason, CollabError, Decision, Role, Scope};
use t2md_core::dialogue::{
    answer_question, start_assessment, summarize_assessment, AnswerKey, FreeTextResponse, GlucoseSummary, GlucoseUnit,
    NextQuestion, PatientContext,
};
use t2md_core::records::{
    adherence, due_reminders, mgdl_to_mmol, GlucoseContext, GlucoseReading, RecordEntry, RecordsView, ScheduleConfig,
    StreamKind,
};
use t2md_core::reporting::{
    build_monthly_report, glucose_trend, record_assessment, record_interaction, AssessmentRecord, DialogueHistory,
    Interaction, LexiconClassifier,
};
use t2md_core::time::{Month, Timestamp, Window};
use t2md_core::transcript::AudioChunk;

use crate::error::{ApiError, ApiResult, ErrorCode};
use crate::state::AppState;

pub type Shared = Arc<AppState>;

/// The authenticated principal behind a request. The token comes from
/// `Authorization: Bearer <token>` or, for stream upgrades, `?token=`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Caller {
    pub id: String,
    pub role: Role,
}

#[derive(Deserialize)]
struct TokenParam {
    token: Option<String>,
}

fn bearer(parts: &Parts) -> Option<String> {
    if let Some(h) = parts.headers.get(axum::http::header::AUTHORIZATION) {
        return h.to_str().ok()?.strip_prefix("Bearer ").map(|t| t.trim().to_owned());
    }
    Query::<TokenParam>::try_from_uri(&parts.uri).ok()?.0.token
}

impl FromRequestParts<Shared> for Caller {
    type Rejection = ApiError;

    async fn from_request_parts(parts: &mut Parts, state: &Shared) -> Result<Self, ApiError> {
        let token = bearer(parts).ok_or_else(|| ApiError::new(ErrorCode::TokenMissing, "no bearer token"))?;
        let claims = state.signer.verify(&token, state.now())?;
        let role = state
            .acl
            .role_of(&claims.sub)
            .ok_or_else(|| ApiError::new(ErrorCode::TokenInvalid, "token principal is not registered"))?;
        Ok(Caller { id: claims.sub, role })
    }
}

/// A JSON body whose rejections use the API error codes.
pub struct Body<T>(pub T);

impl<T: DeserializeOwned, S: Send + Sync> FromRequest<S> for Body<T> {
    type Rejection = ApiError;

    async fn from_request(req: Request, state: &S) -> Result<Self, ApiError> {
        Json::<T>::from_request(req, state)
            .await
            .map(|Json(v)| Body(v))
            .map_err(|e| ApiError::new(ErrorCode::BadRequest, e.body_text()))
    }
}

/// Query parameters whose rejections use the API error codes.
pub struct Params<T>(pub T);

impl<T: DeserializeOwned, S: Send + Sync> FromRequestParts<S> for Params<T> {
    type Rejection = ApiError;

    async fn from_request_parts(parts: &mut Parts, _: &S) -> Result<Self, ApiError> {
        Query::<T>::try_from_uri(&parts.uri)
            .map(|Query(v)| Params(v))
            .map_err(|e| ApiError::new(ErrorCode::BadRequest, e.body_text()))
    }
}

/// Read patient data through the chokepoint: `f` runs on a fresh view only
/// after the check allows.
fn read<T>(s: &AppState, caller: &Caller, patient: &str, scope: Scope, f: impl FnOnce(&RecordsView) -> ApiResult<T>) -> ApiResult<T> {
    s.acl
        .with_access(&caller.id, patient, scope, s.now(), || f(&s.records.view()))
        .map_err(ApiError::from)?
}

/// Writes are open to the patient and treating physicians; grantees only
/// read.
fn write_gate(s: &AppState, caller: &Caller, patient: &str, scope: Scope) -> ApiResult<()> {
    match s.acl.check_access(&caller.id, patient, scope, s.now()) {
        Decision::Deny(reason) => Err(CollabError::Denied(reason).into()),
        Decision::Allow(AllowReason::Granted) => Err(ApiError::new(ErrorCode::ReadOnly, "grants give read access only")),
        Decision::Allow(_) => Ok(()),
    }
}

fn patient_only(caller: &Caller, patient: &str) -> ApiResult<()> {
    if caller.role == Role::Patient && caller.id == patient {
        Ok(())
    } else {
        Err(ApiError::new(ErrorCode::AccessDenied, "only the patient may do this"))
    }
}

fn scope_for(kind: StreamKind) -> Scope {
    match kind {
        StreamKind::Glucose => Scope::GlucoseTrends,
        StreamKind::Schedule | StreamKind::Medication => Scope::MedicationStatus,
        _ => Scope::Reports,
    }
}

pub fn router(state: Shared) -> Router {
    Router::new()
        .route("/health", get(health))
        .route("/auth/login", post(login))
        .route("/me", get(me))
        .route("/patients/{pid}/records", post(add_record))
        .route("/patients/{pid}/records/{rid}/correction", post(correct_record))
        .route("/patients/{pid}/glucose", post(add_glucose).get(glucose))
        .route("/patients/{pid}/medications", get(medications))
        .route("/patients/{pid}/alerts", get(alerts))
        .route("/patients/{pid}/grants", get(grants).post(grant))
        .route("/patients/{pid}/grants/{grantee}", delete(revoke))
        .route("/patients/{pid}/sessions", get(session_history))
        .route("/patients/{pid}/assessments", post(start))
        .route("/patients/{pid}/questions", post(ask))
        .route("/patients/{pid}/reports/{month}", get(report))
        .route("/sessions", post(open_session))
        .route("/sessions/{sid}", get(session))
        .route("/sessions/{sid}/chunks", post(ingest))
        .route("/sessions/{sid}/close", post(close_session))
        .route("/assessments/{aid}/next", get(next_item))
        .route("/assessments/{aid}/responses", post(respond))
        .route("/assessments/{aid}/summary", post(summary))
        .route("/terms/{node}", get(explain))
        .merge(crate::stream::routes())
        .fallback(|| async { ApiError::new(ErrorCode::NotFound, "no such endpoint") })
        .with_state(state)
}

async fn health(State(s): State<Shared>) -> Json<Value> {
    Json(json!({
        "status": "ok",
        "version": env!("CARGO_PKG_VERSION"),
        "graph_version": s.graph.snapshot().graph.version(),
    }))
}

#[derive(Deserialize)]
struct Login {
    principal_id: String,
    password: String,
}

async fn login(State(s): State<Shared>, Body(l): Body<Login>) -> ApiResult<impl IntoResponse> {
    if s.acl.role_of(&l.principal_id).is_none() || !s.users.check_password(&l.principal_id, &l.password) {
        return Err(ApiError::new(ErrorCode::BadCredentials, "unknown principal or wrong password"));
    }
    Ok(Json(s.signer.issue(&l.principal_id, s.now())))
}

async fn me(caller: Caller) -> Json<Value> {
    Json(json!({ "id": caller.id, "role": caller.role }))
}

fn created(id: String) -> (StatusCode, Json<Value>) {
    (StatusCode::CREATED, Json(json!({ "id": id })))
}

fn store_record(s: &AppState, caller: &Caller, pid: &str, entry: RecordEntry, supersedes: Option<&str>) -> ApiResult<String> {
    if entry.patient_id() != pid {
        return Err(ApiError::new(ErrorCode::BadRequest, "record patient_id does not match the path"));
    }
    write_gate(s, caller, pid, scope_for(entry.stream()))?;
    let id = match supersedes {
        Some(old) => s.records.correct(entry, old)?,
        None => s.records.record(entry)?,
    };
    s.evaluate_care(pid, s.now())?;
    Ok(id)
}

async fn add_record(
    State(s): State<Shared>,
    caller: Caller,
    Path(pid): Path<String>,
    Body(entry): Body<RecordEntry>,
) -> ApiResult<impl IntoResponse> {
    Ok(created(store_record(&s, &caller, &pid, entry, None)?))
}

async fn correct_record(
    State(s): State<Shared>,
    caller: Caller,
    Path((pid, rid)): Path<(String, String)>,
    Body(entry): Body<RecordEntry>,
) -> ApiResult<impl IntoResponse> {
    Ok(created(store_record(&s, &caller, &pid, entry, Some(&rid))?))
}

#[derive(Deserialize)]
struct GlucoseIn {
    value: f64,
    /// `mmol/L` (default) or `mg/dL`.
    unit: Option<String>,
    taken_at: Option<Timestamp>,
    context: Option<GlucoseContext>,
}

async fn add_glucose(
    State(s): State<Shared>,
    caller: Caller,
    Path(pid): Path<String>,
    Body(g): Body<GlucoseIn>,
) -> ApiResult<impl IntoResponse> {
    let value = match g.unit.as_deref() {
        None | Some("mmol/L") => g.value,
        Some("mg/dL") => mgdl_to_mmol(g.value),
        Some(other) => return Err(ApiError::new(ErrorCode::ValidationFailed, format!("unknown unit {other:?}"))),
    };
    let entry = RecordEntry::Glucose(GlucoseReading {
        patient_id: pid.clone(),
        taken_at: g.taken_at.unwrap_or_else(|| s.now()),
        value,
        context: g.context.unwrap_or(GlucoseContext::Random),
    });
    Ok(created(store_record(&s, &caller, &pid, entry, None)?))
}

#[derive(Deserialize)]
struct Range {
    from: Option<Timestamp>,
    to: Option<Timestamp>,
}

async fn glucose(
    State(s): State<Shared>,
    caller: Caller,
    Path(pid): Path<String>,
    Params(r): Params<Range>,
) -> ApiResult<Json<Value>> {
    let now = s.now();
    let window = Window::new(r.from.unwrap_or(now - Duration::days(30)), r.to.unwrap_or(now + Duration::seconds(1)));
    read(&s, &caller, &pid, Scope::GlucoseTrends, |view| {
        let series = view.glucose_series(&pid, window)?;
        let readings: Vec<GlucoseReading> = series.iter().map(|r| r.entry.clone()).collect();
        Ok(Json(json!({ "readings": series, "trend": glucose_trend(&readings, window) })))
    })
}

async fn medications(State(s): State<Shared>, caller: Caller, Path(pid): Path<String>) -> ApiResult<Json<Value>> {
    let now = s.now();
    let lead = (s.config.reminder_lead.as_secs() / 60).max(1) as u32;
    read(&s, &caller, &pid, Scope::MedicationStatus, |view| {
        Ok(Json(json!({
            "schedules": view.schedules(&pid)?,
            "events": view.medication_events(&pid)?,
            "adherence_30d": adherence(view, &pid, Window::new(now - Duration::days(30), now))?,
            "upcoming": due_reminders(view, &pid, now, &ScheduleConfig { reminder_window_min: lead })?,
        })))
    })
}

async fn alerts(State(s): State<Shared>, caller: Caller, Path(pid): Path<String>) -> ApiResult<Json<Value>> {
    read(&s, &caller, &pid, Scope::Alerts, |view| Ok(Json(json!(view.open_alerts(&pid)?))))
}

fn owner(s: &AppState, caller: &Caller, pid: &str) -> ApiResult<()> {
    if (caller.role == Role::Patient && caller.id == pid) || s.acl.is_treating(&caller.id, pid) {
        Ok(())
    } else {
        Err(ApiError::new(ErrorCode::AccessDenied, "only the patient or a treating physician manages grants"))
    }
}

async fn grants(State(s): State<Shared>, caller: Caller, Path(pid): Path<String>) -> ApiResult<Json<Value>> {
    owner(&s, &caller, &pid)?;
    Ok(Json(json!(s.acl.grants_for(&pid))))
}

#[derive(Deserialize)]
struct GrantIn {
    grantee_id: String,
    scopes: BTreeSet<Scope>,
    expires_at: Option<Timestamp>,
}

async fn grant(
    State(s): State<Shared>,
    caller: Caller,
    Path(pid): Path<String>,
    Body(g): Body<GrantIn>,
) -> ApiResult<impl IntoResponse> {
    let grant = s.acl.grant(&caller.id, &pid, &g.grantee_id, g.scopes, g.expires_at, s.now())?;
    Ok((StatusCode::CREATED, Json(json!(grant))))
}

async fn revoke(
    State(s): State<Shared>,
    caller: Caller,
    Path((pid, grantee)): Path<(String, String)>,
) -> ApiResult<StatusCode> {
    s.acl.revoke(&caller.id, &pid, &grantee, s.now())?;
    Ok(StatusCode::NO_CONTENT)
}

async fn session_history(State(s): State<Shared>, caller: Caller, Path(pid): Path<String>) -> ApiResult<Json<Value>> {
    read(&s, &caller, &pid, Scope::ConsultationHistory, |view| {
        let h = DialogueHistory::load(view, &pid)?;
        Ok(Json(json!({ "sessions": h.sessions, "assessments": h.assessments })))
    })
}

#[derive(Deserialize)]
struct OpenIn {
    patient_id: String,
}

async fn open_session(State(s): State<Shared>, caller: Caller, Body(o): Body<OpenIn>) -> ApiResult<impl IntoResponse> {
    if caller.role != Role::Physician || !s.acl.is_treating(&caller.id, &o.patient_id) {
        return Err(ApiError::new(ErrorCode::AccessDenied, "only a treating physician opens a consultation"));
    }
    let session = s.sessions.open_session(&o.patient_id, &caller.id, s.now())?;
    Ok((StatusCode::CREATED, Json(json!(session))))
}

fn participant(s: &AppState, caller: &Caller, sid: &str) -> ApiResult<()> {
    let session = s.sessions.session(sid)?;
    if caller.id == session.physician_id || caller.id == session.patient_id {
        Ok(())
    } else {
        Err(ApiError::new(ErrorCode::AccessDenied, "not a participant of this session"))
    }
}

async fn session(State(s): State<Shared>, caller: Caller, Path(sid): Path<String>) -> ApiResult<Json<Value>> {
    let patient = s.sessions.session(&sid)?.patient_id;
    read(&s, &caller, &patient, Scope::ConsultationHistory, |_| {
        let session = s.sessions.session(&sid)?;
        let transcript = s.sessions.session_transcript(&sid)?;
        Ok(Json(json!({ "session": session, "transcript": transcript })))
    })
}

#[derive(Deserialize)]
struct ChunkIn {
    seq: u64,
    offset_ms: u64,
    dialect_hint: Option<String>,
    /// Audio payload; the reference recogniser reads `speaker|text`.
    payload: String,
}

async fn ingest(
    State(s): State<Shared>,
    caller: Caller,
    Path(sid): Path<String>,
    Body(c): Body<ChunkIn>,
) -> ApiResult<Json<Value>> {
    participant(&s, &caller, &sid)?;
    let chunk = AudioChunk {
        session_id: sid,
        seq: c.seq,
        offset_ms: c.offset_ms,
        dialect_hint: c.dialect_hint,
        payload: c.payload.into_bytes(),
    };
    let out = s.sessions.ingest_chunk(&chunk, s.asr.as_ref())?;
    Ok(Json(json!({
        "segments": out.segments,
        "highlights": out.highlights,
        "duplicate": out.duplicate,
        "error": out.error,
    })))
}

async fn close_session(State(s): State<Shared>, caller: Caller, Path(sid): Path<String>) -> ApiResult<Json<Value>> {
    participant(&s, &caller, &sid)?;
    Ok(Json(json!(s.sessions.close_session(&sid, s.now())?)))
}

async fn start(State(s): State<Shared>, caller: Caller, Path(pid): Path<String>) -> ApiResult<impl IntoResponse> {
    patient_only(&caller, &pid)?;
    let state = start_assessment(&pid, &s.bank)?;
    let id = s.next_assessment_id();
    s.assessments.lock().expect("assessment lock").insert(id.clone(), state);
    Ok((StatusCode::CREATED, Json(json!({ "id": id }))))
}

fn with_assessment<T>(
    s: &AppState,
    aid: &str,
    f: impl FnOnce(&mut t2md_core::dialogue::AssessmentState) -> ApiResult<T>,
) -> ApiResult<T> {
    let mut all = s.assessments.lock().expect("assessment lock");
    let state = all.get_mut(aid).ok_or_else(|| ApiError::not_found(format!("assessment {aid:?}")))?;
    f(state)
}

async fn next_item(State(s): State<Shared>, caller: Caller, Path(aid): Path<String>) -> ApiResult<Json<Value>> {
    with_assessment(&s, &aid, |state| {
        patient_only(&caller, &state.patient_id)?;
        Ok(Json(match state.next_question(&s.bank) {
            // the answer key stays on the server
            NextQuestion::Item(q) => json!({
                "done": false,
                "item": {
                    "id": q.id,
                    "text": q.text,
                    "topic": q.topic,
                    "difficulty": q.difficulty,
                    "free_text": q.answer_key == AnswerKey::Free,
                },
            }),
            NextQuestion::Done => json!({ "done": true }),
        }))
    })
}

#[derive(Deserialize)]
struct ResponseIn {
    item_id: String,
    response: String,
}

async fn respond(
    State(s): State<Shared>,
    caller: Caller,
    Path(aid): Path<String>,
    Body(r): Body<ResponseIn>,
) -> ApiResult<Json<Value>> {
    let now = s.now();
    with_assessment(&s, &aid, |state| {
        patient_only(&caller, &state.patient_id)?;
        let grade = state.record_response(&s.bank, &r.item_id, &r.response)?;
        let done = matches!(state.next_question(&s.bank), NextQuestion::Done);
        if done {
            record_assessment(s.store.as_ref(), &AssessmentRecord::from_state(state, now)?)?;
        }
        Ok(Json(json!({ "grade": grade, "done": done, "level": state.current_level })))
    })
}

#[derive(Deserialize, Default)]
struct SummaryIn {
    #[serde(default)]
    notes: Vec<FreeTextResponse>,
}

async fn summary(
    State(s): State<Shared>,
    caller: Caller,
    Path(aid): Path<String>,
    Body(body): Body<SummaryIn>,
) -> ApiResult<Json<Value>> {
    let state = with_assessment(&s, &aid, |state| Ok(state.clone()))?;
    let timeout = s.config.qa.generator_timeout;
    let generator = s.generator.clone();
    read(&s, &caller, &state.patient_id, Scope::ConsultationHistory, |_| {
        Ok(Json(json!(summarize_assessment(&state, &body.notes, &generator, timeout)?)))
    })
}

/// What the records say about the patient, for personalising answers.
fn patient_context(view: &RecordsView, pid: &str, now: Timestamp) -> ApiResult<PatientContext> {
    let mut latest: std::collections::BTreeMap<String, bool> = std::collections::BTreeMap::new();
    for s in view.schedules(pid)? {
        if s.entry.effective_from <= now {
            latest.insert(s.entry.med_name.clone(), s.entry.active);
        }
    }
    let week = view.glucose_series(pid, Window::new(now - Duration::days(7), now + Duration::seconds(1)))?;
    let recent_glucose = week.last().map(|last| GlucoseSummary {
        mean: week.iter().map(|r| r.entry.value).sum::<f64>() / week.len() as f64,
        latest: last.entry.value,
        unit: GlucoseUnit::MmolPerL,
    });
    Ok(PatientContext {
        patient_id: pid.to_owned(),
        medications: latest.into_iter().filter(|(_, active)| *active).map(|(m, _)| m).collect(),
        recent_glucose,
        ..PatientContext::default()
    })
}

#[derive(Deserialize)]
struct QuestionIn {
    question: String,
}

async fn ask(
    State(s): State<Shared>,
    caller: Caller,
    Path(pid): Path<String>,
    Body(q): Body<QuestionIn>,
) -> ApiResult<Json<Value>> {
    patient_only(&caller, &pid)?;
    let now = s.now();
    let ctx = read(&s, &caller, &pid, Scope::Reports, |view| patient_context(view, &pid, now))?;
    record_interaction(
        s.store.as_ref(),
        &Interaction::Question { at: now, patient_id: pid.clone(), text: q.question.clone() },
    )?;
    let knowledge = s.graph.snapshot();
    let generator = s.generator.clone();
    let qa = s.config.qa.clone();
    let answer = tokio::task::spawn_blocking(move || answer_question(&q.question, &ctx, &knowledge, &generator, &qa))
        .await
        .map_err(|e| ApiError::new(ErrorCode::Internal, e.to_string()))?;
    Ok(Json(json!(answer)))
}

async fn explain(State(s): State<Shared>, caller: Caller, Path(node): Path<String>) -> ApiResult<Json<Value>> {
    let card = s.graph.snapshot().graph.explain_term(&node)?;
    if caller.role == Role::Patient {
        record_interaction(
            s.store.as_ref(),
            &Interaction::ExplanationRequest { at: s.now(), patient_id: caller.id, node_id: node },
        )?;
    }
    Ok(Json(json!(card)))
}

#[derive(Deserialize)]
struct ReportQuery {
    #[serde(default)]
    preview: bool,
}

async fn report(
    State(s): State<Shared>,
    caller: Caller,
    Path((pid, month)): Path<(String, String)>,
    Params(q): Params<ReportQuery>,
) -> ApiResult<Json<Value>> {
    let month: Month = month
        .parse()
        .map_err(|e| ApiError::new(ErrorCode::BadRequest, format!("bad month: {e}")))?;
    let now = s.now();
    read(&s, &caller, &pid, Scope::Reports, |view| {
        let report = build_monthly_report(&pid, month, view, &LexiconClassifier, now, q.preview)?;
        Ok(Json(serde_json::from_str(&report.to_canonical_json()).expect("canonical json parses")))
    })
}
