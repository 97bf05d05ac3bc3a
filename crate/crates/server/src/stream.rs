//! Live event streams over WebSocket.
//!
//! `GET /ws/sessions/{id}` and `GET /ws/alerts/{patient}` upgrade to a
//! socket that sends every frame of the stream as JSON text, in sequence
//! order. `?after=<seq>` resumes after the last frame a client saw, so a
//! reconnect gets neither gaps nor duplicates. The token may be passed as
//! `?token=` since browsers cannot set headers on an upgrade.

use axum::extract::ws::{Message, WebSocket, WebSocketUpgrade};
use axum::extract::{Path, State};
use axum::response::Response;
use axum::routing::get;
use axum::Router;
use serde::Deserialize;
use tokio::sync::broadcast::error::RecvError;

use t2md_core::collaboration::{CollabError, Decision, Role, Scope};
use t2md_core::events::{alert_stream, session_stream};

use crate::api::{Caller, Params, Shared};
use crate::error::{ApiError, ApiResult};

pub fn routes() -> Router<Shared> {
    Router::new()
        .route("/ws/sessions/{sid}", get(session_socket))
        .route("/ws/alerts/{pid}", get(alert_socket))
}

#[derive(Deserialize)]
struct Resume {
    #[serde(default)]
    after: u64,
}

fn gate(s: &Shared, caller: &Caller, patient: &str, scope: Scope) -> ApiResult<()> {
    match s.acl.check_access(&caller.id, patient, scope, s.now()) {
        Decision::Allow(_) => Ok(()),
        Decision::Deny(reason) => Err(CollabError::Denied(reason).into()),
    }
}

async fn session_socket(
    State(s): State<Shared>,
    caller: Caller,
    Path(sid): Path<String>,
    Params(r): Params<Resume>,
    ws: WebSocketUpgrade,
) -> ApiResult<Response> {
    let session = s.sessions.session(&sid)?;
    gate(&s, &caller, &session.patient_id, Scope::ConsultationHistory)?;
    let stream = session_stream(&sid);
    Ok(ws.on_upgrade(move |socket| pump(socket, s, stream, r.after)))
}

async fn alert_socket(
    State(s): State<Shared>,
    caller: Caller,
    Path(pid): Path<String>,
    Params(r): Params<Resume>,
    ws: WebSocketUpgrade,
) -> ApiResult<Response> {
    if s.acl.role_of(&pid) != Some(Role::Patient) {
        return Err(ApiError::not_found(format!("alert stream for {pid:?}")));
    }
    gate(&s, &caller, &pid, Scope::Alerts)?;
    let stream = alert_stream(&pid);
    Ok(ws.on_upgrade(move |socket| pump(socket, s, stream, r.after)))
}

/// Send the backlog after `after`, then each new frame as it is published.
/// The subscription is taken before the backlog is read so nothing
/// published in between is missed.
async fn pump(mut socket: WebSocket, s: Shared, stream: String, mut after: u64) {
    let mut wake = s.frames.subscribe();
    let mut stop = s.shutdown_signal();
    if *stop.borrow() {
        return;
    }
    loop {
        for frame in s.events.since(&stream, after) {
            let text = serde_json::to_string(&frame).expect("frames serialize");
            if socket.send(Message::Text(text.into())).await.is_err() {
                return;
            }
            after = frame.seq;
        }
        loop {
            tokio::select! {
                woke = wake.recv() => match woke {
                    Ok((name, seq)) if name == stream && seq > after => break,
                    Ok(_) => continue,
                    Err(RecvError::Lagged(_)) => break,
                    Err(RecvError::Closed) => return,
                },
                incoming = socket.recv() => match incoming {
                    Some(Ok(Message::Close(_))) | Some(Err(_)) | None => return,
                    Some(Ok(_)) => continue,
                },
                _ = stop.changed() => {
                    let _ = socket.send(Message::Close(None)).await;
                    return;
                }
            }
        }
    }
}
