//! Per-stream event frames with resume-by-sequence.
//!
//! Streams are named `session/<id>` and `alerts/<patient>`. Every stream
//! numbers its frames 1, 2, 3, ... and keeps them all, so a subscriber that
//! reconnects with the last sequence it saw gets exactly the frames after it.

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use parking_lot::{Mutex, RwLock};
use serde::{Deserialize, Serialize};

use crate::records::model::string_enum;

string_enum!(EventKind {
    Segment => "segment",
    Highlight => "highlight",
    PipelineError => "pipeline_error",
    Alert => "alert",
    Prompt => "prompt",
    Reminder => "reminder",
});

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EventFrame {
    #[serde(rename = "type")]
    pub kind: EventKind,
    pub stream: String,
    pub seq: u64,
    pub payload: serde_json::Value,
}

pub fn session_stream(session_id: &str) -> String {
    format!("session/{session_id}")
}

pub fn alert_stream(patient_id: &str) -> String {
    format!("alerts/{patient_id}")
}

type Listener = Arc<dyn Fn(&EventFrame) + Send + Sync>;

#[derive(Default)]
pub struct EventLog {
    streams: Mutex<HashMap<String, Vec<EventFrame>>>,
    listeners: RwLock<Vec<Listener>>,
}

impl fmt::Debug for EventLog {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("EventLog")
            .field("streams", &self.streams.lock().len())
            .finish_non_exhaustive()
    }
}

impl EventLog {
    pub fn new() -> Self {
        Self::default()
    }

    /// Append a frame and notify listeners. Listeners run after the stream
    /// lock is released.
    pub fn publish(&self, stream: &str, kind: EventKind, payload: serde_json::Value) -> EventFrame {
        let frame = {
            let mut streams = self.streams.lock();
            let frames = streams.entry(stream.to_owned()).or_default();
            let frame = EventFrame {
                kind,
                stream: stream.to_owned(),
                seq: frames.len() as u64 + 1,
                payload,
            };
            frames.push(frame.clone());
            frame
        };
        for listener in self.listeners.read().iter() {
            listener(&frame);
        }
        frame
    }

    /// Frames with `seq > after`, in order.
    pub fn since(&self, stream: &str, after: u64) -> Vec<EventFrame> {
        self.streams
            .lock()
            .get(stream)
            .map(|f| f.iter().skip(after as usize).cloned().collect())
            .unwrap_or_default()
    }

    pub fn last_seq(&self, stream: &str) -> u64 {
        self.streams.lock().get(stream).map_or(0, |f| f.len() as u64)
    }

    pub fn exists(&self, stream: &str) -> bool {
        self.streams.lock().contains_key(stream)
    }

    /// Create an empty stream so subscribers can attach before the first frame.
    pub fn ensure(&self, stream: &str) {
        self.streams.lock().entry(stream.to_owned()).or_default();
    }

    pub fn on_publish(&self, listener: impl Fn(&EventFrame) + Send + Sync + 'static) {
        self.listeners.write().push(Arc::new(listener));
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::sync::atomic::{AtomicUsize, Ordering};

    #[test]
    fn resume_after_seq() {
        let log = EventLog::new();
        for i in 0..7 {
            log.publish("session/s1", EventKind::Segment, serde_json::json!({ "i": i }));
        }
        log.publish("session/s2", EventKind::Segment, serde_json::json!({}));
        let rest = log.since("session/s1", 5);
        assert_eq!(rest.iter().map(|f| f.seq).collect::<Vec<_>>(), [6, 7]);
        assert!(log.since("session/s1", 7).is_empty());
        assert_eq!(log.last_seq("session/s2"), 1);
        assert!(log.since("nope", 0).is_empty());
    }

    #[test]
    fn listeners_see_every_frame() {
        let log = EventLog::new();
        let count = Arc::new(AtomicUsize::new(0));
        let c = count.clone();
        log.on_publish(move |_| {
            c.fetch_add(1, Ordering::SeqCst);
        });
        log.publish("alerts/p1", EventKind::Alert, serde_json::Value::Null);
        log.publish("alerts/p1", EventKind::Alert, serde_json::Value::Null);
        assert_eq!(count.load(Ordering::SeqCst), 2);
    }

    #[test]
    fn frame_json_shape() {
        let log = EventLog::new();
        let f = log.publish("session/s1", EventKind::PipelineError, serde_json::json!({"error": "x"}));
        let v = serde_json::to_value(&f).unwrap();
        assert_eq!(v["type"], "pipeline_error");
        assert_eq!(v["seq"], 1);
    }
}
