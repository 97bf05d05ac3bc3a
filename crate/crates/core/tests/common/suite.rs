//! Store-backed module scenarios. Each one takes a fresh store, checks its
//! own expectations and returns what it observed, so runs against two
//! adapters can be compared line for line.

use std::collections::{BTreeMap, BTreeSet};
use std::sync::Arc;

use chrono::Duration;
use t2md_core::collaboration::{AccessControl, Principal, Role, Scope};
use t2md_core::events::EventLog;
use t2md_core::fixtures;
use t2md_core::knowledge::{GraphStore, ReviewQueue};
use t2md_core::records::{
    adherence, evaluate_care_rules, AlertBook, AlertKind, CareConfig, DoseOutcome, GlucoseContext, GlucoseReading,
    HealthRecords, MedicationEvent, RecordEntry, RecordError,
};
use t2md_core::reporting::{aggregate_feedback, load_interactions, record_interaction, DialogueHistory, Interaction};
use t2md_core::store::{Snapshot, StoreAdapter};
use t2md_core::time::{format_timestamp, Window};
use t2md_core::transcript::{replay, session_key, ReferenceAsr, SessionManager};

use super::*;

pub type Scenario = fn(Arc<dyn StoreAdapter>) -> Vec<String>;

pub const SCENARIOS: &[(&str, Scenario)] = &[
    ("store contract", store_contract),
    ("records append-only", records_append_only),
    ("care rules", care_rules),
    ("alert dedup", alert_dedup),
    ("adherence", adherence_ratio),
    ("access grants", access_grants),
    ("session persistence", session_persistence),
    ("feedback loop", feedback_loop),
    ("fixture month report", fixture_month_report),
];

fn store_contract(store: Arc<dyn StoreAdapter>) -> Vec<String> {
    let mut out = Vec::new();
    let before = store.snapshot();
    let a = store.put("k/a", "1").unwrap();
    let s1 = store.append("s", "first").unwrap();
    let mid = store.snapshot();
    store.put("k/a", "2").unwrap();
    store.put("k/b", "3").unwrap();
    store.append("s", "second").unwrap();
    let after = store.snapshot();
    assert!(before < mid && mid < after);
    assert_eq!(store.get_at("k/a", before), None);
    assert_eq!(store.get_at("k/a", mid).as_deref(), Some("1"));
    assert_eq!(store.get("k/a").as_deref(), Some("2"));
    assert_eq!(store.scan_at("s", mid).len(), 1);
    assert_eq!(store.scan("s").len(), 2);
    assert_eq!(store.keys_at("k/", mid), vec!["k/a".to_owned()]);
    out.push(format!("seqs {a} {s1} {:?} {:?} {:?}", before, mid, after));
    out.push(format!("keys {:?}", store.keys_at("k/", after)));
    for e in store.scan("s") {
        out.push(format!("entry {e:?}"));
    }
    out.push(format!("missing {:?}", store.get_at("nope", Snapshot(u64::MAX))));
    out
}

fn reading(at: Timestamp, value: f64) -> RecordEntry {
    RecordEntry::Glucose(GlucoseReading {
        patient_id: CARE_PATIENT.into(),
        taken_at: at,
        value,
        context: GlucoseContext::Fasting,
    })
}

fn records_append_only(store: Arc<dyn StoreAdapter>) -> Vec<String> {
    let mut out = Vec::new();
    let records = HealthRecords::new(store.clone());
    let t = ts("2025-04-10T07:00:00");
    let first = records.record(reading(t, 7.2)).unwrap();
    let fixed = records.correct(reading(t, 7.0), &first).unwrap();
    let err = records.record(reading(t, 80.0)).unwrap_err();
    assert!(matches!(err, RecordError::Implausible { .. }));
    out.push(err.to_string());
    assert!(matches!(records.correct(reading(t, 7.0), "glucose-999"), Err(RecordError::UnknownRecord(_))));

    let view = records.view();
    let visible: Vec<String> = view.glucose(CARE_PATIENT).unwrap().into_iter().map(|r| r.id).collect();
    assert_eq!(visible, vec![fixed.clone()]);
    // the corrected record is still stored
    let raw: Vec<String> = store.scan(&format!("glucose/{CARE_PATIENT}")).into_iter().map(|e| e.value).collect();
    assert_eq!(raw.len(), 2);
    out.extend(raw);

    let dose = |outcome| {
        RecordEntry::Medication(MedicationEvent {
            patient_id: CARE_PATIENT.into(),
            med_name: "metformin".into(),
            scheduled_at: ts("2025-04-10T08:00:00"),
            outcome,
        })
    };
    records.record(dose(DoseOutcome::Missed)).unwrap();
    let dup = records.record(dose(DoseOutcome::Taken(ts("2025-04-10T08:10:00")))).unwrap_err();
    assert!(matches!(dup, RecordError::DuplicateEvent { .. }));
    out.push(dup.to_string());

    // an old view keeps seeing the old state
    let later = records.record(reading(t + Duration::days(1), 6.5)).unwrap();
    assert_eq!(view.glucose(CARE_PATIENT).unwrap().len(), 1);
    assert_eq!(records.view().glucose(CARE_PATIENT).unwrap().len(), 2);
    out.push(format!("ids {first} {fixed} {later}"));
    out
}

fn alerts_line(alerts: &[t2md_core::Alert]) -> String {
    serde_json::to_string(alerts).unwrap()
}

fn care_rules(store: Arc<dyn StoreAdapter>) -> Vec<String> {
    use SlotState::*;
    let mut out = Vec::new();
    let g = glucose_scenario(store.clone(), 0b10_1100_1110_0101);
    let d = dose_scenario(store.clone(), &[Taken, Missed, Taken, NoEvent, Taken, NoEvent, Missed]);
    let book = AlertBook::new(store.clone());
    let now = dose_now();
    for cfg in care_settings() {
        let alerts = evaluate_care_rules(&g.records.view(), &book, CARE_PATIENT, now, &cfg).unwrap();
        let got: BTreeMap<AlertKind, Vec<_>> = alerts.iter().map(|a| (a.kind, a.evidence.clone())).collect();
        let mut want = glucose_oracle(&g.readings, now, &cfg);
        want.extend(dose_oracle(&d.slots, cfg.consecutive_missed));
        assert_eq!(got, want, "{cfg:?}");
        out.push(alerts_line(&alerts));
        for a in &alerts {
            book.resolve(CARE_PATIENT, a.kind).unwrap();
        }
    }
    out
}

fn alert_dedup(store: Arc<dyn StoreAdapter>) -> Vec<String> {
    let mut out = Vec::new();
    let g = glucose_scenario(store.clone(), 0b00_0000_0000_0011);
    let book = AlertBook::new(store.clone());
    let now = care_origin() + Duration::days(13);
    let cfg = CareConfig::default();
    let first = evaluate_care_rules(&g.records.view(), &book, CARE_PATIENT, now, &cfg).unwrap();
    let second = evaluate_care_rules(&g.records.view(), &book, CARE_PATIENT, now, &cfg).unwrap();
    assert_eq!(first, second);
    let open = book.open_alerts(CARE_PATIENT).unwrap();
    let kinds: BTreeSet<AlertKind> = open.iter().map(|a| a.kind).collect();
    assert_eq!(kinds.len(), open.len());
    out.push(alerts_line(&open));
    book.resolve(CARE_PATIENT, AlertKind::TrackingGap).unwrap();
    let third = evaluate_care_rules(&g.records.view(), &book, CARE_PATIENT, now, &cfg).unwrap();
    assert_ne!(third[0].id, first[0].id);
    out.push(alerts_line(&book.open_alerts(CARE_PATIENT).unwrap()));
    out
}

fn adherence_ratio(store: Arc<dyn StoreAdapter>) -> Vec<String> {
    use SlotState::*;
    let s = dose_scenario(store, &[Taken, Missed, Taken, NoEvent, Taken, Taken, Missed]);
    let window = Window::new(ts("2025-04-10T00:00:00"), ts("2025-04-13T12:00:00"));
    let ratio = adherence(&s.records.view(), CARE_PATIENT, window).unwrap();
    assert!((ratio - 4.0 / 7.0).abs() < 1e-12);
    vec![format!("{ratio:.12}")]
}

fn access_grants(store: Arc<dyn StoreAdapter>) -> Vec<String> {
    let now = ts("2025-04-10T09:00:00");
    let register = |acl: &AccessControl| {
        for (id, role) in [("p1", Role::Patient), ("spouse", Role::FamilyViewer), ("dr", Role::Physician)] {
            acl.register(Principal { id: id.into(), role }).unwrap();
        }
        acl.assign_physician("p1", "dr").unwrap();
    };
    let acl = AccessControl::with_store(store.clone()).unwrap();
    register(&acl);
    acl.grant("p1", "p1", "spouse", BTreeSet::from([Scope::GlucoseTrends, Scope::Alerts]), None, now)
        .unwrap();
    assert!(acl.check_access("spouse", "p1", Scope::GlucoseTrends, now).is_allow());
    assert!(!acl.check_access("spouse", "p1", Scope::Reports, now).is_allow());

    let reopened = AccessControl::with_store(store.clone()).unwrap();
    register(&reopened);
    assert!(reopened.check_access("spouse", "p1", Scope::GlucoseTrends, now).is_allow());
    reopened.revoke("p1", "p1", "spouse", now).unwrap();
    assert!(!reopened.check_access("spouse", "p1", Scope::GlucoseTrends, now).is_allow());

    let third = AccessControl::with_store(store.clone()).unwrap();
    register(&third);
    assert!(third.grants_for("p1").is_empty());

    let mut out = acl.audit_lines();
    out.extend(reopened.audit_lines());
    out.extend(store.scan("audit").into_iter().map(|e| e.value));
    out
}

fn session_persistence(store: Arc<dyn StoreAdapter>) -> Vec<String> {
    let acl = Arc::new(AccessControl::new());
    acl.register(Principal { id: fixtures::FIXTURE_PATIENT.into(), role: Role::Patient }).unwrap();
    acl.register(Principal { id: fixtures::FIXTURE_PHYSICIAN.into(), role: Role::Physician }).unwrap();
    let manager = SessionManager::new(Arc::new(GraphStore::new(graph().clone())), acl, Arc::new(EventLog::new()))
        .with_store(store.clone());
    let opened = ts("2025-04-10T09:00:00");
    let s = manager.open_session(fixtures::FIXTURE_PATIENT, fixtures::FIXTURE_PHYSICIAN, opened).unwrap();
    let chunks = fixtures::chunk_log();
    replay(&manager, &s.id, &chunks[..12], &ReferenceAsr).unwrap();
    assert_eq!(manager.close_all(opened + Duration::minutes(20)), vec![s.id.clone()]);

    let records = HealthRecords::new(store.clone());
    let history = DialogueHistory::load(&records.view(), fixtures::FIXTURE_PATIENT).unwrap();
    assert_eq!(history.sessions.len(), 1);
    assert!(!history.utterances.is_empty());
    let mut out: Vec<String> = store
        .scan(&session_key(fixtures::FIXTURE_PATIENT))
        .into_iter()
        .map(|e| without_emission_times(&e.value))
        .collect();
    out.extend(history.utterances.iter().map(|u| format!("{} {}", format_timestamp(&u.at), u.text)));
    out
}

/// Highlight emission times are wall-clock; everything else is compared.
fn without_emission_times(session: &str) -> String {
    let mut v: serde_json::Value = serde_json::from_str(session).unwrap();
    for h in v["highlights"].as_array_mut().unwrap() {
        h.as_object_mut().unwrap().remove("emitted_at");
    }
    v.to_string()
}

fn feedback_loop(store: Arc<dyn StoreAdapter>) -> Vec<String> {
    let at = ts("2025-04-12T10:00:00");
    for i in 0..3 {
        record_interaction(
            store.as_ref(),
            &Interaction::ExplanationRequest {
                at: at + Duration::hours(i),
                patient_id: "p1".into(),
                node_id: "metformin".into(),
            },
        )
        .unwrap();
        record_interaction(
            store.as_ref(),
            &Interaction::Question {
                at: at + Duration::hours(i),
                patient_id: format!("p{i}"),
                text: "Can I eat fruit?".into(),
            },
        )
        .unwrap();
    }
    let log = load_interactions(store.as_ref()).unwrap();
    assert_eq!(log.len(), 6);
    let queue = ReviewQueue::new();
    let (agg, proposals) = aggregate_feedback(&log, fixtures::fixture_month(), 3, graph(), &queue);
    assert_eq!(proposals.len(), 1);
    assert!(proposals.len() <= agg.misunderstood_terms.len());
    vec![serde_json::to_string(&agg).unwrap(), format!("{proposals:?}")]
}

fn fixture_month_report(store: Arc<dyn StoreAdapter>) -> Vec<String> {
    let loaded = fixtures::load_month(fixtures::MONTH_DOCUMENT, store, &CareConfig::default()).unwrap();
    let report = fixtures::month_report(&loaded).unwrap().to_canonical_json();
    assert_eq!(report, fixtures::GOLDEN_REPORT);
    vec![report]
}

/// Run every scenario with a fresh store from `fresh`.
pub fn run_suite(mut fresh: impl FnMut() -> Arc<dyn StoreAdapter>) -> Vec<(&'static str, Vec<String>)> {
    SCENARIOS.iter().map(|(name, f)| (*name, f(fresh()))).collect()
}
