//! Independent oracles and scenario builders shared by the integration
//! suites. Nothing here calls the code path it is used to check.

#![allow(dead_code)]

pub mod suite;

use std::collections::{BTreeMap, BTreeSet};
use std::sync::{Arc, OnceLock};

use chrono::{Duration, NaiveTime};
use t2md_core::dialogue::bank::{MAX_LEVEL, MIN_LEVEL};
use t2md_core::dialogue::Grade;
use t2md_core::fixtures;
use t2md_core::knowledge::{embed, KnowledgeGraph, Relation, TermEdge, VectorIndex};
use t2md_core::records::{
    AlertKind, CareConfig, DoseOutcome, EvidenceRef, GlucoseContext, GlucoseReading, HealthRecords, MedicationEvent,
    MedicationSchedule, RecordEntry,
};
use t2md_core::store::StoreAdapter;
use t2md_core::time::{parse_timestamp, Timestamp};
use t2md_core::MemoryStore;

pub fn ts(s: &str) -> Timestamp {
    parse_timestamp(s).unwrap()
}

pub fn graph() -> &'static KnowledgeGraph {
    static GRAPH: OnceLock<KnowledgeGraph> = OnceLock::new();
    GRAPH.get_or_init(fixtures::bundled_graph)
}

pub fn memory() -> Arc<dyn StoreAdapter> {
    Arc::new(MemoryStore::new())
}

// ---------------------------------------------------------------- retrieval

/// Fused score of every document named in any list, by scanning each list
/// for the document's position.
pub fn brute_rrf(lists: &[Vec<String>], rrf_k: f64, k: usize) -> Vec<(String, f64)> {
    let docs: BTreeSet<&String> = lists.iter().flatten().collect();
    let mut fused: Vec<(String, f64)> = docs
        .into_iter()
        .map(|d| {
            let mut score = 0.0;
            for list in lists {
                if let Some(pos) = list.iter().position(|x| x == d) {
                    score += 1.0 / (rrf_k + pos as f64 + 1.0);
                }
            }
            (d.clone(), score)
        })
        .collect();
    fused.sort_by(|a, b| b.1.partial_cmp(&a.1).unwrap().then_with(|| a.0.cmp(&b.0)));
    fused.truncate(k);
    fused
}

fn ranked(mut scored: Vec<(String, f64)>) -> Vec<String> {
    scored.sort_by(|a, b| b.1.partial_cmp(&a.1).unwrap().then_with(|| a.0.cmp(&b.0)));
    scored.into_iter().map(|(d, _)| d).collect()
}

/// Both hybrid lists materialised from scratch, then fused.
pub fn hybrid_oracle(query: &str, graph: &KnowledgeGraph, index: &VectorIndex, k: usize, rrf_k: f64) -> Vec<(String, f64)> {
    let seeds: BTreeSet<String> = graph.find_terms(query).into_iter().map(|m| m.node_id).collect();
    let mut near = BTreeSet::new();
    for e in graph.edges() {
        if seeds.contains(&e.src) {
            near.insert(e.dst.clone());
        }
        if seeds.contains(&e.dst) {
            near.insert(e.src.clone());
        }
    }
    let graph_list = ranked(
        index
            .documents()
            .filter_map(|d| {
                let node = d.node_id.as_ref()?;
                if seeds.contains(node) {
                    Some((d.doc_id.clone(), 1.0))
                } else if near.contains(node) {
                    Some((d.doc_id.clone(), 0.5))
                } else {
                    None
                }
            })
            .collect(),
    );
    let q = embed(query);
    let mut cosines: Vec<(String, f64)> = index
        .documents()
        .map(|d| {
            let dot: f64 = q.values().iter().zip(d.vector.values()).map(|(a, b)| a * b).sum();
            (d.doc_id.clone(), dot.max(0.0))
        })
        .collect();
    cosines.sort_by(|a, b| b.1.partial_cmp(&a.1).unwrap().then_with(|| a.0.cmp(&b.0)));
    cosines.truncate(k.max(1));
    let vector_list: Vec<String> = cosines.into_iter().filter(|c| c.1 > 0.0).map(|c| c.0).collect();
    brute_rrf(&[graph_list, vector_list], rrf_k, k)
}

/// Induced subgraph of the fixture graph on `ids`.
pub fn fixture_subgraph(ids: &BTreeSet<String>) -> KnowledgeGraph {
    let g = graph();
    let nodes = ids.iter().map(|id| g.node(id).unwrap().clone()).collect();
    let edges = g
        .edges()
        .iter()
        .filter(|e| ids.contains(&e.src) && ids.contains(&e.dst))
        .cloned()
        .collect();
    KnowledgeGraph::from_parts(nodes, edges, 1).unwrap()
}

/// Reachable set by `depth` rounds of whole-set expansion.
pub fn reach_oracle(edges: &[TermEdge], allowed: &BTreeSet<Relation>, seed: &str, depth: usize) -> BTreeSet<String> {
    let mut set = BTreeSet::from([seed.to_owned()]);
    for _ in 0..depth {
        let mut next = set.clone();
        for e in edges.iter().filter(|e| allowed.contains(&e.relation)) {
            if set.contains(&e.src) {
                next.insert(e.dst.clone());
            }
            if set.contains(&e.dst) {
                next.insert(e.src.clone());
            }
        }
        set = next;
    }
    set
}

// -------------------------------------------------------------- statistics

/// 2U by pairwise comparison: 2 per win of `a`, 1 per tie.
pub fn doubled_u_pairwise(a: &[f64], b: &[f64]) -> i64 {
    let mut u2 = 0;
    for x in a {
        for y in b {
            if x > y {
                u2 += 2;
            } else if x == y {
                u2 += 1;
            }
        }
    }
    u2
}

/// For every labelling of `pool` with `n_a` members in group A: the mask
/// and its |2U - n_a n_b|.
pub fn labelling_deviations(pool: &[f64], n_a: usize) -> Vec<(u32, i64)> {
    let n = pool.len();
    let nab = (n_a * (n - n_a)) as i64;
    (0u32..1 << n)
        .filter(|m| m.count_ones() as usize == n_a)
        .map(|mask| {
            let (a, b) = split_by_mask(pool, mask);
            (mask, (doubled_u_pairwise(&a, &b) - nab).abs())
        })
        .collect()
}

pub fn split_by_mask(pool: &[f64], mask: u32) -> (Vec<f64>, Vec<f64>) {
    let mut a = Vec::new();
    let mut b = Vec::new();
    for (i, v) in pool.iter().enumerate() {
        if mask >> i & 1 == 1 {
            a.push(*v);
        } else {
            b.push(*v);
        }
    }
    (a, b)
}

/// Two-sided exact p of the observed split, by counting labellings at
/// least as extreme.
pub fn enumeration_p(a: &[f64], b: &[f64]) -> f64 {
    let pool: Vec<f64> = a.iter().chain(b).copied().collect();
    let nab = (a.len() * b.len()) as i64;
    let observed = (doubled_u_pairwise(a, b) - nab).abs();
    let all = labelling_deviations(&pool, a.len());
    let tail = all.iter().filter(|(_, d)| *d >= observed).count();
    tail as f64 / all.len() as f64
}

/// Least-squares slope as the (x_i - x_j)^2-weighted mean of all pairwise
/// slopes.
pub fn pairwise_slope(points: &[(f64, f64)]) -> Option<f64> {
    let mut num = 0.0;
    let mut den = 0.0;
    for i in 0..points.len() {
        for j in 0..i {
            let dx = points[i].0 - points[j].0;
            let dy = points[i].1 - points[j].1;
            num += dx * dy;
            den += dx * dx;
        }
    }
    (den > 0.0).then(|| num / den)
}

// -------------------------------------------------------------- assessment

/// Level after each graded answer, starting at 2 and clamped to 1..=3.
pub fn fold_levels(grades: &[Grade]) -> Vec<u8> {
    grades
        .iter()
        .scan(2i16, |level, g| {
            *level += match g {
                Grade::Correct => 1,
                Grade::Incorrect => -1,
                Grade::NotApplicable => 0,
            };
            *level = (*level).clamp(MIN_LEVEL as i16, MAX_LEVEL as i16);
            Some(*level as u8)
        })
        .collect()
}

/// A response the key accepts, and one it rejects.
pub fn answers_for(key: &t2md_core::dialogue::AnswerKey) -> (String, String) {
    use t2md_core::dialogue::AnswerKey;
    match key {
        AnswerKey::Choice { accepted } => (accepted.iter().next().unwrap().clone(), "zzz".into()),
        AnswerKey::Range { lo, .. } => (lo.to_string(), "-1000".into()),
        AnswerKey::Free => ("anything".into(), "anything".into()),
    }
}

// -------------------------------------------------------------- care rules

pub const CARE_PATIENT: &str = "p1";

/// Day 0 of every care scenario.
pub fn care_origin() -> Timestamp {
    ts("2025-04-01T00:00:00")
}

/// Per-day reading values; only the days inside the last 24 h matter for
/// the high-reading rule and they straddle every threshold in the grid.
pub const DAY_VALUES: [f64; 14] = [7.0, 14.5, 13.9, 8.2, 16.0, 6.1, 13.8, 9.0, 15.1, 7.7, 12.0, 14.0, 15.0, 13.9];

pub struct GlucoseScenario {
    pub records: HealthRecords,
    /// (taken_at, value, record id)
    pub readings: Vec<(Timestamp, f64, String)>,
}

/// One 08:00 reading on every day whose bit is set in `mask`.
pub fn glucose_scenario(store: Arc<dyn StoreAdapter>, mask: u16) -> GlucoseScenario {
    let records = HealthRecords::new(store);
    let mut readings = Vec::new();
    for day in 0..14 {
        if mask >> day & 1 == 0 {
            continue;
        }
        let at = care_origin() + Duration::days(day) + Duration::hours(8);
        let value = DAY_VALUES[day as usize];
        let id = records
            .record(RecordEntry::Glucose(GlucoseReading {
                patient_id: CARE_PATIENT.into(),
                taken_at: at,
                value,
                context: GlucoseContext::Random,
            }))
            .unwrap();
        readings.push((at, value, id));
    }
    GlucoseScenario { records, readings }
}

/// The glucose rules read literally: a gap when the most recent reading
/// at or before `now` is at least `gap_days` old (no reading at all means
/// nothing to measure from), and every reading in (now - 24 h, now] at or
/// above the threshold.
pub fn glucose_oracle(
    readings: &[(Timestamp, f64, String)],
    now: Timestamp,
    cfg: &CareConfig,
) -> BTreeMap<AlertKind, Vec<EvidenceRef>> {
    let mut out = BTreeMap::new();
    let past: Vec<&(Timestamp, f64, String)> = readings.iter().filter(|r| r.0 <= now).collect();
    if let Some(latest) = past.iter().max_by_key(|r| r.0) {
        let age_days = (now - latest.0).num_seconds() as f64 / 86_400.0;
        if age_days >= cfg.gap_days {
            out.insert(AlertKind::TrackingGap, vec![EvidenceRef::Record { id: latest.2.clone() }]);
        }
    }
    let mut high: Vec<EvidenceRef> = past
        .iter()
        .filter(|r| now - r.0 < Duration::hours(24) && r.1 >= cfg.high_mmol)
        .map(|r| EvidenceRef::Record { id: r.2.clone() })
        .collect();
    if !high.is_empty() {
        high.sort();
        out.insert(AlertKind::Hyperglycemia, high);
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SlotState {
    Taken,
    Missed,
    NoEvent,
}

pub const SLOT_STATES: [SlotState; 3] = [SlotState::Taken, SlotState::Missed, SlotState::NoEvent];

/// When the medication scenarios are evaluated.
pub fn dose_now() -> Timestamp {
    ts("2025-04-13T15:00:00")
}

/// The seven slots of a twice-daily schedule that starts 2025-04-10 and
/// are at least six hours overdue at [`dose_now`].
pub fn dose_slots() -> Vec<Timestamp> {
    let mut out = Vec::new();
    for day in 10..=13 {
        for hour in [8, 20] {
            let at = ts(&format!("2025-04-{day:02}T{hour:02}:00:00"));
            if at + Duration::hours(6) <= dose_now() {
                out.push(at);
            }
        }
    }
    out
}

pub struct DoseScenario {
    pub records: HealthRecords,
    /// (slot, state, event record id)
    pub slots: Vec<(Timestamp, SlotState, Option<String>)>,
}

pub fn dose_scenario(store: Arc<dyn StoreAdapter>, states: &[SlotState]) -> DoseScenario {
    let records = HealthRecords::new(store);
    records
        .record(RecordEntry::Schedule(MedicationSchedule {
            patient_id: CARE_PATIENT.into(),
            med_name: "metformin".into(),
            dose: "500 mg".into(),
            purpose: "lower blood sugar".into(),
            times_of_day: vec![NaiveTime::from_hms_opt(8, 0, 0).unwrap(), NaiveTime::from_hms_opt(20, 0, 0).unwrap()],
            active: true,
            effective_from: ts("2025-04-10T00:00:00"),
        }))
        .unwrap();
    let mut slots = Vec::new();
    for (at, state) in dose_slots().into_iter().zip(states) {
        let outcome = match state {
            SlotState::Taken => Some(DoseOutcome::Taken(at)),
            SlotState::Missed => Some(DoseOutcome::Missed),
            SlotState::NoEvent => None,
        };
        let id = outcome.map(|outcome| {
            records
                .record(RecordEntry::Medication(MedicationEvent {
                    patient_id: CARE_PATIENT.into(),
                    med_name: "metformin".into(),
                    scheduled_at: at,
                    outcome,
                }))
                .unwrap()
        });
        slots.push((at, *state, id));
    }
    DoseScenario { records, slots }
}

/// Walk back from the latest overdue slot until a taken dose; alert when
/// the walk covers at least `threshold` slots.
pub fn dose_oracle(slots: &[(Timestamp, SlotState, Option<String>)], threshold: u32) -> BTreeMap<AlertKind, Vec<EvidenceRef>> {
    let mut run = Vec::new();
    for (at, state, id) in slots.iter().rev() {
        match state {
            SlotState::Taken => break,
            SlotState::Missed => run.push(EvidenceRef::Record { id: id.clone().unwrap() }),
            SlotState::NoEvent => run.push(EvidenceRef::MissingDose {
                med_name: "metformin".into(),
                scheduled_at: *at,
            }),
        }
    }
    let mut out = BTreeMap::new();
    if run.len() >= threshold as usize {
        run.sort();
        out.insert(AlertKind::MissedMedication, run);
    }
    out
}

/// Every state assignment of `n` slots, in base-3 counting order.
pub fn all_slot_patterns(n: usize) -> Vec<Vec<SlotState>> {
    (0..3usize.pow(n as u32))
        .map(|mut code| {
            (0..n)
                .map(|_| {
                    let s = SLOT_STATES[code % 3];
                    code /= 3;
                    s
                })
                .collect()
        })
        .collect()
}

pub fn care(gap_days: f64, high_mmol: f64, consecutive_missed: u32) -> CareConfig {
    CareConfig {
        gap_days,
        high_mmol,
        consecutive_missed,
    }
}

/// The defaults and the two alternative settings every care check runs at.
pub fn care_settings() -> [CareConfig; 3] {
    [CareConfig::default(), care(5.0, 12.0, 3), care(1.0, 15.0, 1)]
}
