//! Shipped data and the generators that produce it.
//!
//! Every file under `data/` is the output of a function in this module.
//! The committed copies are what the service and tests load; a test checks
//! that regenerating gives the same bytes.

mod bank;
mod derived;
mod seeds;

use std::collections::BTreeSet;
use std::sync::Arc;

use chrono::{Datelike, NaiveTime};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::dialogue::{QuestionBank, Topic};
use crate::knowledge::{normalize_str, Category, KnowledgeGraph, Relation, TermEdge, TermNode};
use crate::records::{
    evaluate_care_rules, AlertBook, CareConfig, DoseOutcome, GlucoseContext, GlucoseReading, HealthRecords,
    MedicationEvent, MedicationSchedule, RecordEntry, SleepEntry, SymptomCode, SymptomEntry,
};
use crate::reporting::{build_monthly_report, record_assessment, record_utterance, AssessmentRecord, LexiconClassifier};
use crate::store::{MemoryStore, StoreAdapter};
use crate::time::{format_timestamp, parse_clock, parse_timestamp, Month, Timestamp};
use crate::transcript::{LoggedChunk, Utterance};
use crate::tsv;

pub const GRAPH_FILE: &str = "graph.tsv";
pub const QUESTION_BANK_FILE: &str = "question_bank.tsv";
pub const CORPUS_FILE: &str = "term_corpus.tsv";
pub const CHUNK_LOG_FILE: &str = "demo_session.tsv";
pub const MONTH_FILE: &str = "fixture_month.tsv";
pub const GOLDEN_FILE: &str = "golden_report.json";

pub const GRAPH_DOCUMENT: &str = include_str!("../../data/graph.tsv");
pub const QUESTION_BANK_DOCUMENT: &str = include_str!("../../data/question_bank.tsv");
pub const CORPUS_DOCUMENT: &str = include_str!("../../data/term_corpus.tsv");
pub const CHUNK_LOG_DOCUMENT: &str = include_str!("../../data/demo_session.tsv");
pub const MONTH_DOCUMENT: &str = include_str!("../../data/fixture_month.tsv");
pub const GOLDEN_REPORT: &str = include_str!("../../data/golden_report.json");

pub const CORPUS_SIZE: usize = 200;
pub const CHUNK_LOG_SIZE: usize = 50;
pub const FIXTURE_PATIENT: &str = "p001";
pub const FIXTURE_PHYSICIAN: &str = "dr01";

const SEED: u64 = 0x7d2;

#[derive(Debug, Error)]
pub enum FixtureError {
    #[error("{0}")]
    Invalid(String),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error(transparent)]
    Knowledge(#[from] crate::knowledge::KnowledgeError),
    #[error(transparent)]
    Dialogue(#[from] crate::dialogue::DialogueError),
    #[error(transparent)]
    Record(#[from] crate::records::RecordError),
    #[error(transparent)]
    Report(#[from] crate::reporting::ReportError),
    #[error(transparent)]
    Store(#[from] crate::store::StoreError),
}

fn seed_node(seed: &seeds::Seed) -> Result<TermNode, FixtureError> {
    let (id, canonical, aliases, category, explanation) = *seed;
    let category: Category = category.parse().map_err(FixtureError::Invalid)?;
    Ok(TermNode::new(id, canonical, category, explanation).with_surface_forms(aliases.iter().copied()))
}

/// Build the graph from the seed tables and derived families. Normalised
/// surface forms are unique across nodes.
pub fn build_graph() -> Result<KnowledgeGraph, FixtureError> {
    let tables = [
        seeds::CONDITIONS,
        seeds::DRUG_CLASSES,
        seeds::DRUGS,
        seeds::SYMPTOMS,
        seeds::PROCEDURES,
        seeds::LIFESTYLE,
        seeds::METRICS,
        derived::DEVICES,
    ];
    let mut nodes = Vec::new();
    for table in tables {
        for seed in table {
            nodes.push(seed_node(seed)?);
        }
    }
    let names: std::collections::HashMap<String, String> =
        nodes.iter().map(|n| (n.id.clone(), n.canonical_name.clone())).collect();
    let d = derived::derive(|id| names.get(id).cloned().unwrap_or_else(|| panic!("unknown seed {id}")));
    nodes.extend(d.nodes);
    let mut edges = Vec::new();
    for (src, rel, dst) in seeds::SEED_EDGES {
        let relation: Relation = rel.parse().map_err(FixtureError::Invalid)?;
        edges.push(TermEdge::new(*src, relation, *dst));
    }
    edges.extend(d.edges);
    let mut seen = std::collections::HashMap::new();
    let mut clashes = Vec::new();
    for n in &nodes {
        for s in &n.surface_forms {
            if let Some(other) = seen.insert(normalize_str(s), n.id.clone()) {
                if other != n.id {
                    clashes.push(format!("{s:?} ({other}, {})", n.id));
                }
            }
        }
    }
    if !clashes.is_empty() {
        return Err(FixtureError::Invalid(format!("shared surface forms: {}", clashes.join(", "))));
    }
    Ok(KnowledgeGraph::from_parts(nodes, edges, 1)?)
}

/// The committed graph document, parsed.
pub fn bundled_graph() -> KnowledgeGraph {
    KnowledgeGraph::parse_document(GRAPH_DOCUMENT).expect("bundled graph document is valid")
}

pub fn build_question_bank() -> Result<QuestionBank, FixtureError> {
    let mut doc = String::new();
    for (id, topic, level, text, key) in bank::QUESTIONS {
        doc.push_str(&format!("Q\t{id}\t{topic}\t{level}\t{text}\t{key}\n"));
    }
    let bank = QuestionBank::parse(&doc)?;
    bank.validate_coverage()?;
    Ok(bank)
}

pub fn bundled_question_bank() -> QuestionBank {
    QuestionBank::parse(QUESTION_BANK_DOCUMENT).expect("bundled question bank is valid")
}

/// One annotated corpus sentence: the expected `(node id, char span)` list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CorpusSentence {
    pub text: String,
    pub expected: Vec<(String, (usize, usize))>,
}

impl CorpusSentence {
    pub fn line(&self) -> String {
        let ann: Vec<String> = self.expected.iter().map(|(id, (s, e))| format!("{id}@{s}-{e}")).collect();
        format!("S\t{}\t{}", self.text, ann.join("|"))
    }
}

pub fn parse_corpus(text: &str) -> Result<Vec<CorpusSentence>, FixtureError> {
    tsv::lines(text)
        .map(|line| {
            let err = |message: &str| FixtureError::Parse { line: line.number, message: message.into() };
            if line.tag() != "S" || line.fields.len() != 3 {
                return Err(err("expected S<TAB>sentence<TAB>annotations"));
            }
            let expected = tsv::split_list(line.fields[2])
                .into_iter()
                .map(|a| {
                    let (id, span) = a.rsplit_once('@').ok_or_else(|| err("annotation without @"))?;
                    let (s, e) = span.split_once('-').ok_or_else(|| err("span without -"))?;
                    let s: usize = s.parse().map_err(|_| err("bad span start"))?;
                    let e: usize = e.parse().map_err(|_| err("bad span end"))?;
                    Ok::<_, FixtureError>((id.to_owned(), (s, e)))
                })
                .collect::<Result<_, _>>()?;
            Ok(CorpusSentence { text: line.fields[1].to_owned(), expected })
        })
        .collect()
}

const TEMPLATES: &[&str] = &[
    "Yesterday the nurse talked about {}.",
    "I asked whether {} is linked to {}.",
    "She said {} and {} should be discussed next time.",
    "Please write down {} for me.",
    "Is {} something I should worry about?",
    "My neighbour mentioned {}, then {}, then {}.",
    "We read a leaflet on {} today.",
    "医生说{}很重要。",
    "他问{}和{}有什么关系。",
    "Can you explain {} again, slowly?",
    "The leaflet lists {}; the poster lists {}.",
    "({}) was circled on the form.",
];

fn latin_word(c: char) -> bool {
    c.is_ascii_alphanumeric()
}

/// Every place a surface form occurs in `chars` without cutting a Latin
/// word, by direct comparison. Independent of the matcher.
fn naive_occurrences(chars: &[char], surfaces: &[(Vec<char>, String)]) -> Vec<(usize, usize, String)> {
    let lower: Vec<char> = chars.iter().map(|c| c.to_ascii_lowercase()).collect();
    let mut out = Vec::new();
    for (form, id) in surfaces {
        if form.is_empty() || form.len() > lower.len() {
            continue;
        }
        for start in 0..=lower.len() - form.len() {
            let end = start + form.len();
            if lower[start..end] != form[..] {
                continue;
            }
            let left = start == 0 || !(latin_word(lower[start - 1]) && latin_word(lower[start]));
            let right = end == lower.len() || !(latin_word(lower[end - 1]) && latin_word(lower[end]));
            if left && right {
                out.push((start, end, id.clone()));
            }
        }
    }
    out
}

fn plain_script(s: &str) -> bool {
    s.chars().all(|c| c.is_ascii() || ('\u{4e00}'..='\u{9fff}').contains(&c) || "。，".contains(c))
}

/// Sentences built from exact surface forms of `graph`. A candidate is kept
/// only when every naive occurrence of any surface lies inside one of the
/// inserted terms, so the inserted terms are the unique leftmost-longest
/// reading.
pub fn build_corpus(graph: &KnowledgeGraph) -> Vec<CorpusSentence> {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let surfaces: Vec<(Vec<char>, String)> = graph
        .nodes()
        .flat_map(|n| n.surface_forms.iter().map(move |s| (s, n)))
        .filter(|(s, _)| plain_script(s))
        .map(|(s, n)| (s.to_lowercase().chars().collect(), n.id.clone()))
        .collect();
    let nodes: Vec<&TermNode> = graph.nodes().collect();
    let mut out = Vec::new();
    let mut seen = BTreeSet::new();
    while out.len() < CORPUS_SIZE {
        let template = TEMPLATES[rng.gen_range(0..TEMPLATES.len())];
        let mut text = String::new();
        let mut expected = Vec::new();
        let mut pieces = template.split("{}").peekable();
        while let Some(piece) = pieces.next() {
            text.push_str(piece);
            if pieces.peek().is_none() {
                break;
            }
            let node = nodes[rng.gen_range(0..nodes.len())];
            let form = node.surface_forms.choose(&mut rng).expect("node has forms");
            let start = text.chars().count();
            text.push_str(form);
            expected.push((node.id.clone(), (start, start + form.chars().count())));
        }
        if !plain_script(&text) || !seen.insert(text.clone()) {
            continue;
        }
        let chars: Vec<char> = text.chars().collect();
        let occ = naive_occurrences(&chars, &surfaces);
        let covered = occ
            .iter()
            .all(|(s, e, _)| expected.iter().any(|(_, (es, ee))| es <= s && e <= ee));
        let present = expected
            .iter()
            .all(|(id, span)| occ.iter().any(|(s, e, oid)| (*s, *e) == *span && oid == id));
        if covered && present {
            out.push(CorpusSentence { text, expected });
        }
    }
    out
}

pub fn corpus() -> Vec<CorpusSentence> {
    parse_corpus(CORPUS_DOCUMENT).expect("bundled corpus is valid")
}

const PHYSICIAN_LINES: &[&str] = &[
    "how has your {} been since the last visit",
    "I would like to check your {} today",
    "we can adjust the {} if needed",
    "let us talk about {} and {}",
    "any problems with {} this month",
];

const PATIENT_LINES: &[&str] = &[
    "I have had some {} in the mornings",
    "my neighbour told me about {}",
    "I am taking {} after breakfast",
    "what does {} mean for me",
    "I tried {} and {} last week",
];

/// A scripted consultation: alternating physician and patient chunks, each
/// mentioning terms from the graph.
pub fn build_chunk_log(graph: &KnowledgeGraph) -> Vec<LoggedChunk> {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED + 1);
    let pool: Vec<&TermNode> = graph
        .nodes()
        .filter(|n| matches!(n.category, Category::Drug | Category::Symptom | Category::Condition | Category::Metric))
        .collect();
    (0..CHUNK_LOG_SIZE)
        .map(|i| {
            let physician = i % 2 == 0;
            let lines = if physician { PHYSICIAN_LINES } else { PATIENT_LINES };
            let template = lines[rng.gen_range(0..lines.len())];
            let mut body = String::new();
            let mut pieces = template.split("{}").peekable();
            while let Some(piece) = pieces.next() {
                body.push_str(piece);
                if pieces.peek().is_some() {
                    let node = pool[rng.gen_range(0..pool.len())];
                    body.push_str(&node.canonical_name);
                }
            }
            LoggedChunk {
                seq: i as u64 + 1,
                offset_ms: i as u64 * 4000,
                dialect_hint: (i % 7 == 3).then(|| "cantonese".to_owned()),
                payload: format!("{}|{body}", if physician { "physician" } else { "patient" }),
            }
        })
        .collect()
}

pub fn chunk_log() -> Vec<LoggedChunk> {
    crate::transcript::parse_chunk_log(CHUNK_LOG_DOCUMENT).expect("bundled chunk log is valid")
}

/// The month covered by the fixture records.
pub fn fixture_month() -> Month {
    Month::new(2025, 4).expect("valid month")
}

fn at(day: u32, hh: u32, mm: u32) -> Timestamp {
    fixture_month()
        .first_day()
        .with_day(day)
        .expect("day in month")
        .and_hms_opt(hh, mm, 0)
        .expect("valid time")
}


/// A scripted 30-day record for one patient: glucose with a gap and a late
/// high reading, twice-daily metformin with a trailing run of missed doses,
/// symptoms, sleep, patient utterances and two assessments.
pub fn build_month_document() -> String {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED + 2);
    let mut out = String::from("# fixture month for p001\n");
    let p = FIXTURE_PATIENT;
    let ts = |t: Timestamp| format_timestamp(&t);
    out.push_str(&format!("P\t{p}\t{}\n", fixture_month()));
    out.push_str("T\t07:30|12:00|18:30\n");
    out.push_str("Y\t2025-03-01T00:00:00\tmetformin\t500 mg\tlower blood sugar\t08:00|20:00\tactive\n");
    let missed_none = [(20, 8), (29, 20), (30, 8), (30, 20)];
    for day in 1..=30u32 {
        if !(12..=14).contains(&day) {
            let v: f64 = 8.6 - 0.05 * day as f64 + rng.gen_range(-0.6..0.6);
            out.push_str(&format!("G\t{}\t{:.1}\tfasting\n", ts(at(day, 7, 0)), v));
        }
        if day % 3 == 0 {
            let v: f64 = 10.5 - 0.05 * day as f64 + rng.gen_range(-0.8..0.8);
            out.push_str(&format!("G\t{}\t{:.1}\tpostprandial\n", ts(at(day, 13, 30)), v));
        }
        let hours = 6.0 + 0.5 * rng.gen_range(0..5) as f64;
        out.push_str(&format!("L\t{}\t{:.1}\t{}\n", ts(at(day, 6, 30)), hours, rng.gen_range(2..=5)));
        for hour in [8u32, 20] {
            if missed_none.contains(&(day, hour)) {
                continue;
            }
            let outcome = if (day, hour) == (9, 20) {
                "missed".to_owned()
            } else {
                format!("taken:{}", ts(at(day, hour, rng.gen_range(0..40))))
            };
            out.push_str(&format!("M\t{}\tmetformin\t{outcome}\n", ts(at(day, hour, 0))));
        }
    }
    out.push_str(&format!("G\t{}\t14.2\tpostprandial\n", ts(at(30, 19, 0))));
    for (day, code, sev, note) in [
        (3, "fatigue", 2, ""),
        (10, "fatigue", 2, "tired after lunch"),
        (17, "numbness", 1, "toes feel numb"),
        (22, "fatigue", 2, ""),
        (29, "thirst", 3, "very thirsty in the afternoon"),
    ] {
        out.push_str(&format!("S\t{}\t{code}\t{sev}\t{note}\n", ts(at(day, 18, 0))));
    }
    for (day, text) in [
        (2, "I am worried my sugar is still high in the morning"),
        (6, "Thank you, the reminder times are helpful"),
        (11, "I do not understand what the HbA1c number means"),
        (15, "I forgot to measure for a few days while visiting my daughter"),
        (20, "I walked every evening this week"),
        (24, "I feel better since I changed breakfast"),
        (28, "I am scared about the numbness in my toes"),
        (30, "The new rice portions are good"),
    ] {
        out.push_str(&format!("U\t{}\t{text}\n", ts(at(day, 9, 0))));
    }
    out.push_str(&format!("K\t{}\t8\tdiet:1\n", ts(at(5, 10, 0))));
    out.push_str(&format!("K\t{}\t7\texercise:2|diet:2\n", ts(at(26, 10, 0))));
    out
}

pub struct LoadedMonth {
    pub patient_id: String,
    pub month: Month,
    pub records: HealthRecords,
    pub alerts: AlertBook,
}

/// Write a month document into `store`, then evaluate the care rules at the
/// end of the month with `care`.
pub fn load_month(text: &str, store: Arc<dyn StoreAdapter>, care: &CareConfig) -> Result<LoadedMonth, FixtureError> {
    let records = HealthRecords::new(store.clone());
    let alerts = AlertBook::new(store.clone());
    let mut header: Option<(String, Month)> = None;
    for line in tsv::lines(text) {
        let err = |message: String| FixtureError::Parse { line: line.number, message };
        let f = &line.fields;
        let field = |i: usize| f.get(i).copied().ok_or_else(|| err(format!("missing field {i}")));
        let time = |i: usize| -> Result<Timestamp, FixtureError> {
            let s = field(i)?;
            parse_timestamp(s).map_err(|e| err(format!("bad timestamp {s:?}: {e}")))
        };
        let num = |i: usize| -> Result<f64, FixtureError> {
            let s = field(i)?;
            s.trim().parse().map_err(|_| err(format!("bad number {s:?}")))
        };
        if line.tag() == "P" {
            let month = field(2)?.parse().map_err(err)?;
            header = Some((field(1)?.to_owned(), month));
            continue;
        }
        let (pid, _) = header.as_ref().ok_or_else(|| err("records before the P line".into()))?;
        let pid = pid.clone();
        match line.tag() {
            "T" => {
                let meals = tsv::split_list(field(1)?)
                    .iter()
                    .map(|t| parse_clock(t).map_err(|e| err(e.to_string())))
                    .collect::<Result<Vec<NaiveTime>, _>>()?;
                records.set_meal_times(&pid, &meals)?;
            }
            "Y" => {
                let times = tsv::split_list(field(5)?)
                    .iter()
                    .map(|t| parse_clock(t).map_err(|e| err(e.to_string())))
                    .collect::<Result<Vec<NaiveTime>, _>>()?;
                records.record(RecordEntry::Schedule(MedicationSchedule {
                    patient_id: pid,
                    med_name: field(2)?.into(),
                    dose: field(3)?.into(),
                    purpose: field(4)?.into(),
                    times_of_day: times,
                    active: field(6)? == "active",
                    effective_from: time(1)?,
                }))?;
            }
            "G" => {
                records.record(RecordEntry::Glucose(GlucoseReading {
                    patient_id: pid,
                    taken_at: time(1)?,
                    value: num(2)?,
                    context: field(3)?.parse::<GlucoseContext>().map_err(err)?,
                }))?;
            }
            "M" => {
                let raw = field(3)?;
                let outcome = match raw.strip_prefix("taken:") {
                    Some(t) => DoseOutcome::Taken(parse_timestamp(t).map_err(|e| err(e.to_string()))?),
                    None if raw == "missed" => DoseOutcome::Missed,
                    None => return Err(err(format!("bad outcome {raw:?}"))),
                };
                records.record(RecordEntry::Medication(MedicationEvent {
                    patient_id: pid,
                    med_name: field(2)?.into(),
                    scheduled_at: time(1)?,
                    outcome,
                }))?;
            }
            "S" => {
                records.record(RecordEntry::Symptom(SymptomEntry {
                    patient_id: pid,
                    at: time(1)?,
                    code: field(2)?.parse::<SymptomCode>().map_err(err)?,
                    severity: num(3)? as u8,
                    note: f.get(4).copied().unwrap_or("").to_owned(),
                }))?;
            }
            "L" => {
                records.record(RecordEntry::Sleep(SleepEntry {
                    patient_id: pid,
                    at: time(1)?,
                    hours: num(2)?,
                    quality: num(3)? as u8,
                }))?;
            }
            "U" => {
                let u = Utterance { at: time(1)?, session_id: None, text: field(2)?.to_owned() };
                record_utterance(store.as_ref(), &pid, &u)?;
            }
            "K" => {
                let gaps = tsv::split_list(field(3)?)
                    .iter()
                    .map(|g| {
                        let (t, l) = g.split_once(':').ok_or_else(|| err(format!("bad gap {g:?}")))?;
                        let topic: Topic = t.parse().map_err(err)?;
                        let level: u8 = l.parse().map_err(|_| err(format!("bad level {l:?}")))?;
                        Ok((topic, level))
                    })
                    .collect::<Result<Vec<_>, FixtureError>>()?;
                let record = AssessmentRecord {
                    at: time(1)?,
                    patient_id: pid.clone(),
                    questions: num(2)? as usize,
                    gaps,
                };
                record_assessment(store.as_ref(), &record)?;
            }
            other => return Err(err(format!("unknown record tag {other:?}"))),
        }
    }
    let (patient_id, month) = header.ok_or_else(|| FixtureError::Invalid("month document has no P line".into()))?;
    evaluate_care_rules(&records.view(), &alerts, &patient_id, month.window().end, care)?;
    Ok(LoadedMonth { patient_id, month, records, alerts })
}

/// The report for the loaded month, built at the end of the month.
pub fn month_report(loaded: &LoadedMonth) -> Result<crate::reporting::MonthlyReport, FixtureError> {
    Ok(build_monthly_report(
        &loaded.patient_id,
        loaded.month,
        &loaded.records.view(),
        &LexiconClassifier,
        loaded.month.window().end,
        false,
    )?)
}

pub fn build_golden_report(month_document: &str) -> Result<String, FixtureError> {
    let loaded = load_month(month_document, Arc::new(MemoryStore::new()), &CareConfig::default())?;
    Ok(month_report(&loaded)?.to_canonical_json())
}

/// Every shipped data file, regenerated: `(file name, contents)`.
pub fn generated_files() -> Result<Vec<(&'static str, String)>, FixtureError> {
    let graph = build_graph()?;
    let corpus: String = build_corpus(&graph).iter().map(|s| s.line() + "\n").collect();
    let chunks: String = build_chunk_log(&graph).iter().map(|c| c.line() + "\n").collect();
    let month = build_month_document();
    let golden = build_golden_report(&month)?;
    Ok(vec![
        (GRAPH_FILE, graph.to_document()),
        (QUESTION_BANK_FILE, build_question_bank()?.to_document()),
        (CORPUS_FILE, corpus),
        (CHUNK_LOG_FILE, chunks),
        (MONTH_FILE, month),
        (GOLDEN_FILE, golden),
    ])
}

/// Regenerate every data file into `dir`.
pub fn write_data_dir(dir: &std::path::Path) -> Result<Vec<std::path::PathBuf>, FixtureError> {
    std::fs::create_dir_all(dir).map_err(|e| FixtureError::Invalid(format!("{}: {e}", dir.display())))?;
    generated_files()?
        .into_iter()
        .map(|(name, contents)| {
            let path = dir.join(name);
            std::fs::write(&path, contents).map_err(|e| FixtureError::Invalid(format!("{}: {e}", path.display())))?;
            Ok(path)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    /// `cargo test -p t2md-core regenerate -- --ignored` rewrites `data/`.
    #[test]
    #[ignore]
    fn regenerate() {
        write_data_dir(&std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("data")).unwrap();
    }

    #[test]
    fn committed_files_match_generators() {
        for (name, contents) in generated_files().unwrap() {
            let committed = match name {
                GRAPH_FILE => GRAPH_DOCUMENT,
                QUESTION_BANK_FILE => QUESTION_BANK_DOCUMENT,
                CORPUS_FILE => CORPUS_DOCUMENT,
                CHUNK_LOG_FILE => CHUNK_LOG_DOCUMENT,
                MONTH_FILE => MONTH_DOCUMENT,
                GOLDEN_FILE => GOLDEN_REPORT,
                _ => unreachable!(),
            };
            assert!(committed == contents, "{name} differs from its generator; run `t2md fixtures`");
        }
    }

    #[test]
    fn graph_is_large_enough() {
        let g = bundled_graph();
        assert!(g.len() > 500, "{} nodes", g.len());
        assert_eq!(g.to_document(), GRAPH_DOCUMENT);
    }

    #[test]
    fn bank_covers_every_cell() {
        let b = bundled_question_bank();
        assert_eq!(b.items().len(), 36);
        b.validate_coverage().unwrap();
    }

    #[test]
    fn corpus_shape() {
        let c = corpus();
        assert_eq!(c.len(), CORPUS_SIZE);
        assert!(c.iter().all(|s| !s.expected.is_empty()));
        assert_eq!(chunk_log().len(), CHUNK_LOG_SIZE);
    }
}
