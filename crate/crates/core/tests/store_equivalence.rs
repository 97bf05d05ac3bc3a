mod common;

use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Arc;

use common::suite::run_suite;
use t2md_core::fixtures::{self, LoadedMonth};
use t2md_core::records::{AlertBook, HealthRecords};
use t2md_core::store::StoreAdapter;
use t2md_core::{FileStore, MemoryStore};

fn file_factory(dir: &tempfile::TempDir) -> impl FnMut() -> Arc<dyn StoreAdapter> + '_ {
    let n = AtomicUsize::new(0);
    move || {
        let path = dir.path().join(format!("store-{}.jsonl", n.fetch_add(1, Ordering::SeqCst)));
        Arc::new(FileStore::open(path).unwrap())
    }
}

#[test]
fn memory_and_file_adapters_observe_the_same() {
    let dir = tempfile::tempdir().unwrap();
    let memory = run_suite(|| Arc::new(MemoryStore::new()));
    let file = run_suite(file_factory(&dir));
    assert_eq!(memory.len(), file.len());
    for ((name, m), (_, f)) in memory.iter().zip(&file) {
        assert_eq!(m, f, "scenario {name} differs between adapters");
    }
}

#[test]
fn reopened_file_store_reproduces_the_report() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("month.jsonl");
    let store: Arc<dyn StoreAdapter> = Arc::new(FileStore::open(&path).unwrap());
    let loaded = fixtures::load_month(fixtures::MONTH_DOCUMENT, store.clone(), &Default::default()).unwrap();
    let before = fixtures::month_report(&loaded).unwrap().to_canonical_json();
    let snapshot = store.snapshot();
    drop(loaded);
    drop(store);

    let store: Arc<dyn StoreAdapter> = Arc::new(FileStore::open(&path).unwrap());
    assert_eq!(store.snapshot(), snapshot);
    let reopened = LoadedMonth {
        patient_id: fixtures::FIXTURE_PATIENT.into(),
        month: fixtures::fixture_month(),
        records: HealthRecords::new(store.clone()),
        alerts: AlertBook::new(store),
    };
    let after = fixtures::month_report(&reopened).unwrap().to_canonical_json();
    assert_eq!(before, after);
    assert_eq!(after, fixtures::GOLDEN_REPORT);
}

#[test]
fn file_scenarios_survive_reopen() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("s.jsonl");
    let first = {
        let store: Arc<dyn StoreAdapter> = Arc::new(FileStore::open(&path).unwrap());
        common::suite::SCENARIOS[1].1(store.clone());
        (store.snapshot(), store.keys_at("", store.snapshot()), store.scan("glucose/p1"))
    };
    let store = FileStore::open(&path).unwrap();
    let snap = store.snapshot();
    assert_eq!((snap, store.keys_at("", snap), store.scan("glucose/p1")), first);
}
