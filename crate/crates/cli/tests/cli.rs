use std::path::Path;
use std::process::{Command, Output};
use std::sync::Arc;

use statrs::distribution::{ContinuousCDF, StudentsT};

use t2md_core::records::CareConfig;
use t2md_core::fixtures;
use t2md_core::store::FileStore;

fn t2md(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_t2md"))
        .args(args)
        .env_remove("T2MD_STORE")
        .output()
        .expect("binary runs")
}

fn ok(args: &[&str]) -> String {
    let out = t2md(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn failure(args: &[&str]) -> String {
    let out = t2md(args);
    assert!(!out.status.success(), "{args:?} should fail");
    String::from_utf8(out.stderr).unwrap()
}

fn value(out: &str, key: &str) -> f64 {
    out.lines()
        .find_map(|l| l.strip_prefix(&format!("{key}=")))
        .unwrap_or_else(|| panic!("no {key} in {out:?}"))
        .parse()
        .unwrap()
}

fn utf8(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn t_test_from_summaries() {
    let out = ok(&["eval", "t-test", "--summary", "32.8,6.5,20,32.2,4.9,20"]);
    let (va, vb) = (6.5f64.powi(2) / 20.0, 4.9f64.powi(2) / 20.0);
    let t = 0.6 / (va + vb).sqrt();
    let df = (va + vb).powi(2) / (va * va / 19.0 + vb * vb / 19.0);
    let p = 2.0 * (1.0 - StudentsT::new(0.0, 1.0, df).unwrap().cdf(t));
    assert!((value(&out, "t") - t).abs() < 1e-9);
    assert!((value(&out, "df") - df).abs() < 1e-9);
    assert!((value(&out, "p") - p).abs() < 1e-6);
    assert!((value(&out, "p") - 0.74).abs() <= 0.04);

    let out = ok(&["eval", "t-test", "--summary", "42.2,3.6,20,36.4,4.9,20"]);
    assert!(value(&out, "p") < 0.001);
    let same = ok(&["eval", "t-test", "--summary", "5,1,10,5,1,10"]);
    assert_eq!((value(&same, "t"), value(&same, "p")), (0.0, 1.0));

    assert!(failure(&["eval", "t-test", "--summary", "1,2,3"]).contains("6 values"));
    assert!(failure(&["eval", "t-test", "--summary", "1,1,1,2,1,10"]).contains("at least 2"));
}

#[test]
fn mann_whitney_inline_and_from_files() {
    let out = ok(&["eval", "mannwhitney", "--a", "1,2,3", "--b", "4,5,6"]);
    assert_eq!(value(&out, "u"), 0.0);
    assert!(out.contains("method=exact"));
    // C(6,3) = 20 labelings, two of them as extreme
    assert!((value(&out, "p") - 0.1).abs() < 1e-12);

    let dir = tempfile::tempdir().unwrap();
    let (a, b) = (dir.path().join("a.csv"), dir.path().join("b.csv"));
    let xs: Vec<String> = (0..30).map(|i| i.to_string()).collect();
    std::fs::write(&a, xs.join(",")).unwrap();
    std::fs::write(&b, xs.join("\n")).unwrap();
    let out = ok(&["eval", "mannwhitney", "--a", utf8(&a), "--b", utf8(&b)]);
    assert_eq!(value(&out, "u"), 450.0);
    assert!(out.contains("method=normal"));
    assert!(value(&out, "p") > 0.95);

    assert!(failure(&["eval", "mannwhitney", "--a", "", "--b", "1"]).contains("empty"));
}

#[test]
fn sus_rubric_and_split() {
    let out = ok(&["eval", "sus", "--responses", "5,1,5,1,5,1,5,1,5,1\n3,3,3,3,3,3,3,3,3,3"]);
    assert_eq!((value(&out, "score.1"), value(&out, "score.2")), (100.0, 50.0));
    assert_eq!((value(&out, "n"), value(&out, "mean")), (2.0, 75.0));
    assert!(failure(&["eval", "sus", "--responses", "6,1,5,1,5,1,5,1,5,1"]).contains("item 1"));

    assert_eq!(value(&ok(&["eval", "rubric", "--scores", "100,0,0,0"]), "score"), 40.0);
    assert_eq!(value(&ok(&["eval", "rubric", "--scores", "50,50,50,50"]), "score"), 50.0);
    assert!(!t2md(&["eval", "rubric", "--scores", "101,0,0,0"]).status.success());

    let out = ok(&["eval", "split", "--scores", "9,1,8,2,7,3"]);
    // descending 9,8,7,3,2,1 dealt 1,2,2,1,1,2
    assert!(out.contains("group.1=0,5,3\n"), "{out}");
    assert!(out.contains("group.2=2,4,1\n"), "{out}");
    assert_eq!((value(&out, "mean.1"), value(&out, "mean.2")), (14.0 / 3.0, 16.0 / 3.0));
    let three = ok(&["eval", "split", "--scores", "1,2,3,4,5,6,7", "--groups", "3"]);
    assert_eq!(three.lines().filter(|l| l.starts_with("group.")).count(), 3);
}

#[test]
fn fixtures_regenerate_the_bundled_files() {
    let dir = tempfile::tempdir().unwrap();
    let out = ok(&["fixtures", "--out", utf8(dir.path())]);
    let generated = fixtures::generated_files().unwrap();
    assert_eq!(out.lines().count(), generated.len());
    for (name, contents) in generated {
        assert_eq!(std::fs::read_to_string(dir.path().join(name)).unwrap(), contents, "{name}");
    }
    assert_eq!(
        std::fs::read_to_string(dir.path().join(fixtures::GOLDEN_FILE)).unwrap(),
        fixtures::GOLDEN_REPORT
    );
}

#[test]
fn load_graph_validates_and_installs() {
    let dir = tempfile::tempdir().unwrap();
    let doc = dir.path().join("graph.tsv");
    let graph = fixtures::bundled_graph();
    std::fs::write(&doc, graph.to_document()).unwrap();
    let out = ok(&["load-graph", utf8(&doc), "--validate-only"]);
    assert_eq!(value(&out, "version"), graph.version() as f64);
    assert_eq!(value(&out, "nodes"), graph.len() as f64);
    assert_eq!(value(&out, "edges"), graph.edges().len() as f64);

    assert!(failure(&["load-graph", utf8(&doc)]).contains("graph.path"));
    let dest = dir.path().join("live.tsv");
    let cfg = dir.path().join("t2md.conf");
    std::fs::write(&cfg, format!("graph.path = {}\n", dest.display())).unwrap();
    let out = ok(&["load-graph", utf8(&doc), "--config", utf8(&cfg)]);
    assert!(out.contains("installed="));
    assert_eq!(std::fs::read_to_string(&dest).unwrap(), graph.to_document());

    let broken = dir.path().join("broken.tsv");
    std::fs::write(&broken, "N\tonly-two-fields\n").unwrap();
    assert!(!t2md(&["load-graph", utf8(&broken), "--validate-only"]).status.success());
    assert!(failure(&["load-graph", "/no/such/graph.tsv", "--validate-only"]).contains("/no/such/graph.tsv"));
}

#[test]
fn demo_session_replays_deterministically() {
    let dir = tempfile::tempdir().unwrap();
    let script = dir.path().join("demo.tsv");
    std::fs::write(&script, fixtures::CHUNK_LOG_DOCUMENT).unwrap();
    let first = t2md(&["demo-session", "--script", utf8(&script)]);
    let second = t2md(&["demo-session", "--script", utf8(&script)]);
    assert!(first.status.success());
    assert_eq!(first.stdout, second.stdout);
    let text = String::from_utf8(first.stdout).unwrap();
    let segments: Vec<u64> = text
        .lines()
        .filter(|l| !l.starts_with("term\t"))
        .map(|l| l.split('\t').next().unwrap().parse().unwrap())
        .collect();
    assert_eq!(segments, (1..=segments.len() as u64).collect::<Vec<_>>());
    assert!(text.lines().any(|l| l.starts_with("term\t")));
    let stderr = String::from_utf8(first.stderr).unwrap();
    assert!(stderr.contains(&format!("chunks={}", fixtures::CHUNK_LOG_SIZE)), "{stderr}");
    let max_ms: f64 = stderr.split("max_latency_ms=").nth(1).unwrap().trim().parse().unwrap();
    assert!(max_ms < 1400.0);

    let bad = dir.path().join("bad.tsv");
    std::fs::write(&bad, "X\t1\n").unwrap();
    assert!(failure(&["demo-session", "--script", utf8(&bad)]).contains("line 1"));
}

#[test]
fn report_reads_the_configured_store() {
    let dir = tempfile::tempdir().unwrap();
    let store = dir.path().join("store");
    fixtures::load_month(
        fixtures::MONTH_DOCUMENT,
        Arc::new(FileStore::open(&store).unwrap()),
        &CareConfig::default(),
    )
    .unwrap();
    let cfg = dir.path().join("t2md.conf");
    std::fs::write(&cfg, format!("store = file\nstore.path = {}\n", store.display())).unwrap();
    let cfg = utf8(&cfg);
    let args = ["report", "--config", cfg, "--patient", "p001", "--month", "2025-04", "--now", "2025-05-10T09:00:00"];
    assert_eq!(ok(&args), fixtures::GOLDEN_REPORT);

    let open = ["report", "--config", cfg, "--patient", "p001", "--month", "2025-05", "--now", "2025-05-10T09:00:00"];
    assert!(failure(&open).contains("2025-05"));
    let preview: serde_json::Value = serde_json::from_str(&ok(&[&open[..], &["--preview"]].concat())).unwrap();
    assert_eq!(preview["preview"], true);
    assert!(!t2md(&["report", "--patient", "p001", "--month", "2025-13"]).status.success());
}

#[test]
fn serve_reports_bad_configuration() {
    let dir = tempfile::tempdir().unwrap();
    assert!(failure(&["serve", "--config", "/no/such.conf"]).contains("/no/such.conf"));
    let cfg = dir.path().join("t2md.conf");
    std::fs::write(&cfg, "colour = blue\n").unwrap();
    assert!(failure(&["serve", "--config", utf8(&cfg)]).contains("colour"));
}
