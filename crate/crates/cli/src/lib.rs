//! The `t2md` command line: run the service, check a graph document,
//! replay a consultation, print a monthly report, run study statistics and
//! regenerate the bundled data files.
//!
//! Every command writes its result to the given writer, so the binary and
//! the tests share one code path.

use std::io::Write;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use clap::{Args, Parser, Subcommand};

use t2md_core::collaboration::{AccessControl, Principal, Role};
use t2md_core::config::{ServiceConfig, StoreKind, ENV_PREFIX};
use t2md_core::evalkit::scoring::SUS_ITEMS;
use t2md_core::evalkit::{self, SummaryStats, SusResponse, UMethod};
use t2md_core::events::EventLog;
use t2md_core::fixtures;
use t2md_core::knowledge::{GraphStore, KnowledgeGraph};
use t2md_core::records::HealthRecords;
use t2md_core::reporting::{build_monthly_report, LexiconClassifier};
use t2md_core::store::{FileStore, MemoryStore, StoreAdapter};
use t2md_core::time::{self, parse_timestamp, Month, Timestamp};
use t2md_core::transcript::{parse_chunk_log, replay, ReferenceAsr, SessionManager};

pub type CliResult<T = ()> = Result<T, Box<dyn std::error::Error>>;

#[derive(Debug, Parser)]
#[command(name = "t2md", version, about = "T2MD Health platform")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Serve the HTTP and WebSocket API until Ctrl-C.
    Serve {
        #[arg(long)]
        config: Option<PathBuf>,
    },
    /// Check a graph document and install it at the configured graph path.
    LoadGraph {
        path: PathBuf,
        /// Only check the document.
        #[arg(long)]
        validate_only: bool,
        #[arg(long)]
        config: Option<PathBuf>,
    },
    /// Replay a recorded chunk log through a live session.
    DemoSession {
        #[arg(long)]
        script: PathBuf,
        /// Graph document; the bundled graph when absent.
        #[arg(long)]
        graph: Option<PathBuf>,
    },
    /// Print the monthly report of a patient as canonical JSON.
    Report {
        #[arg(long)]
        patient: String,
        #[arg(long)]
        month: Month,
        /// Allow a report for a month that has not ended.
        #[arg(long)]
        preview: bool,
        #[arg(long)]
        config: Option<PathBuf>,
        /// Report time, `YYYY-MM-DDTHH:MM:SS`; the current time when absent.
        #[arg(long, value_parser = parse_timestamp_arg)]
        now: Option<Timestamp>,
    },
    /// Study statistics, printed as key=value lines.
    #[command(subcommand)]
    Eval(Eval),
    /// Regenerate the bundled data files into a directory.
    Fixtures {
        #[arg(long)]
        out: PathBuf,
    },
}

#[derive(Debug, Subcommand)]
pub enum Eval {
    /// Welch's t-test from `mean1,sd1,n1,mean2,sd2,n2`.
    TTest {
        #[arg(long)]
        summary: String,
    },
    /// Mann-Whitney U of two samples.
    Mannwhitney {
        #[command(flatten)]
        samples: Samples,
        /// Use the exact distribution regardless of sample size.
        #[arg(long)]
        exact: bool,
    },
    /// SUS scores, one respondent of ten 1..=5 items per line.
    Sus {
        #[arg(long)]
        responses: String,
    },
    /// Weighted rubric from `accuracy,relevance,readability,user_friendliness`.
    Rubric {
        #[arg(long)]
        scores: String,
    },
    /// Balanced assignment of scores into groups.
    Split {
        #[arg(long)]
        scores: String,
        #[arg(long, default_value_t = 2)]
        groups: usize,
    },
}

#[derive(Debug, Args)]
pub struct Samples {
    /// Comma-separated values, or a file of them.
    #[arg(long)]
    a: String,
    #[arg(long)]
    b: String,
}

fn parse_timestamp_arg(s: &str) -> Result<Timestamp, String> {
    parse_timestamp(s).map_err(|e| e.to_string())
}

/// Load `path` with environment overrides applied, or defaults and
/// environment when no path is given.
pub fn load_config(path: Option<&Path>) -> CliResult<ServiceConfig> {
    let mut cfg = match path {
        Some(p) => ServiceConfig::load(p)?,
        None => ServiceConfig::default(),
    };
    cfg.apply_env(std::env::vars().filter(|(k, _)| k.starts_with(ENV_PREFIX)))?;
    cfg.validate()?;
    Ok(cfg)
}

/// A value list given inline or as the name of a file holding one.
fn text_or_file(arg: &str) -> CliResult<String> {
    let path = Path::new(arg);
    if path.is_file() {
        return Ok(std::fs::read_to_string(path)?);
    }
    Ok(arg.to_owned())
}

fn numbers(text: &str) -> CliResult<Vec<f64>> {
    text.split(|c: char| c == ',' || c.is_whitespace())
        .filter(|s| !s.is_empty())
        .map(|s| s.parse::<f64>().map_err(|_| format!("not a number: {s:?}").into()))
        .collect()
}

fn exactly<const N: usize>(text: &str, what: &str) -> CliResult<[f64; N]> {
    let v = numbers(text)?;
    v.as_slice()
        .try_into()
        .map_err(|_| format!("{what} needs {N} values, got {}", v.len()).into())
}

pub fn run(cli: Cli, out: &mut dyn Write) -> CliResult {
    match cli.command {
        Command::Serve { config } => serve(&load_config(config.as_deref())?, out),
        Command::LoadGraph { path, validate_only, config } => load_graph(&path, validate_only, config.as_deref(), out),
        Command::DemoSession { script, graph } => demo_session(&script, graph.as_deref(), out),
        Command::Report { patient, month, preview, config, now } => {
            let cfg = load_config(config.as_deref())?;
            report(&cfg, &patient, month, preview, now.unwrap_or_else(time::now), out)
        }
        Command::Eval(e) => eval(e, out),
        Command::Fixtures { out: dir } => {
            for path in fixtures::write_data_dir(&dir)? {
                writeln!(out, "{}", path.display())?;
            }
            Ok(())
        }
    }
}

fn serve(cfg: &ServiceConfig, out: &mut dyn Write) -> CliResult {
    let runtime = tokio::runtime::Runtime::new()?;
    let report = runtime.block_on(t2md_server::serve(cfg.clone())).map_err(|e| e.to_string())?;
    writeln!(out, "closed_sessions={}", report.closed_sessions.len())?;
    Ok(())
}

fn load_graph(path: &Path, validate_only: bool, config: Option<&Path>, out: &mut dyn Write) -> CliResult {
    let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    let graph = KnowledgeGraph::parse_document(&text)?;
    writeln!(out, "version={}", graph.version())?;
    writeln!(out, "nodes={}", graph.len())?;
    writeln!(out, "edges={}", graph.edges().len())?;
    if validate_only {
        return Ok(());
    }
    let cfg = load_config(config)?;
    let dest = cfg.graph_path.ok_or("no graph.path configured; pass --config or --validate-only")?;
    std::fs::write(&dest, graph.to_document()).map_err(|e| format!("{}: {e}", dest.display()))?;
    writeln!(out, "installed={}", dest.display())?;
    Ok(())
}

/// Segments go to `out` and are identical on every run; timings go to
/// stderr.
fn demo_session(script: &Path, graph: Option<&Path>, out: &mut dyn Write) -> CliResult {
    let chunks = parse_chunk_log(&std::fs::read_to_string(script).map_err(|e| format!("{}: {e}", script.display()))?)?;
    let graph = match graph {
        Some(p) => KnowledgeGraph::parse_document(&std::fs::read_to_string(p)?)?,
        None => fixtures::bundled_graph(),
    };
    let acl = Arc::new(AccessControl::new());
    acl.register(Principal { id: fixtures::FIXTURE_PATIENT.into(), role: Role::Patient })?;
    acl.register(Principal { id: fixtures::FIXTURE_PHYSICIAN.into(), role: Role::Physician })?;
    let manager = SessionManager::new(Arc::new(GraphStore::new(graph)), acl, Arc::new(EventLog::new()));
    let opened_at = parse_timestamp("2025-04-10T09:00:00")?;
    let session = manager.open_session(fixtures::FIXTURE_PATIENT, fixtures::FIXTURE_PHYSICIAN, opened_at)?;
    let report = replay(&manager, &session.id, &chunks, &ReferenceAsr)?;
    for s in &report.transcript.segments {
        writeln!(out, "{}\t{}-{}\t{}\t{}", s.seq, s.span.0, s.span.1, s.speaker, s.text)?;
    }
    for e in &report.transcript.sidebar {
        writeln!(out, "term\t{}\t{}\t{}", e.first_segment_seq, e.node_id, e.canonical_name)?;
    }
    eprintln!(
        "chunks={} segments={} max_latency_ms={:.3}",
        chunks.len(),
        report.transcript.segments.len(),
        report.max_latency().as_secs_f64() * 1000.0
    );
    Ok(())
}

fn report(cfg: &ServiceConfig, patient: &str, month: Month, preview: bool, now: Timestamp, out: &mut dyn Write) -> CliResult {
    let store: Arc<dyn StoreAdapter> = match cfg.store {
        StoreKind::Memory => Arc::new(MemoryStore::new()),
        StoreKind::File => Arc::new(FileStore::open(&cfg.store_path)?),
    };
    let records = HealthRecords::new(store);
    let report = build_monthly_report(patient, month, &records.view(), &LexiconClassifier, now, preview)?;
    out.write_all(report.to_canonical_json().as_bytes())?;
    Ok(())
}

fn eval(e: Eval, out: &mut dyn Write) -> CliResult {
    match e {
        Eval::TTest { summary } => {
            let [m1, sd1, n1, m2, sd2, n2] = exactly::<6>(&summary, "--summary")?;
            let count = |n: f64| -> CliResult<usize> {
                if n.fract() != 0.0 || n < 0.0 {
                    return Err(format!("group size {n} is not a whole number").into());
                }
                Ok(n as usize)
            };
            let t = evalkit::welch_t_from_summary(
                SummaryStats::new(m1, sd1, count(n1)?)?,
                SummaryStats::new(m2, sd2, count(n2)?)?,
            )?;
            writeln!(out, "t={}", t.t)?;
            writeln!(out, "df={}", t.df)?;
            writeln!(out, "p={}", t.p_two_sided)?;
        }
        Eval::Mannwhitney { samples, exact } => {
            let a = numbers(&text_or_file(&samples.a)?)?;
            let b = numbers(&text_or_file(&samples.b)?)?;
            let u = evalkit::mann_whitney_u(&a, &b, exact)?;
            writeln!(out, "u={}", u.u)?;
            writeln!(out, "p={}", u.p_two_sided)?;
            let method = match u.method {
                UMethod::Exact => "exact",
                UMethod::Normal => "normal",
            };
            writeln!(out, "method={method}")?;
        }
        Eval::Sus { responses } => {
            let text = text_or_file(&responses)?;
            let mut scores = Vec::new();
            for line in text.lines().map(str::trim).filter(|l| !l.is_empty()) {
                let items = exactly::<SUS_ITEMS>(line, "a SUS response")?;
                let mut raw = [0u8; SUS_ITEMS];
                for (d, v) in raw.iter_mut().zip(items) {
                    if v.fract() != 0.0 || !(0.0..=255.0).contains(&v) {
                        return Err(format!("SUS item {v} is not a whole number").into());
                    }
                    *d = v as u8;
                }
                scores.push(evalkit::sus_score(&SusResponse::new(raw)?));
            }
            if scores.is_empty() {
                return Err("no SUS responses".into());
            }
            for (i, s) in scores.iter().enumerate() {
                writeln!(out, "score.{}={s}", i + 1)?;
            }
            writeln!(out, "n={}", scores.len())?;
            writeln!(out, "mean={}", scores.iter().sum::<f64>() / scores.len() as f64)?;
        }
        Eval::Rubric { scores } => {
            let [a, r, d, u] = exactly::<4>(&scores, "--scores")?;
            writeln!(out, "score={}", evalkit::rubric_score(a, r, d, u)?)?;
        }
        Eval::Split { scores, groups } => {
            let scores = numbers(&text_or_file(&scores)?)?;
            let split = evalkit::balanced_split(&scores, groups)?;
            for (i, (g, mean)) in split.groups.iter().zip(&split.means).enumerate() {
                let members: Vec<String> = g.iter().map(usize::to_string).collect();
                writeln!(out, "group.{}={}", i + 1, members.join(","))?;
                writeln!(out, "mean.{}={mean}", i + 1)?;
            }
        }
    }
    Ok(())
}
