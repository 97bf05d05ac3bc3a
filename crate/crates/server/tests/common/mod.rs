#![allow(dead_code)]

use std::path::PathBuf;
use std::sync::Arc;

use reqwest::{Client, Response, StatusCode};
use serde_json::{json, Value};
use tokio::sync::oneshot;
use tokio::task::JoinHandle;

use t2md_core::config::ServiceConfig;
use t2md_core::time::{parse_timestamp, Timestamp};
use t2md_server::{AppState, ManualClock, Server, ShutdownReport};

pub const USERS: &str = "\
U p001 patient pw-p001
U p002 patient pw-p002
U dr01 physician pw-dr01
U dr02 physician pw-dr02
U fam family_viewer pw-fam
A p001 dr01
A p002 dr02
";

pub const PRINCIPALS: [&str; 5] = ["p001", "p002", "dr01", "dr02", "fam"];

pub fn ts(s: &str) -> Timestamp {
    parse_timestamp(s).unwrap()
}

pub fn start_time() -> Timestamp {
    ts("2025-05-10T09:00:00")
}

pub struct TestServer {
    pub base: String,
    pub ws: String,
    pub state: Arc<AppState>,
    pub clock: Arc<ManualClock>,
    pub http: Client,
    pub dir: tempfile::TempDir,
    stop: Option<oneshot::Sender<()>>,
    handle: Option<JoinHandle<std::io::Result<ShutdownReport>>>,
}

pub fn config(dir: &tempfile::TempDir) -> ServiceConfig {
    let users = dir.path().join("users.tsv");
    std::fs::write(&users, USERS).unwrap();
    let mut cfg = ServiceConfig::default();
    cfg.listen = "127.0.0.1:0".into();
    cfg.users_path = Some(users);
    cfg.auth_secret = "test-secret".into();
    cfg
}

impl TestServer {
    pub async fn start() -> Self {
        let dir = tempfile::tempdir().unwrap();
        let cfg = config(&dir);
        Self::with_config(cfg, dir).await
    }

    pub async fn with_config(cfg: ServiceConfig, dir: tempfile::TempDir) -> Self {
        let clock = Arc::new(ManualClock::new(start_time()));
        let server = Server::bind(cfg, clock.clone()).await.unwrap();
        let addr = server.local_addr();
        let state = server.state().clone();
        let (tx, rx) = oneshot::channel();
        let handle = tokio::spawn(server.run(async {
            let _ = rx.await;
        }));
        Self {
            base: format!("http://{addr}"),
            ws: format!("ws://{addr}"),
            state,
            clock,
            http: Client::new(),
            dir,
            stop: Some(tx),
            handle: Some(handle),
        }
    }

    pub async fn shutdown(mut self) -> ShutdownReport {
        let _ = self.stop.take().unwrap().send(());
        self.handle.take().unwrap().await.unwrap().unwrap()
    }

    pub fn url(&self, path: &str) -> String {
        format!("{}{path}", self.base)
    }

    pub async fn login(&self, id: &str) -> String {
        let r = self
            .http
            .post(self.url("/auth/login"))
            .json(&json!({ "principal_id": id, "password": format!("pw-{id}") }))
            .send()
            .await
            .unwrap();
        assert_eq!(r.status(), StatusCode::OK, "login {id}");
        r.json::<Value>().await.unwrap()["token"].as_str().unwrap().to_owned()
    }

    pub async fn get(&self, token: &str, path: &str) -> Response {
        self.http.get(self.url(path)).bearer_auth(token).send().await.unwrap()
    }

    pub async fn post(&self, token: &str, path: &str, body: Value) -> Response {
        self.http.post(self.url(path)).bearer_auth(token).json(&body).send().await.unwrap()
    }

    /// Write the fixture month for p001 into the server's store.
    pub fn load_fixture_month(&self) {
        t2md_core::fixtures::load_month(
            t2md_core::fixtures::MONTH_DOCUMENT,
            self.state.store.clone(),
            &self.state.config.care,
        )
        .unwrap();
    }

    pub fn path(&self, name: &str) -> PathBuf {
        self.dir.path().join(name)
    }
}

pub async fn error_code(r: Response) -> (StatusCode, Value) {
    let status = r.status();
    let body: Value = r.json().await.unwrap();
    (status, body["error"].clone())
}
