//! HTTP and WebSocket service for the T2MD Health platform.
//!
//! [`Server::bind`] builds the state from a [`ServiceConfig`] and opens the
//! listener; [`Server::run`] serves until the shutdown future resolves, then
//! closes every live consultation. Every endpoint other than `/health` and
//! `/auth/login` needs a bearer token, and every read of patient data goes
//! through the access chokepoint. Errors use the codes in [`ErrorCode`].
//!
//! The listener is plaintext; terminate TLS at a reverse proxy in front of
//! it.

pub mod api;
pub mod auth;
pub mod error;
pub mod state;
pub mod stream;

use std::future::Future;
use std::net::SocketAddr;
use std::sync::Arc;
use std::time::Duration;

use tokio::net::TcpListener;

pub use auth::{AuthToken, TokenSigner, Users};
pub use error::{ApiError, ErrorCode};
pub use state::{AppState, Clock, ManualClock, StartupError, SystemClock};
pub use t2md_core::config::ServiceConfig;

/// How often reminders, prompts and care rules are evaluated.
pub const TICK: Duration = Duration::from_secs(60);

pub struct Server {
    state: Arc<AppState>,
    listener: TcpListener,
}

/// What shutdown did.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShutdownReport {
    pub closed_sessions: Vec<String>,
}

impl Server {
    pub async fn bind(config: ServiceConfig, clock: Arc<dyn Clock>) -> Result<Self, StartupError> {
        let addr = config.listen.clone();
        let state = Arc::new(AppState::build(config, clock)?);
        let listener = TcpListener::bind(&addr).await.map_err(|e| StartupError::Bind {
            addr,
            message: e.to_string(),
        })?;
        Ok(Self { state, listener })
    }

    pub fn local_addr(&self) -> SocketAddr {
        self.listener.local_addr().expect("bound listener has an address")
    }

    pub fn state(&self) -> &Arc<AppState> {
        &self.state
    }

    pub async fn run(self, shutdown: impl Future<Output = ()> + Send + 'static) -> std::io::Result<ShutdownReport> {
        let state = self.state.clone();
        let ticker = tokio::spawn({
            let state = state.clone();
            async move {
                let mut every = tokio::time::interval(TICK);
                loop {
                    every.tick().await;
                    if let Err(e) = state.tick(state.now()) {
                        tracing::warn!(error = %e, "periodic evaluation failed");
                    }
                }
            }
        });
        let (closed_tx, closed_rx) = tokio::sync::oneshot::channel();
        let drain = {
            let state = state.clone();
            async move {
                shutdown.await;
                let closed = state.begin_shutdown();
                tracing::info!(sessions = closed.len(), "shutting down, live sessions closed");
                let _ = closed_tx.send(closed);
            }
        };
        tracing::info!(addr = %self.local_addr(), "listening");
        let served = axum::serve(self.listener, api::router(state)).with_graceful_shutdown(drain).await;
        ticker.abort();
        served?;
        Ok(ShutdownReport { closed_sessions: closed_rx.await.unwrap_or_default() })
    }
}

/// Serve `config` until Ctrl-C.
pub async fn serve(config: ServiceConfig) -> Result<ShutdownReport, Box<dyn std::error::Error + Send + Sync>> {
    let server = Server::bind(config, Arc::new(SystemClock)).await?;
    Ok(server
        .run(async {
            let _ = tokio::signal::ctrl_c().await;
        })
        .await?)
}
