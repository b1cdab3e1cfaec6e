//! HTTP advisor for playing one turn of Ten Thousand with exact advice.
//!
//! A session walks a turn from the initial state: roll (server-side or with
//! entered faces), ask for the value of every legal action, act, and finish
//! by banking or busting. The solved tables are shared read-only by all
//! sessions; each session is mutated under its own lock.
//!
//! ```no_run
//! # async fn run() -> std::io::Result<()> {
//! let state = tenk_advisor::AppState::new(tenk_core::solve_backward());
//! let listener = tokio::net::TcpListener::bind("127.0.0.1:8080").await?;
//! tenk_advisor::serve(listener, state).await
//! # }
//! ```

mod api;
mod error;
pub mod session;
pub mod store;

pub use api::{router, AppState};
pub use error::AdvisorError;
pub use session::{ActionAdvice, Event, Mode, Session, Status};

/// Serves the advisor on `listener` until the process is stopped.
pub async fn serve(listener: tokio::net::TcpListener, state: AppState) -> std::io::Result<()> {
    axum::serve(listener, router(state)).await
}
