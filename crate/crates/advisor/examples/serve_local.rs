//! Serves the advisor on localhost.
//!
//! ```text
//! cargo run -p tenk-advisor --example serve_local -- 8080
//! curl -s -XPOST localhost:8080/api/v1/sessions -d '{"mode":"manual"}'
//! ```

use tenk_advisor::{serve, AppState};

#[tokio::main]
async fn main() -> std::io::Result<()> {
    let port: u16 = std::env::args().nth(1).and_then(|p| p.parse().ok()).unwrap_or(8080);
    let state = AppState::new(tenk_core::solve_backward());
    let listener = tokio::net::TcpListener::bind(("127.0.0.1", port)).await?;
    println!("advisor listening on http://{}", listener.local_addr()?);
    serve(listener, state).await
}
