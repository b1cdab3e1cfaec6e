//! Plays one seeded turn against the router in-process, printing the advice
//! at every decision.

use axum::body::Body;
use axum::http::Request;
use http_body_util::BodyExt;
use serde_json::{json, Value};
use tower::ServiceExt;

use tenk_advisor::{router, AppState};

async fn call(app: &AppState, method: &str, uri: &str, body: Value) -> Value {
    let req = Request::builder().method(method).uri(uri).body(Body::from(body.to_string())).unwrap();
    let resp = router(app.clone()).oneshot(req).await.unwrap();
    serde_json::from_slice(&resp.into_body().collect().await.unwrap().to_bytes()).unwrap()
}

#[tokio::main]
async fn main() {
    let seed: u64 = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(3);
    let app = AppState::new(tenk_core::solve_backward());
    let session = call(&app, "POST", "/api/v1/sessions", json!({"mode": "rng", "seed": seed})).await;
    let id = session["id"].as_str().unwrap();
    loop {
        let rolled = call(&app, "POST", &format!("/api/v1/sessions/{id}/roll"), json!({})).await;
        println!("rolled {} -> {}", rolled["outcome"]["faces"], rolled["state"]);
        let mut status = rolled["status"].clone();
        while status == "awaiting_decision" {
            let advice = call(&app, "GET", &format!("/api/v1/sessions/{id}/advice"), Value::Null).await;
            let mut best = String::new();
            for a in advice.as_array().unwrap() {
                let mark = if a["optimal"] == true { "*" } else { " " };
                println!("  {mark} {:<4} {}", a["action"].as_str().unwrap(), a["value_dec"].as_str().unwrap());
                if a["optimal"] == true {
                    best = a["action"].as_str().unwrap().to_string();
                }
            }
            let acted = call(&app, "POST", &format!("/api/v1/sessions/{id}/act"), json!({"action": best})).await;
            status = acted["status"].clone();
            if best == "r" {
                break;
            }
        }
        if status != "awaiting_roll" {
            let end = call(&app, "GET", &format!("/api/v1/sessions/{id}"), Value::Null).await;
            println!("{} with payoff {}", end["status"], end["payoff"]);
            break;
        }
    }
}
