use std::sync::OnceLock;

use axum::body::Body;
use axum::http::{Request, StatusCode};
use http_body_util::BodyExt;
use serde_json::{json, Value};
use tower::ServiceExt;

use tenk_advisor::{router, AppState};
use tenk_core::{solve_backward, Solution};

fn solution() -> Solution {
    static SOLVED: OnceLock<Solution> = OnceLock::new();
    SOLVED.get_or_init(solve_backward).clone()
}

fn app() -> AppState {
    AppState::new(solution())
}

async fn call(app: &AppState, method: &str, uri: &str, body: Option<Value>) -> (StatusCode, Value) {
    let body = body.map_or_else(Body::empty, |b| Body::from(b.to_string()));
    let req = Request::builder()
        .method(method)
        .uri(uri)
        .header("content-type", "application/json")
        .body(body)
        .unwrap();
    let resp = router(app.clone()).oneshot(req).await.unwrap();
    let status = resp.status();
    let bytes = resp.into_body().collect().await.unwrap().to_bytes();
    let value = if bytes.is_empty() { Value::Null } else { serde_json::from_slice(&bytes).unwrap() };
    (status, value)
}

async fn manual_session(app: &AppState) -> String {
    let (status, body) = call(app, "POST", "/api/v1/sessions", Some(json!({"mode": "manual"}))).await;
    assert_eq!(status, StatusCode::CREATED, "{body}");
    body["id"].as_str().unwrap().to_string()
}

async fn roll(app: &AppState, id: &str, faces: &[u8]) -> (StatusCode, Value) {
    call(app, "POST", &format!("/api/v1/sessions/{id}/roll"), Some(json!({"faces": faces}))).await
}

fn active(tau: u32, config: &str, n: u8) -> Value {
    json!({"kind": "active", "tau": tau, "config": config, "n": n})
}

#[tokio::test]
async fn health() {
    let (status, body) = call(&app(), "GET", "/api/v1/health", None).await;
    assert_eq!(status, StatusCode::OK);
    assert_eq!(body["status"], "ok");
}

#[tokio::test]
async fn new_session_starts_at_the_initial_state() {
    let app = app();
    let (status, body) = call(&app, "POST", "/api/v1/sessions", Some(json!({"mode": "manual"}))).await;
    assert_eq!(status, StatusCode::CREATED);
    assert_eq!(body["state"], json!({"kind": "initial"}));
    assert_eq!(body["status"], "awaiting_roll");
    assert_eq!(body["payoff"], Value::Null);
    let id = body["id"].as_str().unwrap();
    let (status, fetched) = call(&app, "GET", &format!("/api/v1/sessions/{id}"), None).await;
    assert_eq!(status, StatusCode::OK);
    assert_eq!(fetched, body);
}

#[tokio::test]
async fn non_scoring_roll_busts() {
    let app = app();
    let id = manual_session(&app).await;
    let (status, body) = roll(&app, &id, &[2, 3, 4, 6, 6]).await;
    assert_eq!(status, StatusCode::OK);
    assert_eq!(body["status"], "busted");
    assert_eq!(body["payoff"], 0);
    assert_eq!(body["outcome"]["config"], Value::Null);

    // nothing more can happen in a finished turn
    let (status, body) = roll(&app, &id, &[5]).await;
    assert_eq!(status, StatusCode::CONFLICT, "{body}");
    let (status, _) = call(&app, "GET", &format!("/api/v1/sessions/{id}/advice"), None).await;
    assert_eq!(status, StatusCode::CONFLICT);
}

#[tokio::test]
async fn hot_dice_keep_five_dice() {
    let app = app();
    let id = manual_session(&app).await;
    let (status, body) = roll(&app, &id, &[5, 5, 5, 5, 5]).await;
    assert_eq!(status, StatusCode::OK);
    assert_eq!(body["outcome"]["hot_dice"], true);
    assert_eq!(body["state"], active(12, "5,0,0", 5));
}

#[tokio::test]
async fn advice_lists_all_legal_actions() {
    let app = app();
    let id = manual_session(&app).await;
    let (_, body) = roll(&app, &id, &[5, 5, 1, 2, 3]).await;
    assert_eq!(body["state"], active(4, "2,1,0", 2));

    let (status, advice) = call(&app, "GET", &format!("/api/v1/sessions/{id}/advice"), None).await;
    assert_eq!(status, StatusCode::OK);
    let advice = advice.as_array().unwrap();
    assert_eq!(advice.len(), 6);
    let optimal: Vec<&Value> = advice.iter().filter(|a| a["optimal"] == true).collect();
    assert_eq!(optimal.len(), 1);
    assert_eq!(optimal[0]["action"], "m55");
    assert!(optimal[0]["value_dec"].as_str().unwrap().starts_with("5.0205"));

    // the best advised value is the value of the state itself
    let best = advice
        .iter()
        .map(|a| a["value_dec"].as_str().unwrap().parse::<f64>().unwrap())
        .fold(f64::MIN, f64::max);
    let (_, value) = call(&app, "GET", "/api/v1/value?tau=4&f=2&o=1&t=0&n=2", None).await;
    assert_eq!(best, value["value"].as_str().unwrap().parse::<f64>().unwrap());
}

#[tokio::test]
async fn high_scores_are_banked() {
    let app = app();
    let (status, body) = call(&app, "GET", "/api/v1/value?tau=19&f=1&o=0&t=0&n=4", None).await;
    assert_eq!(status, StatusCode::OK, "{body}");
    assert_eq!(body["action"], "s");
    assert_eq!(body["value"], "19.0000000000");
    let (status, body) = call(&app, "GET", "/api/v1/value?tau=56&f=0&o=1&t=0&n=4", None).await;
    assert_eq!(status, StatusCode::OK, "{body}");
    assert_eq!(body["action"], "s");
}

#[tokio::test]
async fn initial_value() {
    let (status, body) = call(&app(), "GET", "/api/v1/value?tau=0", None).await;
    assert_eq!(status, StatusCode::OK, "{body}");
    assert_eq!(body["state"], json!({"kind": "initial"}));
    assert_eq!(body["value"], "5.8720189185");
    assert_eq!(body["action"], "r");
}

#[tokio::test]
async fn bad_value_queries() {
    let app = app();
    for uri in [
        "/api/v1/value",
        "/api/v1/value?tau=3&f=1",
        "/api/v1/value?tau=3&f=0&o=0&t=0&n=2",
        "/api/v1/value?tau=x",
    ] {
        let (status, body) = call(&app, "GET", uri, None).await;
        assert_eq!(status, StatusCode::BAD_REQUEST, "{uri}: {body}");
        assert!(body["error"].is_string());
    }
}

#[tokio::test]
async fn setting_a_die_aside() {
    let app = app();
    let id = manual_session(&app).await;
    let (_, body) = roll(&app, &id, &[5, 5, 2, 3, 4]).await;
    assert_eq!(body["state"], active(2, "2,0,0", 3));
    let uri = format!("/api/v1/sessions/{id}/act");
    let (status, body) = call(&app, "POST", &uri, Some(json!({"action": "m5"}))).await;
    assert_eq!(status, StatusCode::OK, "{body}");
    assert_eq!(body["state"], active(1, "1,0,0", 4));
    assert_eq!(body["status"], "awaiting_decision");

    let (status, body) = call(&app, "POST", &uri, Some(json!({"action": "s"}))).await;
    assert_eq!(status, StatusCode::OK);
    assert_eq!(body["status"], "banked");
    assert_eq!(body["payoff"], 1);
}

#[tokio::test]
async fn illegal_action_reports_the_legal_ones() {
    let app = app();
    let id = manual_session(&app).await;
    roll(&app, &id, &[5, 2, 3, 4, 6]).await;
    let (status, body) =
        call(&app, "POST", &format!("/api/v1/sessions/{id}/act"), Some(json!({"action": "m55"}))).await;
    assert_eq!(status, StatusCode::BAD_REQUEST);
    assert_eq!(body["legal"], json!(["s", "r"]));

    let (status, _) =
        call(&app, "POST", &format!("/api/v1/sessions/{id}/act"), Some(json!({"action": "zz"}))).await;
    assert_eq!(status, StatusCode::BAD_REQUEST);
}

#[tokio::test]
async fn malformed_rolls_are_rejected() {
    let app = app();
    let id = manual_session(&app).await;
    let (status, _) = roll(&app, &id, &[5, 5]).await;
    assert_eq!(status, StatusCode::BAD_REQUEST);
    let (status, _) = roll(&app, &id, &[5, 5, 7, 1, 1]).await;
    assert_eq!(status, StatusCode::BAD_REQUEST);
    let (status, _) = call(&app, "POST", &format!("/api/v1/sessions/{id}/roll"), None).await;
    assert_eq!(status, StatusCode::BAD_REQUEST);
    let (status, _) = call(&app, "POST", "/api/v1/sessions", Some(json!({"mode": "dice"}))).await;
    assert_eq!(status, StatusCode::BAD_REQUEST);
}

#[tokio::test]
async fn unknown_sessions_are_not_found() {
    let app = app();
    for id in ["00000000-0000-0000-0000-000000000000", "not-a-uuid"] {
        let (status, body) = call(&app, "GET", &format!("/api/v1/sessions/{id}"), None).await;
        assert_eq!(status, StatusCode::NOT_FOUND, "{body}");
    }
}

#[tokio::test]
async fn sessions_are_independent() {
    let app = app();
    let a = manual_session(&app).await;
    let b = manual_session(&app).await;
    assert_ne!(a, b);
    roll(&app, &a, &[2, 3, 4, 6, 6]).await;
    let (_, body) = roll(&app, &b, &[1, 2, 3, 4, 6]).await;
    assert_eq!(body["status"], "awaiting_decision");
    let (_, a_view) = call(&app, "GET", &format!("/api/v1/sessions/{a}"), None).await;
    assert_eq!(a_view["status"], "busted");
}

#[tokio::test]
async fn seeded_rng_sessions_repeat() {
    let app = app();
    let mut runs = Vec::new();
    for _ in 0..2 {
        let (_, body) = call(&app, "POST", "/api/v1/sessions", Some(json!({"mode": "rng", "seed": 77}))).await;
        let id = body["id"].as_str().unwrap().to_string();
        let mut faces = Vec::new();
        for _ in 0..4 {
            let (status, body) = call(&app, "POST", &format!("/api/v1/sessions/{id}/roll"), None).await;
            if status != StatusCode::OK {
                break;
            }
            faces.push(body["outcome"]["faces"].clone());
        }
        runs.push(faces);
    }
    assert!(!runs[0].is_empty());
    assert_eq!(runs[0], runs[1]);

    let (_, body) = call(&app, "POST", "/api/v1/sessions", Some(json!({"mode": "rng"}))).await;
    let id = body["id"].as_str().unwrap();
    let (status, _) = roll(&app, id, &[5, 5, 5, 5, 5]).await;
    assert_eq!(status, StatusCode::BAD_REQUEST);
}

#[tokio::test]
async fn sessions_survive_a_restart() {
    let dir = tempfile::tempdir().unwrap();
    let first = AppState::with_event_log(solution(), dir.path()).unwrap();
    let id = manual_session(&first).await;
    roll(&first, &id, &[5, 5, 1, 2, 3]).await;
    call(&first, "POST", &format!("/api/v1/sessions/{id}/act"), Some(json!({"action": "m55"}))).await;
    let (_, before) = call(&first, "GET", &format!("/api/v1/sessions/{id}"), None).await;
    drop(first);

    let second = AppState::with_event_log(solution(), dir.path()).unwrap();
    assert_eq!(second.session_count(), 1);
    let (status, after) = call(&second, "GET", &format!("/api/v1/sessions/{id}"), None).await;
    assert_eq!(status, StatusCode::OK);
    assert_eq!(after, before);
    assert_eq!(after["history"].as_array().unwrap().len(), 2);
}

#[tokio::test]
async fn corrupt_logs_are_reported() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::write(
        dir.path().join("00000000-0000-0000-0000-000000000001.jsonl"),
        "{\"kind\":\"acted\",\"action\":\"s\"}\n",
    )
    .unwrap();
    assert!(AppState::with_event_log(solution(), dir.path()).is_err());
}

#[tokio::test]
async fn policy_exports() {
    let app = app();
    let (status, body) = call(&app, "GET", "/api/v1/policy", None).await;
    assert_eq!(status, StatusCode::OK);
    assert_eq!(body["metadata"]["variant"], "all");
    let rows = body["rows"].as_array().unwrap();
    assert_eq!(rows[0]["value_dec"], "5.8720189185");

    let (status, body) = call(&app, "GET", "/api/v1/policy?variant=s,r", None).await;
    assert_eq!(status, StatusCode::OK);
    assert_eq!(body["rows"][0]["value_dec"], "5.5763262782");

    let (status, _) = call(&app, "GET", "/api/v1/policy?variant=m5", None).await;
    assert_eq!(status, StatusCode::BAD_REQUEST);
}
