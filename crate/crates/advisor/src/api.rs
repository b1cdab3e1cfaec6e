//! HTTP routes. All bodies are JSON.

use std::collections::HashMap;
use std::path::Path;
use std::sync::{Arc, Mutex, RwLock};

use axum::body::Bytes;
use axum::extract::rejection::QueryRejection;
use axum::extract::{Path as UrlPath, Query, State};
use axum::http::{header, StatusCode};
use axum::response::{IntoResponse, Response};
use axum::routing::{get, post};
use axum::{Json, Router};
use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};
use serde_json::json;
use uuid::Uuid;

use tenk_core::policy_io::ExportBundle;
use tenk_core::value::to_decimal;
use tenk_core::{solve_restricted, ActionId, ActionSubset, Configuration, GameState, Solution};

use crate::error::AdvisorError;
use crate::session::{advise_state, Event, HistoryEntry, Mode, RollOutcome, Session, Status, ADVICE_PLACES};
use crate::store::EventLog;

/// Shared service state: the solved tables, read-only, and the live sessions.
#[derive(Clone)]
pub struct AppState {
    inner: Arc<Inner>,
}

struct Inner {
    solution: Arc<Solution>,
    sessions: RwLock<HashMap<Uuid, Arc<Mutex<Session>>>>,
    log: Option<EventLog>,
    /// Serialized exports by variant, built on first request.
    policies: Mutex<HashMap<String, Arc<String>>>,
}

impl AppState {
    pub fn new(solution: Solution) -> Self {
        Self::build(solution, None, Vec::new())
    }

    /// Persists sessions under `dir`, first replaying any sessions logged there.
    pub fn with_event_log(solution: Solution, dir: &Path) -> Result<Self, AdvisorError> {
        let log = EventLog::open(dir)?;
        let restored = log.restore()?;
        Ok(Self::build(solution, Some(log), restored))
    }

    fn build(solution: Solution, log: Option<EventLog>, restored: Vec<Session>) -> Self {
        let sessions = restored
            .into_iter()
            .map(|s| (s.id, Arc::new(Mutex::new(s))))
            .collect();
        AppState {
            inner: Arc::new(Inner {
                solution: Arc::new(solution),
                sessions: RwLock::new(sessions),
                log,
                policies: Mutex::new(HashMap::new()),
            }),
        }
    }

    pub fn solution(&self) -> &Solution {
        &self.inner.solution
    }

    pub fn session_count(&self) -> usize {
        self.inner.sessions.read().expect("sessions lock").len()
    }

    fn session(&self, id: &str) -> Result<Arc<Mutex<Session>>, AdvisorError> {
        let id: Uuid = id.parse().map_err(|_| AdvisorError::UnknownSession(Uuid::nil()))?;
        self.inner
            .sessions
            .read()
            .expect("sessions lock")
            .get(&id)
            .cloned()
            .ok_or(AdvisorError::UnknownSession(id))
    }

    /// Runs `op` with exclusive access to the session, then logs whatever
    /// events it recorded.
    fn with_session<T>(
        &self,
        id: &str,
        op: impl FnOnce(&mut Session) -> Result<T, AdvisorError>,
    ) -> Result<T, AdvisorError> {
        let session = self.session(id)?;
        let mut session = session.lock().expect("session lock");
        let before = session.history.len();
        let out = op(&mut session)?;
        if let Some(log) = &self.inner.log {
            let events: Vec<Event> = session.history[before..].iter().map(|h| h.event.clone()).collect();
            log.append(session.id, &events)?;
        }
        Ok(out)
    }

    fn policy_json(&self, variant: &ActionSubset) -> Arc<String> {
        let key = variant.to_string();
        if let Some(json) = self.inner.policies.lock().expect("policies lock").get(&key) {
            return json.clone();
        }
        let bundle = if variant.is_full() {
            ExportBundle::from_solution(&self.inner.solution, variant)
        } else {
            ExportBundle::from_solution(&solve_restricted(variant), variant)
        };
        let json = Arc::new(serde_json::to_string(&bundle).expect("bundle serializes"));
        self.inner
            .policies
            .lock()
            .expect("policies lock")
            .entry(key)
            .or_insert(json)
            .clone()
    }
}

pub fn router(state: AppState) -> Router {
    Router::new()
        .route("/api/v1/health", get(health))
        .route("/api/v1/sessions", post(create_session))
        .route("/api/v1/sessions/{id}", get(get_session))
        .route("/api/v1/sessions/{id}/roll", post(roll))
        .route("/api/v1/sessions/{id}/advice", get(advice))
        .route("/api/v1/sessions/{id}/act", post(act))
        .route("/api/v1/value", get(value))
        .route("/api/v1/policy", get(policy))
        .with_state(state)
}

impl IntoResponse for AdvisorError {
    fn into_response(self) -> Response {
        let status = match &self {
            AdvisorError::UnknownSession(_) => StatusCode::NOT_FOUND,
            AdvisorError::WrongStatus { .. } => StatusCode::CONFLICT,
            AdvisorError::IllegalAction { .. } | AdvisorError::BadInput(_) | AdvisorError::Core(_) => {
                StatusCode::BAD_REQUEST
            }
            AdvisorError::CorruptLog(_) | AdvisorError::Io(_) => StatusCode::INTERNAL_SERVER_ERROR,
        };
        let mut body = json!({ "error": self.to_string() });
        if let AdvisorError::IllegalAction { legal, .. } = &self {
            body["legal"] = json!(legal);
        }
        if let AdvisorError::WrongStatus { status, .. } = &self {
            body["status"] = json!(status);
        }
        (status, Json(body)).into_response()
    }
}

/// Parses a JSON body; an empty body reads as `{}`.
fn parse_body<T: DeserializeOwned>(body: &Bytes) -> Result<T, AdvisorError> {
    let text: &[u8] = if body.iter().all(u8::is_ascii_whitespace) { b"{}" } else { body };
    serde_json::from_slice(text).map_err(|e| AdvisorError::BadInput(format!("invalid body: {e}")))
}

#[derive(Serialize)]
struct SessionView {
    id: Uuid,
    mode: Mode,
    seed: Option<u64>,
    state: GameState,
    status: Status,
    payoff: Option<u32>,
    history: Vec<HistoryEntry>,
}

impl From<&Session> for SessionView {
    fn from(s: &Session) -> Self {
        SessionView {
            id: s.id,
            mode: s.mode,
            seed: s.seed,
            state: s.state,
            status: s.status,
            payoff: s.payoff(),
            history: s.history.clone(),
        }
    }
}

async fn health() -> Json<serde_json::Value> {
    Json(json!({ "status": "ok" }))
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct CreateRequest {
    mode: Mode,
    seed: Option<u64>,
}

async fn create_session(State(app): State<AppState>, body: Bytes) -> Result<Response, AdvisorError> {
    let req: CreateRequest = parse_body(&body)?;
    let session = Session::new(Uuid::new_v4(), req.mode, req.seed);
    if let Some(log) = &app.inner.log {
        log.create(&session)?;
    }
    let view = SessionView::from(&session);
    app.inner
        .sessions
        .write()
        .expect("sessions lock")
        .insert(session.id, Arc::new(Mutex::new(session)));
    Ok((StatusCode::CREATED, Json(view)).into_response())
}

async fn get_session(
    State(app): State<AppState>,
    UrlPath(id): UrlPath<String>,
) -> Result<Json<SessionView>, AdvisorError> {
    let session = app.session(&id)?;
    let session = session.lock().expect("session lock");
    Ok(Json(SessionView::from(&*session)))
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RollRequest {
    faces: Option<Vec<u8>>,
}

#[derive(Serialize)]
struct RollResponse {
    state: GameState,
    outcome: RollOutcome,
    status: Status,
    payoff: Option<u32>,
}

async fn roll(
    State(app): State<AppState>,
    UrlPath(id): UrlPath<String>,
    body: Bytes,
) -> Result<Json<RollResponse>, AdvisorError> {
    let req: RollRequest = parse_body(&body)?;
    app.with_session(&id, |s| {
        let outcome = s.roll(req.faces)?;
        Ok(Json(RollResponse {
            state: s.state,
            outcome,
            status: s.status,
            payoff: s.payoff(),
        }))
    })
}

async fn advice(
    State(app): State<AppState>,
    UrlPath(id): UrlPath<String>,
) -> Result<Response, AdvisorError> {
    let session = app.session(&id)?;
    let session = session.lock().expect("session lock");
    let advice = session.advise(app.solution())?;
    Ok(Json(advice).into_response())
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct ActRequest {
    action: String,
}

#[derive(Serialize)]
struct ActResponse {
    state: GameState,
    status: Status,
    payoff: Option<u32>,
}

async fn act(
    State(app): State<AppState>,
    UrlPath(id): UrlPath<String>,
    body: Bytes,
) -> Result<Json<ActResponse>, AdvisorError> {
    let req: ActRequest = parse_body(&body)?;
    let action: ActionId = req.action.parse()?;
    app.with_session(&id, |s| {
        s.act(action)?;
        Ok(Json(ActResponse {
            state: s.state,
            status: s.status,
            payoff: s.payoff(),
        }))
    })
}

#[derive(Deserialize)]
struct ValueQuery {
    tau: u32,
    f: Option<u8>,
    o: Option<u8>,
    t: Option<u8>,
    n: Option<u8>,
}

#[derive(Serialize)]
struct ValueResponse {
    state: GameState,
    value: String,
    value_num: String,
    value_den: String,
    action: ActionId,
    advice: Vec<crate::session::ActionAdvice>,
}

/// `tau` alone (or with `n=5`) and no configuration means the initial state.
async fn value(
    State(app): State<AppState>,
    query: Result<Query<ValueQuery>, QueryRejection>,
) -> Result<Json<ValueResponse>, AdvisorError> {
    let Query(q) = query.map_err(|e| AdvisorError::BadInput(e.body_text()))?;
    let state = match (q.f, q.o, q.t) {
        (None, None, None) if q.tau == 0 && q.n.is_none_or(|n| n == 5) => GameState::Initial,
        (Some(f), Some(o), Some(t)) => {
            let n = q.n.ok_or_else(|| AdvisorError::BadInput("n is required".into()))?;
            GameState::active(q.tau, Configuration::new(f, o, t)?, n)?
        }
        _ => return Err(AdvisorError::BadInput("give all of f, o, t or none of them".into())),
    };
    let solution = app.solution();
    let value = solution
        .value(&state)
        .ok_or_else(|| AdvisorError::BadInput(format!("{state} is not a solved state")))?;
    let action = solution.action(&state).expect("solved states have an action");
    let advice = match state {
        GameState::Active { .. } => advise_state(solution, &state),
        _ => Vec::new(),
    };
    Ok(Json(ValueResponse {
        state,
        value: to_decimal(&value, ADVICE_PLACES),
        value_num: value.numer().to_string(),
        value_den: value.denom().to_string(),
        action,
        advice,
    }))
}

#[derive(Deserialize)]
struct PolicyQuery {
    variant: Option<String>,
}

async fn policy(
    State(app): State<AppState>,
    query: Result<Query<PolicyQuery>, QueryRejection>,
) -> Result<Response, AdvisorError> {
    let Query(q) = query.map_err(|e| AdvisorError::BadInput(e.body_text()))?;
    let variant: ActionSubset = q.variant.as_deref().unwrap_or("all").parse()?;
    let json = app.policy_json(&variant);
    Ok(([(header::CONTENT_TYPE, "application/json")], json.as_ref().clone()).into_response())
}
