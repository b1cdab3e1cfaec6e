use thiserror::Error;
use uuid::Uuid;

use tenk_core::{ActionId, GameState};

use crate::session::Status;

#[derive(Debug, Error)]
pub enum AdvisorError {
    #[error("no session {0}")]
    UnknownSession(Uuid),
    #[error("cannot {operation} a session that is {status:?}")]
    WrongStatus { operation: String, status: Status },
    #[error("{action} is not available in {state}")]
    IllegalAction {
        action: ActionId,
        state: GameState,
        legal: Vec<ActionId>,
    },
    #[error("{0}")]
    BadInput(String),
    #[error("event log: {0}")]
    CorruptLog(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Core(#[from] tenk_core::Error),
}
