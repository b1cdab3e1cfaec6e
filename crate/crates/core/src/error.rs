use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid die face {0}; faces must be in 1..=6")]
    InvalidFace(u8),
    #[error("a roll needs between 1 and 5 dice, got {0}")]
    DiceCount(usize),
    #[error("invalid configuration [{fives},{ones},{triple}]")]
    InvalidConfiguration { fives: u8, ones: u8, triple: u8 },
    #[error("invalid state: {0}")]
    InvalidState(String),
    #[error("the absorbing state has no actions")]
    TerminalState,
    #[error("action {action} is not available in state {state}")]
    IllegalAction { action: String, state: String },
    #[error("unknown action `{0}`")]
    UnknownAction(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("value iteration did not converge after {iterations} sweeps (residual {residual:e})")]
    NotConverged { iterations: usize, residual: f64 },
    #[error("policy gives no action in reached state {0}")]
    PolicyGap(String),
    #[error("base {0} is too small: the geometric solution drops below the stopping payoff")]
    BaseTooSmall(f64),
    #[error("export format version {found} is not supported (expected {expected})")]
    VersionMismatch { found: u32, expected: u32 },
    #[error("malformed export: {0}")]
    Malformed(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Csv(#[from] csv::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
