//! One turn played through the service, independent of HTTP.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use uuid::Uuid;

use tenk_core::state::{after_roll, transitions};
use tenk_core::value::{chips, to_decimal};
use tenk_core::{available_actions, classify_roll, ActionId, Configuration, GameState, Solution, Value};

use crate::error::AdvisorError;

/// Decimal places in advised values.
pub const ADVICE_PLACES: u32 = 10;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Mode {
    /// The server rolls from a seeded generator.
    Rng,
    /// The client enters faces, e.g. from physical dice.
    Manual,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    AwaitingRoll,
    AwaitingDecision,
    Banked,
    Busted,
}

impl Status {
    pub fn is_finished(self) -> bool {
        matches!(self, Status::Banked | Status::Busted)
    }
}

/// What the client did at one step.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Event {
    Rolled { faces: Vec<u8> },
    Acted { action: ActionId },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HistoryEntry {
    pub state: GameState,
    pub event: Event,
    pub next: GameState,
    pub status: Status,
}

/// Result of classifying a roll.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RollOutcome {
    pub faces: Vec<u8>,
    /// `None` when nothing scored.
    pub config: Option<Configuration>,
    pub score: u32,
    pub hot_dice: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ActionAdvice {
    pub action: ActionId,
    /// The state a move lands in; `None` for stop and roll.
    pub next_state: Option<GameState>,
    pub value_dec: String,
    pub value_num: String,
    pub value_den: String,
    pub optimal: bool,
    #[serde(skip)]
    pub value: Value,
}

#[derive(Debug, Clone)]
pub struct Session {
    pub id: Uuid,
    pub mode: Mode,
    pub seed: Option<u64>,
    rng: Option<ChaCha8Rng>,
    pub state: GameState,
    pub status: Status,
    pub history: Vec<HistoryEntry>,
}

impl Session {
    /// A fresh turn at the initial state. Rng sessions without a seed get a
    /// random one, recorded so the turn can be replayed.
    pub fn new(id: Uuid, mode: Mode, seed: Option<u64>) -> Self {
        let seed = match mode {
            Mode::Rng => Some(seed.unwrap_or_else(rand::random)),
            Mode::Manual => seed,
        };
        let rng = match mode {
            Mode::Rng => seed.map(ChaCha8Rng::seed_from_u64),
            Mode::Manual => None,
        };
        Session {
            id,
            mode,
            seed,
            rng,
            state: GameState::Initial,
            status: Status::AwaitingRoll,
            history: Vec::new(),
        }
    }

    /// Banked chips, or 0 once busted; `None` while the turn is live.
    pub fn payoff(&self) -> Option<u32> {
        match self.status {
            Status::Banked => Some(self.state.chips()),
            Status::Busted => Some(0),
            _ => None,
        }
    }

    fn require(&self, allowed: &[Status], operation: &str) -> Result<(), AdvisorError> {
        if allowed.contains(&self.status) {
            Ok(())
        } else {
            Err(AdvisorError::WrongStatus {
                operation: operation.to_string(),
                status: self.status,
            })
        }
    }

    /// Rolls the dice. Rng sessions draw the faces; manual sessions must
    /// supply exactly one face per die. Rolling while a decision is pending
    /// takes the roll action first.
    pub fn roll(&mut self, faces: Option<Vec<u8>>) -> Result<RollOutcome, AdvisorError> {
        self.require(&[Status::AwaitingRoll, Status::AwaitingDecision], "roll")?;
        let dice = self.state.dice() as usize;
        let faces = match (self.mode, faces) {
            (Mode::Manual, None) => {
                return Err(AdvisorError::BadInput("manual sessions need the rolled faces".into()))
            }
            (Mode::Rng, Some(_)) => {
                return Err(AdvisorError::BadInput("rng sessions roll on the server".into()))
            }
            (Mode::Manual, Some(f)) => f,
            (Mode::Rng, None) => {
                let rng = self.rng.as_mut().expect("rng sessions keep a generator");
                (0..dice).map(|_| rng.random_range(1..=6u8)).collect()
            }
        };
        if faces.len() != dice {
            return Err(AdvisorError::BadInput(format!(
                "expected {dice} faces, got {}",
                faces.len()
            )));
        }
        let rolled = classify_roll(&faces).map_err(|e| AdvisorError::BadInput(e.to_string()))?;
        if self.status == Status::AwaitingDecision {
            self.act(ActionId::Roll)?;
        }
        Ok(self.apply_roll(faces, rolled))
    }

    fn apply_roll(&mut self, faces: Vec<u8>, rolled: Configuration) -> RollOutcome {
        let before = self.state;
        let dice = before.dice();
        let (next, status) = if rolled.is_zero() {
            (GameState::Terminal, Status::Busted)
        } else {
            (after_roll(before.chips(), dice, rolled), Status::AwaitingDecision)
        };
        let outcome = RollOutcome {
            faces: faces.clone(),
            config: (!rolled.is_zero()).then_some(rolled),
            score: rolled.score(),
            hot_dice: !rolled.is_zero() && rolled.scoring_dice() == dice,
        };
        self.state = next;
        self.status = status;
        self.history.push(HistoryEntry {
            state: before,
            event: Event::Rolled { faces },
            next,
            status,
        });
        outcome
    }

    /// Takes `action`, which must be legal in the current state.
    pub fn act(&mut self, action: ActionId) -> Result<(), AdvisorError> {
        self.require(&[Status::AwaitingDecision], "act")?;
        let legal = available_actions(&self.state).expect("live sessions are not terminal");
        if !legal.contains(&action) {
            return Err(AdvisorError::IllegalAction {
                action,
                state: self.state,
                legal,
            });
        }
        let before = self.state;
        let (next, status) = match action {
            ActionId::Stop => (before, Status::Banked),
            ActionId::Roll => (before, Status::AwaitingRoll),
            _ => {
                let entries = transitions(&before, action).expect("legal move");
                (entries[0].next, Status::AwaitingDecision)
            }
        };
        self.state = next;
        self.status = status;
        self.history.push(HistoryEntry {
            state: before,
            event: Event::Acted { action },
            next,
            status,
        });
        Ok(())
    }

    /// Every legal action with its exact value under `solution`; the one the
    /// policy takes is flagged optimal.
    pub fn advise(&self, solution: &Solution) -> Result<Vec<ActionAdvice>, AdvisorError> {
        self.require(&[Status::AwaitingDecision], "advise")?;
        Ok(advise_state(solution, &self.state))
    }

    /// Re-applies a logged event; rng rolls must reproduce the logged faces.
    pub fn replay(&mut self, event: &Event) -> Result<(), AdvisorError> {
        match event {
            Event::Acted { action } => self.act(*action),
            Event::Rolled { faces } => {
                let supplied = match self.mode {
                    Mode::Manual => Some(faces.clone()),
                    Mode::Rng => None,
                };
                let outcome = self.roll(supplied)?;
                if &outcome.faces != faces {
                    return Err(AdvisorError::CorruptLog(format!(
                        "session {} rolled {:?} on replay, log says {faces:?}",
                        self.id, outcome.faces
                    )));
                }
                Ok(())
            }
        }
    }
}

/// Advice for any non-terminal state other than the initial one.
pub fn advise_state(solution: &Solution, state: &GameState) -> Vec<ActionAdvice> {
    let best = solution.action(state);
    available_actions(state)
        .unwrap_or_default()
        .into_iter()
        .map(|action| {
            let (value, next_state) = match action {
                ActionId::Stop => (chips(state.chips()), None),
                ActionId::Roll => (solution.v_roll(state.chips(), state.dice()), None),
                _ => {
                    let next = transitions(state, action).expect("legal move")[0].next;
                    (solution.value(&next).expect("destination is solved"), Some(next))
                }
            };
            ActionAdvice {
                action,
                next_state,
                value_dec: to_decimal(&value, ADVICE_PLACES),
                value_num: value.numer().to_string(),
                value_den: value.denom().to_string(),
                optimal: Some(action) == best,
                value,
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn manual() -> Session {
        Session::new(Uuid::nil(), Mode::Manual, None)
    }

    #[test]
    fn busting_at_the_start() {
        let mut s = manual();
        let out = s.roll(Some(vec![2, 3, 4, 6, 6])).unwrap();
        assert_eq!(out.config, None);
        assert_eq!(s.status, Status::Busted);
        assert_eq!(s.state, GameState::Terminal);
        assert_eq!(s.payoff(), Some(0));
        assert!(matches!(s.roll(Some(vec![1])), Err(AdvisorError::WrongStatus { .. })));
    }

    #[test]
    fn hot_dice_from_the_start() {
        let mut s = manual();
        let out = s.roll(Some(vec![5, 5, 5, 5, 5])).unwrap();
        assert!(out.hot_dice);
        assert_eq!(s.state, GameState::active(12, "5,0,0".parse().unwrap(), 5).unwrap());
    }

    #[test]
    fn wrong_face_count_is_rejected() {
        let mut s = manual();
        assert!(matches!(s.roll(Some(vec![5, 5])), Err(AdvisorError::BadInput(_))));
        assert!(matches!(s.roll(None), Err(AdvisorError::BadInput(_))));
        assert_eq!(s.status, Status::AwaitingRoll);
        assert!(s.history.is_empty());
    }

    #[test]
    fn rng_sessions_replay() {
        let mut a = Session::new(Uuid::nil(), Mode::Rng, Some(9));
        let mut b = Session::new(Uuid::nil(), Mode::Rng, Some(9));
        for _ in 0..3 {
            if a.status.is_finished() {
                break;
            }
            assert_eq!(a.roll(None).unwrap(), b.roll(None).unwrap());
        }
        assert_eq!(a.history, b.history);
    }
}
