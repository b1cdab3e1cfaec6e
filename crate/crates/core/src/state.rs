//! States of the control process and its one-step dynamics.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use crate::action::ActionId;
use crate::dice::Configuration;
use crate::error::{Error, Result};
use crate::frequency::{frequencies, FrequencyTable};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum GameState {
    /// Start of the turn: no chips, five dice, nothing rolled yet.
    Initial,
    /// The turn is over.
    Terminal,
    Active {
        /// Accumulated chips.
        tau: u32,
        /// Last obtained configuration.
        config: Configuration,
        /// Dice available to roll.
        n: u8,
    },
}

impl GameState {
    /// Builds an active state, checking that the dice counts are consistent:
    /// either five dice are available or `d(config) + n ≤ 5`.
    pub fn active(tau: u32, config: Configuration, n: u8) -> Result<Self> {
        if config.is_zero() || !(1..=5).contains(&n) || (n != 5 && config.scoring_dice() + n > 5) {
            return Err(Error::InvalidState(format!("({tau}, [{config}], {n})")));
        }
        Ok(GameState::Active { tau, config, n })
    }

    /// Chips at stake; zero for the initial and terminal states.
    pub fn chips(&self) -> u32 {
        match *self {
            GameState::Active { tau, .. } => tau,
            _ => 0,
        }
    }

    /// Dice available to roll.
    pub fn dice(&self) -> u8 {
        match *self {
            GameState::Initial => 5,
            GameState::Terminal => 0,
            GameState::Active { n, .. } => n,
        }
    }
}

impl fmt::Display for GameState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GameState::Initial => f.write_str("initial"),
            GameState::Terminal => f.write_str("terminal"),
            GameState::Active { tau, config, n } => write!(f, "({tau}, [{config}], {n})"),
        }
    }
}

/// One branch of a transition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TransitionEntry {
    pub next: GameState,
    pub probability: BigRational,
    pub reward: u32,
}

pub fn available_actions(state: &GameState) -> Result<Vec<ActionId>> {
    match *state {
        GameState::Initial => Ok(vec![ActionId::Roll]),
        GameState::Terminal => Err(Error::TerminalState),
        GameState::Active { tau, config, n } => {
            let mut actions = vec![ActionId::Stop, ActionId::Roll];
            if n < 5 && config.scoring_combinations() > 1 {
                // cells with fewer chips than their own score are never reached;
                // moves out of them would leave negative chips
                let mut moves: Vec<ActionId> = config
                    .sub_configurations()
                    .into_iter()
                    .filter(|to| tau + to.score() >= config.score())
                    .map(|to| ActionId::for_move(config, to).expect("named move"))
                    .collect();
                moves.sort();
                actions.extend(moves);
            }
            Ok(actions)
        }
    }
}

/// State reached after rolling `dice` dice from `tau` chips and obtaining the
/// scoring configuration `rolled`. All dice scoring gives five fresh dice.
pub fn after_roll(tau: u32, dice: u8, rolled: Configuration) -> GameState {
    let d = rolled.scoring_dice();
    debug_assert!(!rolled.is_zero() && d <= dice);
    GameState::Active {
        tau: tau + rolled.score(),
        config: rolled,
        n: if d == dice { 5 } else { dice - d },
    }
}

/// State reached by a deterministic move from `(tau, from, n)` to `to`.
pub fn after_move(tau: u32, from: Configuration, n: u8, to: Configuration) -> GameState {
    GameState::Active {
        tau: tau + to.score() - from.score(),
        config: to,
        n: n + from.scoring_dice() - to.scoring_dice(),
    }
}

pub fn transitions(state: &GameState, action: ActionId) -> Result<Vec<TransitionEntry>> {
    transitions_with(frequencies(), state, action)
}

pub fn transitions_with(
    table: &FrequencyTable,
    state: &GameState,
    action: ActionId,
) -> Result<Vec<TransitionEntry>> {
    if !available_actions(state)?.contains(&action) {
        return Err(Error::IllegalAction {
            action: action.to_string(),
            state: state.to_string(),
        });
    }
    let tau = state.chips();
    Ok(match action {
        ActionId::Stop => vec![TransitionEntry {
            next: GameState::Terminal,
            probability: BigRational::from_integer(1.into()),
            reward: tau,
        }],
        ActionId::Roll => {
            let dice = state.dice();
            let denom = BigInt::from(FrequencyTable::outcomes(dice));
            let prob = |count: u32| BigRational::new(count.into(), denom.clone());
            let mut out = vec![TransitionEntry {
                next: GameState::Terminal,
                probability: prob(table.bust(dice)),
                reward: 0,
            }];
            out.extend(table.scoring(dice).map(|(k, count)| TransitionEntry {
                next: after_roll(tau, dice, k),
                probability: prob(count),
                reward: 0,
            }));
            out
        }
        _ => {
            let GameState::Active { config, n, .. } = *state else {
                unreachable!("moves are only available in active states")
            };
            let to = action.apply_move(config).expect("legal move applies");
            vec![TransitionEntry {
                next: after_move(tau, config, n, to),
                probability: BigRational::from_integer(1.into()),
                reward: 0,
            }]
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dice::configurations;
    use num_traits::{One, Zero};

    fn cfg(f: u8, o: u8, t: u8) -> Configuration {
        Configuration::new(f, o, t).unwrap()
    }

    fn ratio(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    /// Every active state admissible in a table, for τ in `0..=max_tau`.
    fn admissible(max_tau: u32) -> Vec<GameState> {
        let mut out = Vec::new();
        for tau in 0..=max_tau {
            for &c in configurations() {
                for n in 1..=5 {
                    if let Ok(s) = GameState::active(tau, c, n) {
                        out.push(s);
                    }
                }
            }
        }
        out
    }

    #[test]
    fn action_sets() {
        assert_eq!(available_actions(&GameState::Initial).unwrap(), vec![ActionId::Roll]);
        assert!(matches!(available_actions(&GameState::Terminal), Err(Error::TerminalState)));
        let s = GameState::active(3, cfg(1, 0, 0), 2).unwrap();
        assert_eq!(available_actions(&s).unwrap(), vec![ActionId::Stop, ActionId::Roll]);
        let s = GameState::active(4, cfg(2, 1, 0), 2).unwrap();
        assert_eq!(
            available_actions(&s).unwrap(),
            vec![
                ActionId::Stop,
                ActionId::Roll,
                ActionId::Resign5,
                ActionId::Resign1,
                ActionId::Resign55,
                ActionId::Resign51
            ]
        );
        // five dice to roll: stop or roll only
        let s = GameState::active(12, cfg(5, 0, 0), 5).unwrap();
        assert_eq!(available_actions(&s).unwrap().len(), 2);
    }

    #[test]
    fn state_validation() {
        assert!(GameState::active(4, cfg(2, 1, 0), 3).is_err());
        assert!(GameState::active(4, Configuration::ZERO, 3).is_err());
        assert!(GameState::active(4, cfg(2, 1, 0), 0).is_err());
        assert!(GameState::active(12, cfg(5, 0, 0), 5).is_ok());
    }

    #[test]
    fn initial_roll_busts_with_600_outcomes() {
        let t = transitions(&GameState::Initial, ActionId::Roll).unwrap();
        assert_eq!(t[0].next, GameState::Terminal);
        assert_eq!(t[0].probability, ratio(600, 7776));
    }

    #[test]
    fn single_die_roll_and_hot_dice() {
        let s = GameState::active(7, cfg(1, 0, 0), 1).unwrap();
        let t = transitions(&s, ActionId::Roll).unwrap();
        assert_eq!(t.len(), 3);
        assert_eq!(t[0].probability, ratio(4, 6));
        assert_eq!(t[1].next, GameState::active(8, cfg(1, 0, 0), 5).unwrap());
        assert_eq!(t[1].probability, ratio(1, 6));
        assert_eq!(t[2].next, GameState::active(9, cfg(0, 1, 0), 5).unwrap());
        assert_eq!(t[2].probability, ratio(1, 6));
    }

    #[test]
    fn deterministic_move() {
        let s = GameState::active(2, cfg(2, 0, 0), 3).unwrap();
        let t = transitions(&s, ActionId::Resign5).unwrap();
        assert_eq!(t.len(), 1);
        assert_eq!(t[0].next, GameState::active(1, cfg(1, 0, 0), 4).unwrap());
        assert!(t[0].probability.is_one());
        assert_eq!(t[0].reward, 0);
    }

    #[test]
    fn illegal_actions_are_rejected() {
        let s = GameState::active(2, cfg(1, 0, 0), 3).unwrap();
        assert!(matches!(
            transitions(&s, ActionId::Resign5),
            Err(Error::IllegalAction { .. })
        ));
        assert!(transitions(&GameState::Initial, ActionId::Stop).is_err());
    }

    #[test]
    fn probabilities_sum_to_one_everywhere() {
        let mut states = admissible(3);
        states.push(GameState::Initial);
        for s in states {
            for a in available_actions(&s).unwrap() {
                let t = transitions(&s, a).unwrap();
                let total = t.iter().fold(BigRational::zero(), |acc, e| acc + &e.probability);
                assert!(total.is_one(), "{s} {a}");
                for e in &t {
                    assert_eq!(e.reward != 0, a == ActionId::Stop && s.chips() > 0);
                    if let GameState::Active { n, .. } = e.next {
                        assert!(GameState::active(e.next.chips(), match e.next {
                            GameState::Active { config, .. } => config,
                            _ => unreachable!(),
                        }, n).is_ok());
                    }
                }
            }
        }
    }

    #[test]
    fn hot_dice_gives_five() {
        for dice in 1..=5 {
            for (k, _) in frequencies().scoring(dice) {
                if k.scoring_dice() == dice {
                    assert_eq!(after_roll(0, dice, k).dice(), 5);
                }
            }
        }
    }

    #[test]
    fn move_chaining_lands_on_the_direct_move() {
        for s in admissible(30) {
            let GameState::Active { tau, config, n } = s else { unreachable!() };
            if n == 5 || tau < config.score() {
                continue;
            }
            for j in config.sub_configurations() {
                let via = after_move(tau, config, n, j);
                for k in j.sub_configurations() {
                    let GameState::Active { tau: t2, n: n2, .. } = via else { unreachable!() };
                    assert_eq!(after_move(t2, j, n2, k), after_move(tau, config, n, k));
                }
            }
        }
    }
}
