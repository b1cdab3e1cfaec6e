//! Seeded simulation of turns under a policy.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::action::ActionId;
use crate::dice::classify_counts;
use crate::error::{Error, Result};
use crate::solver::Solution;
use crate::state::{after_move, after_roll, GameState};

/// A stationary policy: the action to take in a state.
pub trait Policy: Sync {
    fn choose(&self, state: &GameState) -> Option<ActionId>;
}

impl Policy for Solution {
    fn choose(&self, state: &GameState) -> Option<ActionId> {
        self.action(state)
    }
}

impl<F> Policy for F
where
    F: Fn(&GameState) -> Option<ActionId> + Sync,
{
    fn choose(&self, state: &GameState) -> Option<ActionId> {
        self(state)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EpisodeStep {
    pub state: GameState,
    pub action: ActionId,
    /// Faces rolled, for roll actions.
    pub roll: Option<Vec<u8>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EpisodeRecord {
    pub seed: u64,
    pub steps: Vec<EpisodeStep>,
    pub payoff: u32,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct MonteCarloEstimate {
    pub episodes: u64,
    pub mean: f64,
    pub std_error: f64,
}

/// Episodes per independent RNG stream.
const CHUNK: u64 = 65_536;

fn play<R: Rng>(
    policy: &dyn Policy,
    rng: &mut R,
    mut record: Option<&mut Vec<EpisodeStep>>,
) -> Result<u32> {
    let mut state = GameState::Initial;
    loop {
        let action = policy
            .choose(&state)
            .ok_or_else(|| Error::PolicyGap(state.to_string()))?;
        let legal = match state {
            GameState::Initial => action == ActionId::Roll,
            GameState::Terminal => false,
            GameState::Active { tau, config, n } => match action {
                ActionId::Stop | ActionId::Roll => true,
                _ => n < 5
                    && action
                        .apply_move(config)
                        .is_some_and(|to| tau + to.score() >= config.score()),
            },
        };
        if !legal {
            return Err(Error::IllegalAction {
                action: action.to_string(),
                state: state.to_string(),
            });
        }
        let mut faces_rolled = None;
        let next = match (state, action) {
            (_, ActionId::Stop) => None,
            (_, ActionId::Roll) => {
                let dice = state.dice();
                let mut counts = [0u8; 7];
                let mut faces = Vec::new();
                for _ in 0..dice {
                    let face = rng.random_range(1..=6u8);
                    counts[face as usize] += 1;
                    if record.is_some() {
                        faces.push(face);
                    }
                }
                if record.is_some() {
                    faces_rolled = Some(faces);
                }
                let rolled = classify_counts(&counts);
                if rolled.is_zero() {
                    Some(GameState::Terminal)
                } else {
                    Some(after_roll(state.chips(), dice, rolled))
                }
            }
            (GameState::Active { tau, config, n }, a) => {
                let to = a.apply_move(config).expect("checked above");
                Some(after_move(tau, config, n, to))
            }
            _ => unreachable!(),
        };
        if let Some(steps) = record.as_deref_mut() {
            steps.push(EpisodeStep {
                state,
                action,
                roll: faces_rolled,
            });
        }
        match next {
            None => return Ok(state.chips()),
            Some(GameState::Terminal) => return Ok(0),
            Some(s) => state = s,
        }
    }
}

/// Plays one turn from the initial state with a generator seeded by `seed`.
pub fn simulate_episode(policy: &dyn Policy, seed: u64) -> Result<EpisodeRecord> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut steps = Vec::new();
    let payoff = play(policy, &mut rng, Some(&mut steps))?;
    Ok(EpisodeRecord {
        seed,
        steps,
        payoff,
    })
}

/// Mean payoff and its standard error over `episodes` turns.
///
/// Episodes are split into fixed chunks, chunk `c` drawing from stream `c` of
/// a generator seeded with `seed`, so the estimate does not depend on the
/// number of worker threads.
pub fn monte_carlo_value(policy: &dyn Policy, episodes: u64, seed: u64) -> Result<MonteCarloEstimate> {
    assert!(episodes >= 1, "need at least one episode");
    let chunks = episodes.div_ceil(CHUNK);
    let sums = (0..chunks)
        .into_par_iter()
        .map(|c| -> Result<(u64, u128)> {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            rng.set_stream(c);
            let count = CHUNK.min(episodes - c * CHUNK);
            let mut sum = 0u64;
            let mut sum_sq = 0u128;
            for _ in 0..count {
                let payoff = play(policy, &mut rng, None)? as u64;
                sum += payoff;
                sum_sq += (payoff as u128) * (payoff as u128);
            }
            Ok((sum, sum_sq))
        })
        .collect::<Result<Vec<_>>>()?;
    let (sum, sum_sq) = sums
        .into_iter()
        .fold((0u64, 0u128), |(a, b), (x, y)| (a + x, b + y));
    let n = episodes as f64;
    let mean = sum as f64 / n;
    let variance = if episodes > 1 {
        (sum_sq as f64 - n * mean * mean) / (n - 1.0)
    } else {
        0.0
    };
    Ok(MonteCarloEstimate {
        episodes,
        mean,
        std_error: (variance.max(0.0) / n).sqrt(),
    })
}
