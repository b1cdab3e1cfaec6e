//! Successive approximation `W_k = U W_{k-1}` from `W_0 ≡ 0`.
//!
//! The value function is the limit of these iterates. The state space is cut
//! at `tau_max`; beyond it every iterate after the first equals the chips
//! held, which is exact there.

use crate::action::ActionId;
use crate::dice::{self, Configuration, CONFIG_COUNT};
use crate::error::{Error, Result};
use crate::frequency::{frequencies, FrequencyTable};
use crate::solver::STOPPING_BOUNDARY;
use crate::state::{after_roll, available_actions, GameState};

#[derive(Debug, Clone)]
pub struct ValueIterationConfig {
    pub tau_max: u32,
    pub tolerance: f64,
    pub max_iterations: usize,
}

impl Default for ValueIterationConfig {
    fn default() -> Self {
        ValueIterationConfig {
            tau_max: 80,
            tolerance: 1e-9,
            max_iterations: 10_000,
        }
    }
}

/// Per-sweep structural checks.
#[derive(Debug, Clone, Copy)]
pub struct SweepStats {
    pub k: usize,
    pub delta: f64,
    /// `W_k ≥ W_{k-1}` at every state.
    pub monotone: bool,
    /// `W_k(τ, ·, ·) = τ` for every active state with `τ ≥ 56`.
    pub boundary_exact: bool,
}

#[derive(Debug, Clone)]
pub struct IterationSnapshot {
    pub k: usize,
    pub delta: f64,
    tau_max: u32,
    values: Vec<f64>,
    initial: f64,
    /// `W_1(x) = τ` at every active state.
    pub first_sweep_is_chips: bool,
    pub history: Vec<SweepStats>,
}

impl IterationSnapshot {
    /// `W_k` at an active state within the truncation.
    pub fn value(&self, tau: u32, config: Configuration, dice: u8) -> Option<f64> {
        let slot = slot(self.tau_max, tau, config, dice)?;
        Some(self.values[slot])
    }

    pub fn initial(&self) -> f64 {
        self.initial
    }
}

fn slot(tau_max: u32, tau: u32, config: Configuration, dice: u8) -> Option<usize> {
    let admissible = (1..=5).contains(&dice) && (dice == 5 || config.scoring_dice() + dice <= 5);
    if tau > tau_max || config.is_zero() || !admissible {
        return None;
    }
    Some((tau as usize * CONFIG_COUNT + config.index()) * 5 + dice as usize - 1)
}

/// One outcome of a roll, precomputed: probability, chip gain and successor.
struct RollBranch {
    probability: f64,
    gain: u32,
    config: Configuration,
    dice: u8,
}

fn roll_branches(table: &FrequencyTable, dice: u8) -> Vec<RollBranch> {
    let outcomes = FrequencyTable::outcomes(dice) as f64;
    table
        .scoring(dice)
        .map(|(k, count)| {
            let next = after_roll(0, dice, k);
            RollBranch {
                probability: count as f64 / outcomes,
                gain: k.score(),
                config: k,
                dice: next.dice(),
            }
        })
        .collect()
}

pub fn value_iteration(config: &ValueIterationConfig) -> Result<IterationSnapshot> {
    assert!(config.tau_max >= STOPPING_BOUNDARY, "truncation below the stopping boundary");
    assert!(config.tolerance > 0.0);
    let tau_max = config.tau_max;
    let table = frequencies();
    let branches: Vec<Vec<RollBranch>> = (1..=5).map(|n| roll_branches(table, n)).collect();

    // every admissible active state, with its moves as (destination slot)
    struct Node {
        slot: usize,
        tau: u32,
        dice: u8,
        moves: Vec<usize>,
    }
    let mut nodes = Vec::new();
    for tau in 0..=tau_max {
        for &c in dice::configurations() {
            for n in 1..=5u8 {
                let Some(s) = slot(tau_max, tau, c, n) else {
                    continue;
                };
                let state = GameState::Active { tau, config: c, n };
                let moves = available_actions(&state)
                    .expect("active")
                    .into_iter()
                    .filter(|a| a.is_move())
                    .map(|a: ActionId| {
                        let to = a.apply_move(c).expect("legal move");
                        let dest = crate::state::after_move(tau, c, n, to);
                        slot(tau_max, dest.chips(), to, dest.dice()).expect("moves lower chips")
                    })
                    .collect();
                nodes.push(Node {
                    slot: s,
                    tau,
                    dice: n,
                    moves,
                });
            }
        }
    }

    let len = (tau_max as usize + 1) * CONFIG_COUNT * 5;
    let mut current = vec![0.0f64; len];
    let mut initial = 0.0f64;
    let mut history = Vec::new();
    let mut first_sweep_is_chips = true;

    for k in 1..=config.max_iterations {
        // W_{k-1} beyond the truncation: 0 for k-1 = 0, τ afterwards
        let prev = &current;
        let beyond = |tau: u32| if k == 1 { 0.0 } else { tau as f64 };
        let roll = |tau: u32, dice: u8| -> f64 {
            branches[dice as usize - 1]
                .iter()
                .map(|b| {
                    let t = tau + b.gain;
                    let w = match slot(tau_max, t, b.config, b.dice) {
                        Some(s) => prev[s],
                        None => beyond(t),
                    };
                    b.probability * w
                })
                .sum()
        };
        let mut next = vec![0.0f64; len];
        for node in &nodes {
            let mut best = node.tau as f64;
            best = best.max(roll(node.tau, node.dice));
            for &dest in &node.moves {
                best = best.max(prev[dest]);
            }
            next[node.slot] = best;
        }
        let next_initial = roll(0, 5);

        let mut delta = (next_initial - initial).abs();
        let mut monotone = next_initial >= initial;
        let mut boundary_exact = true;
        for node in &nodes {
            let (old, new) = (current[node.slot], next[node.slot]);
            delta = delta.max((new - old).abs());
            monotone &= new >= old;
            if node.tau >= STOPPING_BOUNDARY {
                boundary_exact &= new == node.tau as f64;
            }
            if k == 1 {
                first_sweep_is_chips &= new == node.tau as f64;
            }
        }
        history.push(SweepStats {
            k,
            delta,
            monotone,
            boundary_exact,
        });
        current = next;
        initial = next_initial;
        if delta < config.tolerance {
            return Ok(IterationSnapshot {
                k,
                delta,
                tau_max,
                values: current,
                initial,
                first_sweep_is_chips,
                history,
            });
        }
    }
    Err(Error::NotConverged {
        iterations: config.max_iterations,
        residual: history.last().map_or(f64::INFINITY, |s| s.delta),
    })
}
