//! Exact solution of the game by backward induction over accumulated chips.
//!
//! Above the critical threshold stopping is optimal everywhere, so only the
//! finitely many states below it need solving. Values are exact rationals.

mod fixed_point;
mod gathered;
mod reach;
mod reconcile;

pub use fixed_point::{check_fixed_point, FixedPointReport};
pub use gathered::{solve_efficient, GatheredClass, GatheredClassTable};
pub use reach::{reachable_states, reachable_states_with, Reachability};
pub use reconcile::{reconcile, ReconcileReport};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::action::ActionId;
use crate::dice::{self, Configuration, CONFIG_COUNT};
use crate::frequency::{frequencies, FrequencyTable};
use crate::state::{after_move, after_roll, GameState};
use crate::value::{chips, Value};

/// Chip count from which the value of every state is its chip count.
pub const STOPPING_BOUNDARY: u32 = 56;

/// Smallest positive `τ` with `Σₖ f(n,k)·s(k) ≤ τ·f(n,𝟎)`: from there on,
/// a roll whose successors are all worth their chips loses on average.
pub fn critical_threshold(dice: u8) -> u32 {
    let table = frequencies();
    let gain = table.total_score(dice);
    let bust = table.bust(dice) as u64;
    gain.div_ceil(bust).max(1) as u32
}

/// Expected change in chips from one roll of `dice` dice at `tau`, assuming
/// every successor is then banked: `(Σₖ f(n,k)s(k) − τ f(n,𝟎)) / 6ⁿ`.
pub fn roll_once_gain(tau: u32, dice: u8) -> BigRational {
    let table = frequencies();
    let numer = BigInt::from(table.total_score(dice)) - BigInt::from(tau) * table.bust(dice);
    BigRational::new(numer, FrequencyTable::outcomes(dice).into())
}

/// `Σ_{k ∈ ℐ(n)} f(n,k)/6ⁿ · V(τ + s(k), k, n − d(k) + 5·[n = d(k)])`, with
/// successor values supplied by `lookup`.
pub(crate) fn roll_value(
    tau: u32,
    dice: u8,
    mut lookup: impl FnMut(u32, Configuration, u8) -> Value,
) -> Value {
    let table = frequencies();
    let mut sum = Value::zero();
    for (k, count) in table.scoring(dice) {
        let GameState::Active { tau, config, n } = after_roll(tau, dice, k) else {
            unreachable!()
        };
        sum += lookup(tau, config, n) * BigInt::from(count);
    }
    sum / BigInt::from(FrequencyTable::outcomes(dice))
}

pub(crate) fn is_admissible(config: Configuration, dice: u8) -> bool {
    (1..=5).contains(&dice) && (dice == 5 || config.scoring_dice() + dice <= 5)
}

/// Value and chosen action of one state.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decision {
    pub value: Value,
    pub action: ActionId,
}

/// Exact values and optimal actions for every admissible state below the
/// stopping boundary, plus the value of the initial state.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Solution {
    cells: Vec<Option<Decision>>,
    initial: Value,
}

impl Solution {
    pub(crate) fn empty() -> Self {
        Solution {
            cells: vec![None; STOPPING_BOUNDARY as usize * CONFIG_COUNT * 5],
            initial: Value::zero(),
        }
    }

    /// Number of admissible cells below the boundary.
    pub(crate) fn empty_cell_count() -> usize {
        let per_tau = dice::configurations()
            .iter()
            .flat_map(|&c| (1..=5u8).filter(move |&n| is_admissible(c, n)))
            .count();
        per_tau * STOPPING_BOUNDARY as usize
    }

    fn slot(tau: u32, config: Configuration, dice: u8) -> usize {
        (tau as usize * CONFIG_COUNT + config.index()) * 5 + dice as usize - 1
    }

    pub(crate) fn set(&mut self, tau: u32, config: Configuration, dice: u8, decision: Decision) {
        debug_assert!(tau < STOPPING_BOUNDARY && is_admissible(config, dice));
        self.cells[Self::slot(tau, config, dice)] = Some(decision);
    }

    pub(crate) fn set_initial(&mut self, value: Value) {
        self.initial = value;
    }

    /// The stored decision for `(tau, config, dice)`; `None` at or above the
    /// boundary or for inadmissible dice counts.
    pub fn decision(&self, tau: u32, config: Configuration, dice: u8) -> Option<&Decision> {
        if tau >= STOPPING_BOUNDARY || config.is_zero() || !is_admissible(config, dice) {
            return None;
        }
        self.cells[Self::slot(tau, config, dice)].as_ref()
    }

    /// `V*(ι)`.
    pub fn initial_value(&self) -> &Value {
        &self.initial
    }

    /// Value of any state, using `V = τ` at and above the boundary.
    pub fn value(&self, state: &GameState) -> Option<Value> {
        match *state {
            GameState::Initial => Some(self.initial.clone()),
            GameState::Terminal => Some(Value::zero()),
            GameState::Active { tau, .. } if tau >= STOPPING_BOUNDARY => Some(chips(tau)),
            GameState::Active { tau, config, n } => {
                self.decision(tau, config, n).map(|d| d.value.clone())
            }
        }
    }

    /// Chosen action in any non-terminal state; stop at and above the boundary.
    pub fn action(&self, state: &GameState) -> Option<ActionId> {
        match *state {
            GameState::Initial => Some(ActionId::Roll),
            GameState::Terminal => None,
            GameState::Active { tau, .. } if tau >= STOPPING_BOUNDARY => Some(ActionId::Stop),
            GameState::Active { tau, config, n } => self.decision(tau, config, n).map(|d| d.action),
        }
    }

    /// `V_roll(τ, n)`. Panics if a successor below the boundary has no value
    /// yet, which would mean states were solved out of order.
    pub fn v_roll(&self, tau: u32, dice: u8) -> Value {
        roll_value(tau, dice, |t, k, n| self.successor_value(t, k, n))
    }

    fn successor_value(&self, tau: u32, config: Configuration, dice: u8) -> Value {
        if tau >= STOPPING_BOUNDARY {
            return chips(tau);
        }
        match self.decision(tau, config, dice) {
            Some(d) => d.value.clone(),
            None => panic!("successor ({tau}, [{config}], {dice}) has no value yet"),
        }
    }

    /// All solved cells in `(τ, configuration, n)` order.
    pub fn cells(&self) -> impl Iterator<Item = (GameState, &Decision)> + '_ {
        (0..STOPPING_BOUNDARY).flat_map(move |tau| {
            dice::configurations().iter().flat_map(move |&config| {
                (1..=5u8).filter_map(move |n| {
                    self.decision(tau, config, n)
                        .map(|d| (GameState::Active { tau, config, n }, d))
                })
            })
        })
    }
}

/// Solves the full game by backward induction over chips.
pub fn solve_backward() -> Solution {
    backward_induction(|_| true)
}

/// Backward induction where only moves accepted by `allowed` may be chosen.
///
/// For each chip count from the top down: five-dice states take the roll
/// value; each smaller dice count computes its roll value once, stops when
/// that is no better than the chips held, and otherwise offers the roll value
/// to every state that can move into it, which takes it on strict improvement.
pub(crate) fn backward_induction(allowed: impl Fn(ActionId) -> bool) -> Solution {
    debug_assert_eq!(critical_threshold(5), STOPPING_BOUNDARY);
    let mut sol = Solution::empty();
    for tau in (0..STOPPING_BOUNDARY).rev() {
        let roll5 = sol.v_roll(tau, 5);
        for &config in dice::configurations() {
            sol.set(
                tau,
                config,
                5,
                Decision {
                    value: roll5.clone(),
                    action: ActionId::Roll,
                },
            );
        }
        for dice in (1..=4u8).rev() {
            let aux = sol.v_roll(tau, dice);
            let stop = aux <= chips(tau);
            for target in dice::configurations_up_to(5 - dice) {
                if stop {
                    sol.set(
                        tau,
                        target,
                        dice,
                        Decision {
                            value: chips(tau),
                            action: ActionId::Stop,
                        },
                    );
                    continue;
                }
                sol.set(
                    tau,
                    target,
                    dice,
                    Decision {
                        value: aux.clone(),
                        action: ActionId::Roll,
                    },
                );
                for source in dice::movers_into(target, dice) {
                    let action = ActionId::for_move(source, target).expect("named move");
                    if !allowed(action) {
                        continue;
                    }
                    let src_tau = tau + source.score() - target.score();
                    if src_tau >= STOPPING_BOUNDARY {
                        continue;
                    }
                    let src_dice = dice + target.scoring_dice() - source.scoring_dice();
                    debug_assert_eq!(
                        after_move(src_tau, source, src_dice, target),
                        GameState::Active {
                            tau,
                            config: target,
                            n: dice
                        }
                    );
                    let current = sol
                        .decision(src_tau, source, src_dice)
                        .expect("source solved at a higher chip count");
                    if current.value < aux {
                        sol.set(
                            src_tau,
                            source,
                            src_dice,
                            Decision {
                                value: aux.clone(),
                                action,
                            },
                        );
                    }
                }
            }
        }
    }
    let initial = sol.v_roll(0, 5);
    sol.set_initial(initial);
    sol
}
