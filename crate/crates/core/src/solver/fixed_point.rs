//! Exact check that a solved table satisfies the dynamic programming equation.

use crate::action::ActionId;
use crate::state::{available_actions, transitions, GameState};
use crate::value::{chips, Value};

use super::Solution;

#[derive(Debug, Clone, Default)]
pub struct FixedPointReport {
    pub states_checked: usize,
    /// States where the stored value differs from the best action value.
    pub residuals: Vec<String>,
    /// States whose stored action does not attain the maximum.
    pub bad_actions: Vec<String>,
}

impl FixedPointReport {
    pub fn is_clean(&self) -> bool {
        self.residuals.is_empty() && self.bad_actions.is_empty()
    }
}

/// `U_a V(x)`: reward plus expected next value under `action`.
pub(crate) fn action_value(sol: &Solution, state: &GameState, action: ActionId) -> Value {
    match (action, *state) {
        (ActionId::Stop, _) => chips(state.chips()),
        (ActionId::Roll, _) => sol.v_roll(state.chips(), state.dice()),
        _ => {
            let entries = transitions(state, action).expect("available action");
            sol.value(&entries[0].next).expect("move destination valued")
        }
    }
}

/// For every solved state (and the initial state), recomputes the maximum
/// over available actions and compares it exactly with the stored value.
pub fn check_fixed_point(sol: &Solution) -> FixedPointReport {
    let mut report = FixedPointReport::default();
    let initial = action_value(sol, &GameState::Initial, ActionId::Roll);
    report.states_checked += 1;
    if &initial != sol.initial_value() {
        report.residuals.push("initial".into());
    }
    for (state, decision) in sol.cells() {
        report.states_checked += 1;
        let actions = available_actions(&state).expect("active state");
        let best = actions
            .iter()
            .map(|&a| action_value(sol, &state, a))
            .max()
            .expect("stop is always available");
        if best != decision.value {
            report
                .residuals
                .push(format!("{state}: stored {} vs {}", decision.value, best));
        }
        if !actions.contains(&decision.action) || action_value(sol, &state, decision.action) != best
        {
            report
                .bad_actions
                .push(format!("{state}: {} does not attain the maximum", decision.action));
        }
    }
    report
}
