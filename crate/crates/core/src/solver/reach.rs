//! Forward reachability from the initial state under any sequence of actions.

use std::collections::VecDeque;

use crate::action::ActionId;
use crate::dice::{Configuration, CONFIG_COUNT};
use crate::state::{available_actions, transitions, GameState};

use super::{is_admissible, STOPPING_BOUNDARY};

/// Which active states below the boundary can occur in play.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Reachability {
    reached: Vec<bool>,
}

impl Reachability {
    fn slot(tau: u32, config: Configuration, dice: u8) -> usize {
        (tau as usize * CONFIG_COUNT + config.index()) * 5 + dice as usize - 1
    }

    pub fn contains(&self, tau: u32, config: Configuration, dice: u8) -> bool {
        tau < STOPPING_BOUNDARY
            && !config.is_zero()
            && is_admissible(config, dice)
            && self.reached[Self::slot(tau, config, dice)]
    }

    /// Smallest chip count at which `(·, config, dice)` is reached.
    pub fn first_reached(&self, config: Configuration, dice: u8) -> Option<u32> {
        (0..STOPPING_BOUNDARY).find(|&tau| self.contains(tau, config, dice))
    }

    pub fn count(&self) -> usize {
        self.reached.iter().filter(|&&r| r).count()
    }
}

pub fn reachable_states() -> Reachability {
    reachable_states_with(|_| true)
}

/// Reachability when only actions accepted by `allowed` are ever taken.
/// Stop and roll are always allowed.
pub fn reachable_states_with(allowed: impl Fn(ActionId) -> bool) -> Reachability {
    let mut reached = vec![false; STOPPING_BOUNDARY as usize * CONFIG_COUNT * 5];
    let mut queue = VecDeque::from([GameState::Initial]);
    while let Some(state) = queue.pop_front() {
        let actions = available_actions(&state).expect("queued states are not terminal");
        for action in actions {
            if action.is_move() && !allowed(action) {
                continue;
            }
            for entry in transitions(&state, action).expect("available action") {
                if let GameState::Active { tau, config, n } = entry.next {
                    if tau >= STOPPING_BOUNDARY {
                        continue;
                    }
                    let slot = Reachability::slot(tau, config, n);
                    if !reached[slot] {
                        reached[slot] = true;
                        queue.push_back(entry.next);
                    }
                }
            }
        }
    }
    Reachability { reached }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg(f: u8, o: u8, t: u8) -> Configuration {
        Configuration::new(f, o, t).unwrap()
    }

    #[test]
    fn reachable_cells() {
        let r = reachable_states();
        assert!(r.contains(1, cfg(1, 0, 0), 4));
        assert!(!r.contains(0, cfg(1, 0, 0), 4));
        assert!(r.contains(2, cfg(2, 0, 0), 3));
        assert!(!r.contains(2, cfg(1, 1, 0), 3));
        assert!(!r.contains(3, cfg(0, 2, 0), 3));
        assert!(r.contains(4, cfg(0, 2, 0), 3));
        assert!(r.contains(4, cfg(2, 1, 0), 2));
        assert!(!r.contains(4, cfg(1, 2, 0), 2));
        assert!(r.contains(5, cfg(1, 2, 0), 2));
        assert!(!r.contains(2, cfg(2, 0, 0), 2));
        assert!(r.contains(3, cfg(2, 0, 0), 2));
    }

    #[test]
    fn reached_states_hold_at_least_their_score() {
        let r = reachable_states();
        for tau in 0..STOPPING_BOUNDARY {
            for &c in crate::dice::configurations() {
                for n in 1..=5 {
                    if r.contains(tau, c, n) {
                        assert!(tau >= c.score());
                    }
                }
            }
        }
    }
}
