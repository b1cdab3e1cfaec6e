//! Every legal action in one state with its exact expected value.
//!
//! `--example advise_state 4 2,1,0 2`

use tenk_core::state::transitions;
use tenk_core::value::to_decimal;
use tenk_core::{available_actions, ActionId, GameState};

fn main() {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let (tau, config, n) = match args.as_slice() {
        [t, c, n] => (t.parse().unwrap(), c.parse().unwrap(), n.parse().unwrap()),
        _ => (4, "2,1,0".parse().unwrap(), 2),
    };
    let state = GameState::active(tau, config, n).expect("valid state");
    let solution = tenk_core::solve_backward();
    let best = solution.action(&state).unwrap();
    for action in available_actions(&state).unwrap() {
        let value = match action {
            ActionId::Stop => tenk_core::value::chips(tau),
            ActionId::Roll => solution.v_roll(tau, n),
            _ => solution.value(&transitions(&state, action).unwrap()[0].next).unwrap(),
        };
        let mark = if action == best { "*" } else { " " };
        println!("{mark} {action:<4} {}", to_decimal(&value, 6));
    }
}
