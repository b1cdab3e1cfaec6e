//! Solve the full game exactly and inspect a few states.
//!
//! cargo run -p tenk-core --example solve_game

use tenk_core::value::to_decimal;
use tenk_core::{solve_backward, GameState};

fn main() {
    let solution = solve_backward();
    println!("value of the game: {}", to_decimal(solution.initial_value(), 10));
    println!("exact: {}", solution.initial_value());

    for (tau, config, n) in [(1, "1,0,0", 4), (2, "2,0,0", 3), (4, "2,1,0", 2), (19, "0,1,0", 4)] {
        let state = GameState::active(tau, config.parse().unwrap(), n).unwrap();
        let value = solution.value(&state).unwrap();
        let action = solution.action(&state).unwrap();
        println!("{state}: {} via {action}", to_decimal(&value, 3));
    }
}
