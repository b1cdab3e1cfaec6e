//! Estimate the value of the optimal policy by simulation, and replay one turn.
//!
//! `--example monte_carlo [episodes] [seed]`

use tenk_core::oracle::{monte_carlo_value, simulate_episode};
use tenk_core::value::to_f64;

fn main() {
    let mut args = std::env::args().skip(1);
    let episodes: u64 = args.next().map_or(1_000_000, |a| a.parse().expect("episode count"));
    let seed: u64 = args.next().map_or(1, |a| a.parse().expect("seed"));

    let solution = tenk_core::solve_backward();
    let est = monte_carlo_value(&solution, episodes, seed).unwrap();
    let exact = to_f64(solution.initial_value());
    println!("{episodes} episodes: {:.5} +- {:.5} (exact {exact:.5})", est.mean, est.std_error);

    let turn = simulate_episode(&solution, seed).unwrap();
    for step in &turn.steps {
        match &step.roll {
            Some(faces) => println!("{} {} -> {faces:?}", step.state, step.action),
            None => println!("{} {}", step.state, step.action),
        }
    }
    println!("payoff {}", turn.payoff);
}
