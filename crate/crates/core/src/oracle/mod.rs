//! Checks that do not trust the backward solver.

mod monte_carlo;
mod moves;
mod value_iteration;

pub use monte_carlo::{
    monte_carlo_value, simulate_episode, EpisodeRecord, EpisodeStep, MonteCarloEstimate, Policy,
};
pub use moves::{check_move_equivalence, MoveEquivalenceReport};
pub use value_iteration::{value_iteration, IterationSnapshot, SweepStats, ValueIterationConfig};
