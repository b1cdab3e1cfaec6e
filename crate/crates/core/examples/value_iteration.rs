//! Successive approximation from zero, in floating point, converging to the
//! exact value.

use tenk_core::oracle::{value_iteration, ValueIterationConfig};
use tenk_core::value::to_f64;

fn main() {
    let snapshot = value_iteration(&ValueIterationConfig::default()).unwrap();
    for s in &snapshot.history {
        println!("sweep {:>2}: delta {:.3e} monotone {} boundary exact {}", s.k, s.delta, s.monotone, s.boundary_exact);
    }
    let exact = to_f64(tenk_core::solve_backward().initial_value());
    println!("W({}) at the start: {:.12}", snapshot.k, snapshot.initial());
    println!("exact:              {exact:.12}");
}
