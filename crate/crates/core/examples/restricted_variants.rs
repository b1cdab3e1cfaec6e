//! Value of the game when only some moves are allowed.
//!
//! Pass a subset to solve just that one: `--example restricted_variants s,r,m5`

use tenk_core::value::to_decimal;
use tenk_core::{solve_restricted, ActionSubset};

fn main() {
    let subsets = match std::env::args().nth(1) {
        Some(arg) => vec![arg.parse::<ActionSubset>().expect("comma-separated actions including s and r")],
        None => ActionSubset::nested_rows(),
    };
    for subset in subsets {
        let solution = solve_restricted(&subset);
        println!("{:>2} actions {:<24} {}", subset.len(), format!("{{{subset}}}"), to_decimal(solution.initial_value(), 10));
    }
}
