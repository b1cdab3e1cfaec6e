//! Solitaire Pig: its stopping threshold, exact values, and a second
//! solution of the same equation that is not the value function.

use tenk_core::value::{to_decimal, to_f64};
use tenk_core::variants::{demonstrate_nonuniqueness, geometric_ratio, minimal_geometric_base, solve_pig};

fn main() {
    let pig = solve_pig();
    println!("threshold: {}", pig.threshold);
    for tau in [0, 5, 10, 15, 19, 20] {
        println!("V({tau:>2}) = {:<8} = {}", to_decimal(&pig.value(tau), 4), pig.value(tau));
    }
    println!("equation holds exactly up to 200: {}", pig.satisfies_dpe(200));

    let g = geometric_ratio();
    let base = minimal_geometric_base();
    println!("\nratio g = {g:.7}, smallest base keeping V >= tau: {base:.4}");
    let witness = demonstrate_nonuniqueness(base).unwrap();
    for tau in [0, 10, 20, 50, 100] {
        println!(
            "tau {tau:>3}: witness {:>10.4}  value {:>8.4}  residual {:.1e}",
            witness.value(tau),
            to_f64(&pig.value(tau)),
            witness.residual(tau)
        );
    }
}
