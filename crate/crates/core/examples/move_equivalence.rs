//! Two resignations in a row land where one larger resignation does.

use tenk_core::oracle::check_move_equivalence;

fn main() {
    let report = check_move_equivalence();
    println!("{} chains checked, {} counterexamples", report.chains_checked, report.counterexamples.len());
    for c in &report.counterexamples {
        println!("  {c}");
    }
}
