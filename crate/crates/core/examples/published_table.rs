//! Render the value table in its printed layout and diff it against the
//! published figures.

use tenk_core::policy_io::published_table;
use tenk_core::solver::reachable_states;

fn main() {
    let table = published_table(&tenk_core::solve_backward(), &reachable_states());
    print!("{}", table.render());

    let diff = table.diff_against_reference();
    println!();
    println!("{} cells compared, {} outside tolerance", diff.cells_compared, diff.mismatches.len());
    for m in &diff.rounding {
        println!("rounding only: tau {} {}: {} vs printed {}", m.tau, m.column, m.found, m.expected);
    }
    for m in &diff.action_mismatches {
        println!("action row: {}: {} vs printed {}", m.column, m.found, m.expected);
    }
}
