//! The faster solve over gathered classes, checked against the full one.

use std::time::Instant;

use tenk_core::solver::{reconcile, solve_efficient, GatheredClass};
use tenk_core::value::to_decimal;

fn main() {
    let start = Instant::now();
    let classes = solve_efficient();
    println!("gathered solve: {:.2?}", start.elapsed());
    let start = Instant::now();
    let full = tenk_core::solve_backward();
    println!("full solve:     {:.2?}", start.elapsed());

    for (class, tau, n) in [(GatheredClass::Five, 5, 3), (GatheredClass::One, 4, 3), (GatheredClass::FiveFive, 4, 2)] {
        let d = classes.get(class, tau, n).unwrap();
        println!("{class:?}({tau}, {n}) = {} via {}", to_decimal(&d.value, 3), d.action);
    }
    let report = reconcile(&full, &classes);
    println!("{} cells compared, {} mismatches", report.cells_compared, report.mismatches.len());
}
