//! Run every oracle against the solved table.

use tenk_core::{run_verification, solve_backward, VerifyOptions};

fn main() {
    let report = run_verification(&solve_backward(), &VerifyOptions::default());
    print!("{report}");
    println!("all passed: {}", report.all_passed());
}
