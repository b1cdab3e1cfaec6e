use std::process::ExitCode;

fn main() -> ExitCode {
    let criteria = tenk_verification::evaluate();
    for c in &criteria {
        println!("{c}");
    }
    let passed = criteria.iter().filter(|c| c.passed).count();
    println!("acceptance: {passed} of {} criteria pass", criteria.len());
    if passed == criteria.len() {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
