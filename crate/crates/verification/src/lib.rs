//! The ten acceptance criteria, each checked against a fresh solve.
//!
//! The `acceptance` test target prints one line per criterion and fails
//! if any criterion does.

use std::fmt;
use std::time::{Duration, Instant};

use tenk_core::oracle::monte_carlo_value;
use tenk_core::reference;
use tenk_core::solver::{critical_threshold, roll_once_gain, solve_backward, Solution, STOPPING_BOUNDARY};
use tenk_core::value::{chips, to_decimal, to_f64};
use tenk_core::variants::{demonstrate_nonuniqueness, minimal_geometric_base, solve_pig, solve_restricted, ActionSubset};
use tenk_core::verify::{
    check_fixed_point_suite, check_frequency_table, check_published_table, check_reconcile, check_value_iteration,
    VerifyOptions,
};

struct Outcome {
    passed: bool,
    detail: String,
}

#[derive(Debug, Clone)]
pub struct Criterion {
    pub number: usize,
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

impl fmt::Display for Criterion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mark = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "{mark} criterion {:>2} {}: {}", self.number, self.name, self.detail)
    }
}

fn outcome(passed: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        passed,
        detail: detail.into(),
    }
}

fn timed<T>(f: impl FnOnce() -> T) -> (T, Duration) {
    let start = Instant::now();
    let out = f();
    (out, start.elapsed())
}

fn game_value(solution: &Solution, elapsed: Duration) -> Outcome {
    let printed = to_decimal(solution.initial_value(), 10);
    outcome(
        printed == reference::GAME_VALUE && elapsed < Duration::from_secs(10),
        format!("V*(initial) = {printed}, solved in {:.2?} (limit 10 s)", elapsed),
    )
}

fn threshold() -> Outcome {
    let t5 = critical_threshold(5);
    let below: Vec<u32> = (1..=4).map(critical_threshold).collect();
    let holds = (1..=4).all(|n| roll_once_gain(STOPPING_BOUNDARY, n) <= chips(0));
    outcome(
        t5 == reference::STOPPING_THRESHOLD && holds && below.iter().all(|&t| t <= t5),
        format!("tau*(5) = {t5}; tau*(1..4) = {below:?}; stopping inequality at 56 for n = 1..4: {holds}"),
    )
}

fn frequency_table() -> Outcome {
    let (check, elapsed) = timed(check_frequency_table);
    outcome(
        check.passed && elapsed < Duration::from_secs(1),
        format!("{}; built and compared in {:.2?} (limit 1 s)", check.detail, elapsed),
    )
}

fn value_table(solution: &Solution) -> Outcome {
    let [values, actions] = check_published_table(solution);
    outcome(
        values.passed && actions.passed,
        format!("values: {}; actions: {}", values.detail, actions.detail),
    )
}

fn restricted_variants() -> Outcome {
    let mut wrong = Vec::new();
    let mut shown = Vec::new();
    for (label, printed) in reference::RESTRICTED_VALUES {
        let subset: ActionSubset = label.parse().expect("published subset");
        let found = to_decimal(solve_restricted(&subset).initial_value(), 10);
        shown.push(format!("{{{subset}}} {found}"));
        if found != printed {
            wrong.push(format!("{{{subset}}}: {found} vs printed {printed}"));
        }
    }
    if wrong.is_empty() {
        outcome(true, format!("six rows match: {}", shown.join(", ")))
    } else {
        outcome(false, wrong.join("; "))
    }
}

fn pig() -> Outcome {
    let table = solve_pig();
    let v0 = to_f64(&table.value(0));
    let witness = demonstrate_nonuniqueness(minimal_geometric_base() * 1.01).expect("base above the minimum");
    let worst = (0..=100).map(|t| witness.residual(t)).fold(0.0, f64::max);
    outcome(
        table.threshold == reference::PIG_THRESHOLD && (v0 - 8.14).abs() <= 0.005 && worst < 1e-8,
        format!(
            "tau* = {}, V(0) = {v0:.4}, geometric witness (ratio {:.7}) max residual {worst:.1e}",
            table.threshold, witness.ratio
        ),
    )
}

fn gathered(solution: &Solution) -> Outcome {
    let check = check_reconcile(solution);
    outcome(check.passed, check.detail)
}

fn value_iteration(solution: &Solution) -> Outcome {
    let check = check_value_iteration(solution, &VerifyOptions::default());
    outcome(check.passed, check.detail)
}

fn fixed_point(solution: &Solution) -> Outcome {
    let check = check_fixed_point_suite(solution);
    outcome(check.passed, check.detail)
}

fn monte_carlo(solution: &Solution) -> Outcome {
    let exact = to_f64(solution.initial_value());
    let (est, elapsed) = timed(|| monte_carlo_value(solution, 10_000_000, 20240601));
    let est = match est {
        Ok(e) => e,
        Err(e) => return outcome(false, e.to_string()),
    };
    let z = (est.mean - exact) / est.std_error;
    outcome(
        z.abs() <= 3.0 && elapsed < Duration::from_secs(120),
        format!(
            "mean {:.6} +- {:.6} over {} episodes, {z:+.2} SE from exact, {:.2?} (limit 2 min)",
            est.mean, est.std_error, est.episodes, elapsed
        ),
    )
}

type Check<'a> = Box<dyn Fn() -> Outcome + 'a>;

/// Solves the game once and evaluates every criterion in order.
pub fn evaluate() -> Vec<Criterion> {
    let (solution, solve_time) = timed(solve_backward);
    let criteria: Vec<(&'static str, Check<'_>)> = vec![
        ("exact game value", Box::new(|| game_value(&solution, solve_time))),
        ("stopping threshold", Box::new(threshold)),
        ("frequency table", Box::new(frequency_table)),
        ("value and policy table", Box::new(|| value_table(&solution))),
        ("restricted variants", Box::new(restricted_variants)),
        ("pig", Box::new(pig)),
        ("gathered-class solver", Box::new(|| gathered(&solution))),
        ("value iteration", Box::new(|| value_iteration(&solution))),
        ("fixed-point properties", Box::new(|| fixed_point(&solution))),
        ("monte carlo", Box::new(|| monte_carlo(&solution))),
    ];
    criteria
        .into_iter()
        .enumerate()
        .map(|(i, (name, run))| {
            let Outcome { passed, detail } = run();
            Criterion { number: i + 1, name, passed, detail }
        })
        .collect()
}
