//! The oracle suite: every independent check of a solved table in one report.

use std::fmt;

use num_traits::Signed;
use serde::Serialize;

use crate::action::ActionId;
use crate::dice::Configuration;
use crate::frequency::build_frequency_table;
use crate::oracle::{check_move_equivalence, value_iteration, ValueIterationConfig};
use crate::policy_io::published_table;
use crate::reference;
use crate::solver::{
    check_fixed_point, critical_threshold, reachable_states, reconcile, roll_once_gain, solve_efficient,
    Solution, STOPPING_BOUNDARY,
};
use crate::state::GameState;
use crate::value::{chips, to_f64};

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Check {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerificationReport {
    pub checks: Vec<Check>,
}

impl VerificationReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            let mark = if c.passed { "PASS" } else { "FAIL" };
            writeln!(f, "{mark} {:<24} {}", c.name, c.detail)?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy)]
pub struct VerifyOptions {
    /// Allowed gap between value iteration and the exact table.
    pub tolerance: f64,
    pub value_iteration: ValueIterationSettings,
}

#[derive(Debug, Clone, Copy)]
pub struct ValueIterationSettings {
    pub tau_max: u32,
    pub epsilon: f64,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            tolerance: 1e-8,
            value_iteration: ValueIterationSettings {
                tau_max: 80,
                epsilon: 1e-9,
            },
        }
    }
}

fn check(name: &'static str, passed: bool, detail: impl Into<String>) -> Check {
    Check {
        name,
        passed,
        detail: detail.into(),
    }
}

/// The published one-roll table against a fresh enumeration.
pub fn check_frequency_table() -> Check {
    let table = build_frequency_table();
    let mut wrong = Vec::new();
    for &(f, o, t, comb, score, counts) in &reference::FREQUENCY_ROWS {
        let config = if (f, o, t) == (0, 0, 0) {
            None
        } else {
            Some(Configuration::new(f, o, t).expect("published configuration"))
        };
        for n in 1..=5u8 {
            let found = match config {
                Some(c) => table.count(n, c),
                None => table.bust(n),
            };
            if found != counts[n as usize - 1] {
                wrong.push(format!("f({n},[{f},{o},{t}]) = {found}, printed {}", counts[n as usize - 1]));
            }
        }
        if let Some(c) = config {
            if c.score() != score || c.scoring_combinations() != comb {
                wrong.push(format!("[{c}]: score {} comb {}", c.score(), c.scoring_combinations()));
            }
        }
    }
    let rows = reference::FREQUENCY_ROWS.len();
    if wrong.is_empty() {
        check("frequency-table", true, format!("{rows} rows x 5 columns match"))
    } else {
        check("frequency-table", false, wrong.join("; "))
    }
}

/// `τ*(5) = 56`, `τ*(n) ≤ 56` below, and one roll loses on average at 56.
pub fn check_threshold() -> Check {
    let t5 = critical_threshold(5);
    let lower: Vec<u32> = (1..=4).map(critical_threshold).collect();
    let losing = (1..=5).all(|n| !roll_once_gain(STOPPING_BOUNDARY, n).is_positive());
    let passed = t5 == STOPPING_BOUNDARY && lower.iter().all(|&t| t <= t5) && losing;
    check(
        "threshold",
        passed,
        format!("tau*(5) = {t5}, tau*(1..4) = {lower:?}, roll at 56 loses: {losing}"),
    )
}

/// Successive approximation from zero agrees with the exact table.
pub fn check_value_iteration(solution: &Solution, options: &VerifyOptions) -> Check {
    let cfg = ValueIterationConfig {
        tau_max: options.value_iteration.tau_max,
        tolerance: options.value_iteration.epsilon,
        ..Default::default()
    };
    let snap = match value_iteration(&cfg) {
        Ok(s) => s,
        Err(e) => return check("value-iteration", false, e.to_string()),
    };
    let mut worst = (snap.initial() - to_f64(solution.initial_value())).abs();
    for (state, d) in solution.cells() {
        let GameState::Active { tau, config, n } = state else { continue };
        let w = snap.value(tau, config, n).expect("truncation covers the table");
        worst = worst.max((w - to_f64(&d.value)).abs());
    }
    let structural = snap.first_sweep_is_chips
        && snap.history.iter().all(|s| s.monotone && s.boundary_exact);
    check(
        "value-iteration",
        worst < options.tolerance && structural,
        format!(
            "{} sweeps, max gap {worst:.2e} (tolerance {:.0e}), W1 = tau and monotone sweeps: {structural}",
            snap.k, options.tolerance
        ),
    )
}

/// The stored values solve the optimality equation exactly, with the
/// shape properties of the value function.
pub fn check_fixed_point_suite(solution: &Solution) -> Check {
    let fp = check_fixed_point(solution);
    let mut problems: Vec<String> = fp.residuals.iter().chain(&fp.bad_actions).take(5).cloned().collect();
    for (state, d) in solution.cells() {
        let GameState::Active { tau, config, n } = state else { continue };
        if d.value < chips(tau) {
            problems.push(format!("{state} below its chips"));
        }
        let next = GameState::Active { tau: tau + 1, config, n };
        if solution.value(&next).is_some_and(|v| v < d.value) {
            problems.push(format!("{state} not monotone in tau"));
        }
        use ActionId::*;
        if !matches!(d.action, Stop | Roll | Resign5 | Resign1 | Resign55 | Resign51) {
            problems.push(format!("{state} uses never-optimal {}", d.action));
        }
    }
    let moves = check_move_equivalence();
    problems.extend(moves.counterexamples.iter().take(5).cloned());
    check(
        "fixed-point",
        problems.is_empty(),
        if problems.is_empty() {
            format!(
                "{} states with zero residual, {} move chains equivalent",
                fp.states_checked, moves.chains_checked
            )
        } else {
            problems.join("; ")
        },
    )
}

/// The gathered-class solve agrees with the full one.
pub fn check_reconcile(solution: &Solution) -> Check {
    let report = reconcile(solution, &solve_efficient());
    check(
        "gathered-classes",
        report.is_clean(),
        if report.is_clean() {
            format!(
                "{} cells equal ({} through a gathered class)",
                report.cells_compared, report.gathered_cells
            )
        } else {
            report.mismatches.iter().take(5).cloned().collect::<Vec<_>>().join("; ")
        },
    )
}

/// The printed value table, values and action row separately.
pub fn check_published_table(solution: &Solution) -> [Check; 2] {
    let diff = published_table(solution, &reachable_states()).diff_against_reference();
    let mut values = format!(
        "{} cells, {} outside 0.0005, {} differ only in rounding",
        diff.cells_compared,
        diff.mismatches.len(),
        diff.rounding.len()
    );
    for m in diff.mismatches.iter().chain(&diff.rounding).take(5) {
        values.push_str(&format!("; tau {} {}: {:?} vs printed {:?}", m.tau, m.column, m.found, m.expected));
    }
    let actions = if diff.action_mismatches.is_empty() {
        "8 columns match".to_string()
    } else {
        diff.action_mismatches
            .iter()
            .map(|m| format!("{}: {} vs printed {}", m.column, m.found, m.expected))
            .collect::<Vec<_>>()
            .join("; ")
    };
    [
        check("published-table-values", diff.mismatches.is_empty(), values),
        check("published-table-actions", diff.action_mismatches.is_empty(), actions),
    ]
}

pub fn run_verification(solution: &Solution, options: &VerifyOptions) -> VerificationReport {
    let mut checks = vec![
        check_frequency_table(),
        check_threshold(),
        check_value_iteration(solution, options),
        check_fixed_point_suite(solution),
        check_reconcile(solution),
    ];
    checks.extend(check_published_table(solution));
    VerificationReport { checks }
}
