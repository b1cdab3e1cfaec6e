//! Cross-check of the full backward solve against the gathered-class solve.

use super::{GatheredClass, GatheredClassTable, Solution};

#[derive(Debug, Clone, Default)]
pub struct ReconcileReport {
    pub cells_compared: usize,
    /// Cells in one of the four move classes.
    pub gathered_cells: usize,
    /// Cells whose value differs between the two solves.
    pub mismatches: Vec<String>,
    /// Cells whose chosen action differs (values equal).
    pub action_differences: Vec<String>,
}

impl ReconcileReport {
    pub fn is_clean(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// Compares every admissible cell of `full` with the value of its class in
/// `gathered`; cells outside the move classes must equal `V₀(τ, n)`.
pub fn reconcile(full: &Solution, gathered: &GatheredClassTable) -> ReconcileReport {
    let mut report = ReconcileReport::default();
    for (state, decision) in full.cells() {
        let crate::state::GameState::Active { tau, config, n } = state else {
            unreachable!()
        };
        let class = GatheredClass::of(config, n);
        report.cells_compared += 1;
        if class != GatheredClass::Zero {
            report.gathered_cells += 1;
        }
        let Some(other) = gathered.get(class, tau, n) else {
            report
                .mismatches
                .push(format!("{state}: no value for class {class:?}"));
            continue;
        };
        if other.value != decision.value {
            report.mismatches.push(format!(
                "{state}: full {} vs {class:?} {}",
                decision.value, other.value
            ));
        } else if other.action != decision.action {
            report.action_differences.push(format!(
                "{state}: full {} vs {class:?} {}",
                decision.action, other.action
            ));
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dice::Configuration;
    use crate::solver::{solve_backward, solve_efficient};

    #[test]
    fn solves_agree_everywhere() {
        let full = solve_backward();
        let gathered = solve_efficient();
        let report = reconcile(&full, &gathered);
        assert_eq!(report.cells_compared, 56 * 90);
        assert!(report.is_clean(), "{:?}", &report.mismatches[..report.mismatches.len().min(5)]);
        let triple = Configuration::new(0, 0, 4).unwrap();
        for tau in 0..56 {
            assert_eq!(
                full.decision(tau, triple, 2).unwrap().value,
                gathered.get(GatheredClass::Zero, tau, 2).unwrap().value
            );
        }
    }
}
