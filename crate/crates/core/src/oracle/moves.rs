//! Composing two moves lands where the direct move does.

use crate::dice::configurations;
use crate::state::{after_move, GameState};

#[derive(Debug, Clone, Default)]
pub struct MoveEquivalenceReport {
    pub chains_checked: usize,
    pub counterexamples: Vec<String>,
}

/// For every `k ≺ j ≺ i` and every admissible `(τ, i, n)` with `n < 5`,
/// compares moving `i → j → k` with moving `i → k` directly.
pub fn check_move_equivalence() -> MoveEquivalenceReport {
    let mut report = MoveEquivalenceReport::default();
    for &i in configurations() {
        if i.scoring_dice() > 4 {
            continue;
        }
        for n in 1..=(5 - i.scoring_dice()) {
            // any chip count covering the score keeps every step non-negative
            let tau = i.score() + 3;
            for j in i.sub_configurations() {
                let GameState::Active { tau: t1, n: n1, .. } = after_move(tau, i, n, j) else {
                    unreachable!()
                };
                for k in j.sub_configurations() {
                    report.chains_checked += 1;
                    let composed = after_move(t1, j, n1, k);
                    let direct = after_move(tau, i, n, k);
                    if composed != direct {
                        report.counterexamples.push(format!(
                            "({tau}, [{i}], {n}): via [{j}] {composed} vs direct {direct}"
                        ));
                    }
                }
            }
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dice::Configuration;

    fn cfg(f: u8, o: u8, t: u8) -> Configuration {
        Configuration::new(f, o, t).unwrap()
    }

    #[test]
    fn named_chains() {
        let (i, j, k) = (cfg(2, 1, 0), cfg(1, 1, 0), cfg(0, 1, 0));
        let via = after_move(9, i, 2, j);
        assert_eq!(after_move(via.chips(), j, via.dice(), k), after_move(9, i, 2, k));
        let (i, j, k) = (cfg(3, 0, 0), cfg(2, 0, 0), cfg(1, 0, 0));
        let via = after_move(13, i, 1, j);
        assert_eq!(via.chips(), 5);
        let end = after_move(via.chips(), j, via.dice(), k);
        assert_eq!(end.chips(), 4);
        assert_eq!(end, after_move(13, i, 1, k));
    }

    #[test]
    fn no_counterexamples() {
        let report = check_move_equivalence();
        assert!(report.chains_checked > 0);
        assert!(report.counterexamples.is_empty());
    }
}
