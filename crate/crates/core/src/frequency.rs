//! Tallies of ordered one-roll outcomes per configuration.

use std::sync::OnceLock;

use crate::dice::{self, Configuration, CONFIG_COUNT};

/// `f(n, i)`: the number of the `6ⁿ` ordered outcomes of rolling `n` dice that
/// classify as configuration `i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FrequencyTable {
    scoring: [[u32; CONFIG_COUNT]; 5],
    bust: [u32; 5],
}

impl FrequencyTable {
    /// Count of outcomes of `dice` dice classifying as `config` (which may be
    /// the zero configuration).
    pub fn count(&self, dice: u8, config: Configuration) -> u32 {
        let row = Self::row(dice);
        if config.is_zero() {
            self.bust[row]
        } else {
            self.scoring[row][config.index()]
        }
    }

    /// `f(n, 𝟎)`.
    pub fn bust(&self, dice: u8) -> u32 {
        self.bust[Self::row(dice)]
    }

    /// `6ⁿ`.
    pub fn outcomes(dice: u8) -> u32 {
        6u32.pow(dice as u32)
    }

    /// Scoring configurations reachable with `dice` dice, with their counts.
    pub fn scoring(&self, dice: u8) -> impl Iterator<Item = (Configuration, u32)> + '_ {
        let row = &self.scoring[Self::row(dice)];
        dice::configurations()
            .iter()
            .zip(row)
            .filter(|(_, &n)| n > 0)
            .map(|(c, &n)| (*c, n))
    }

    /// `Σₖ f(n,k)·s(k)` over scoring configurations.
    pub fn total_score(&self, dice: u8) -> u64 {
        self.scoring(dice)
            .map(|(c, n)| n as u64 * c.score() as u64)
            .sum()
    }

    fn row(dice: u8) -> usize {
        assert!((1..=5).contains(&dice), "dice count {dice} out of range");
        dice as usize - 1
    }
}

/// Enumerates all `6ⁿ` ordered outcomes for every `n` in 1..=5.
pub fn build_frequency_table() -> FrequencyTable {
    let mut table = FrequencyTable {
        scoring: [[0; CONFIG_COUNT]; 5],
        bust: [0; 5],
    };
    for dice in 1..=5u8 {
        let row = dice as usize - 1;
        let mut faces = vec![1u8; dice as usize];
        loop {
            let config = dice::classify_roll(&faces).expect("faces are in range");
            if config.is_zero() {
                table.bust[row] += 1;
            } else {
                table.scoring[row][config.index()] += 1;
            }
            // odometer increment
            let mut pos = 0;
            while pos < faces.len() && faces[pos] == 6 {
                faces[pos] = 1;
                pos += 1;
            }
            if pos == faces.len() {
                break;
            }
            faces[pos] += 1;
        }
    }
    table
}

/// The frequency table, built once per process.
pub fn frequencies() -> &'static FrequencyTable {
    static TABLE: OnceLock<FrequencyTable> = OnceLock::new();
    TABLE.get_or_init(build_frequency_table)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg(f: u8, o: u8, t: u8) -> Configuration {
        Configuration::new(f, o, t).unwrap()
    }

    #[test]
    fn rows_sum_to_all_outcomes() {
        let table = frequencies();
        for dice in 1..=5 {
            let total: u32 = table.bust(dice) + table.scoring(dice).map(|(_, n)| n).sum::<u32>();
            assert_eq!(total, FrequencyTable::outcomes(dice));
        }
    }

    #[test]
    fn selected_entries() {
        let table = frequencies();
        assert_eq!(table.count(2, cfg(1, 1, 0)), 2);
        assert_eq!(table.count(4, cfg(0, 0, 2)), 13);
        assert_eq!(table.count(5, Configuration::ZERO), 600);
        assert_eq!(table.count(1, cfg(1, 0, 0)), 1);
        assert_eq!(table.count(1, cfg(2, 0, 0)), 0);
        assert_eq!(table.total_score(5), 33516);
    }

    #[test]
    fn only_fitting_configurations_occur() {
        let table = frequencies();
        for dice in 1..=5 {
            for &c in dice::configurations() {
                assert_eq!(table.count(dice, c) > 0, c.scoring_dice() <= dice, "{c} with {dice}");
            }
        }
    }
}
