//! Dice configurations and their scoring.
//!
//! A roll of up to five dice is summarised by its scoring content `[f, o, t]`:
//! `f` fives, `o` ones and a triple of face `t` (one of 2, 3, 4, 6; `0` when
//! there is none). Triples of fives and ones are counted in `f` and `o`.
//! Every quantity here is measured in chips (50 points each).

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Faces that score only as a triple.
pub const TRIPLE_FACES: [u8; 4] = [2, 3, 4, 6];

/// Number of scoring configurations.
pub const CONFIG_COUNT: usize = 44;

/// The scoring content of a roll.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "String", try_from = "String")]
pub struct Configuration {
    fives: u8,
    ones: u8,
    triple: u8,
}

impl Configuration {
    /// The non-scoring configuration `[0,0,0]`.
    pub const ZERO: Self = Self {
        fives: 0,
        ones: 0,
        triple: 0,
    };

    pub fn new(fives: u8, ones: u8, triple: u8) -> Result<Self> {
        let triple_ok = triple == 0 || TRIPLE_FACES.contains(&triple);
        let dice = fives as u32 + ones as u32 + if triple != 0 { 3 } else { 0 };
        if !triple_ok || dice > 5 {
            return Err(Error::InvalidConfiguration {
                fives,
                ones,
                triple,
            });
        }
        Ok(Self {
            fives,
            ones,
            triple,
        })
    }

    const fn raw(fives: u8, ones: u8, triple: u8) -> Self {
        Self {
            fives,
            ones,
            triple,
        }
    }

    pub fn fives(self) -> u8 {
        self.fives
    }

    pub fn ones(self) -> u8 {
        self.ones
    }

    /// Face of the triple of 2/3/4/6, or 0.
    pub fn triple(self) -> u8 {
        self.triple
    }

    pub fn is_zero(self) -> bool {
        self == Self::ZERO
    }

    /// Score in chips: `f + 2o + 14[o ≥ 3] + 7[f ≥ 3] + 2t`.
    pub fn score(self) -> u32 {
        let f = self.fives as u32;
        let o = self.ones as u32;
        let mut s = f + 2 * o + 2 * self.triple as u32;
        if o >= 3 {
            s += 14;
        }
        if f >= 3 {
            s += 7;
        }
        s
    }

    /// Number of dice that contribute to the score.
    pub fn scoring_dice(self) -> u8 {
        self.fives + self.ones + if self.triple != 0 { 3 } else { 0 }
    }

    /// Number of individually resignable scoring combinations. Three fives
    /// or three ones count as three combinations.
    pub fn scoring_combinations(self) -> u8 {
        self.fives + self.ones + u8::from(self.triple != 0)
    }

    /// Position of this configuration in [`configurations`]. Panics on the
    /// zero configuration.
    pub fn index(self) -> usize {
        let slot = INDEX[lookup_slot(self)];
        assert!(slot != u8::MAX, "{self} is not a scoring configuration");
        slot as usize
    }

    /// `true` iff `self ≺ other`: the scoring combinations of `self` form a
    /// non-void strict subset of those of `other`.
    pub fn is_smaller_than(self, other: Configuration) -> bool {
        !self.is_zero()
            && self != other
            && self.fives <= other.fives
            && self.ones <= other.ones
            && (self.triple == 0 || self.triple == other.triple)
    }

    /// Every configuration obtainable by resigning a non-empty, proper subset
    /// of this configuration's scoring combinations.
    pub fn sub_configurations(self) -> Vec<Configuration> {
        let triples: &[u8] = if self.triple == 0 {
            &[0]
        } else {
            &[0, self.triple]
        };
        let mut out = Vec::new();
        for &t in triples {
            for f in 0..=self.fives {
                for o in 0..=self.ones {
                    let c = Self::raw(f, o, t);
                    if c.is_smaller_than(self) {
                        out.push(c);
                    }
                }
            }
        }
        out
    }
}

impl fmt::Display for Configuration {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{},{}", self.fives, self.ones, self.triple)
    }
}

impl FromStr for Configuration {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parts: Vec<&str> = s.split(',').map(str::trim).collect();
        let bad = || Error::Parse(format!("expected `f,o,t`, got `{s}`"));
        if parts.len() != 3 {
            return Err(bad());
        }
        let mut nums = [0u8; 3];
        for (slot, part) in nums.iter_mut().zip(&parts) {
            *slot = part.parse().map_err(|_| bad())?;
        }
        Configuration::new(nums[0], nums[1], nums[2])
    }
}

impl From<Configuration> for String {
    fn from(c: Configuration) -> Self {
        c.to_string()
    }
}

impl TryFrom<String> for Configuration {
    type Error = Error;

    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

/// All scoring configurations, grouped by scoring dice in the order of the
/// one-roll frequency table.
pub fn configurations() -> &'static [Configuration; CONFIG_COUNT] {
    &ALL
}

/// Configurations with at most `max_dice` scoring dice.
pub fn configurations_up_to(max_dice: u8) -> impl Iterator<Item = Configuration> {
    ALL.iter().copied().filter(move |c| c.scoring_dice() <= max_dice)
}

/// Configurations with at most `max_dice` scoring dice and a single scoring
/// combination. Only stop and roll are available with these.
pub fn single_combination(max_dice: u8) -> impl Iterator<Item = Configuration> {
    configurations_up_to(max_dice).filter(|c| c.scoring_combinations() == 1)
}

/// Configurations from which a player holding `dice` dice to roll after the
/// move could have moved into `target`: `{j : target ≺ j, d(j) < d(target) + dice}`.
pub fn movers_into(target: Configuration, dice: u8) -> impl Iterator<Item = Configuration> {
    ALL.iter().copied().filter(move |j| {
        target.is_smaller_than(*j) && j.scoring_dice() < target.scoring_dice() + dice
    })
}

/// Classifies a roll of 1 to 5 dice.
pub fn classify_roll(faces: &[u8]) -> Result<Configuration> {
    if faces.is_empty() || faces.len() > 5 {
        return Err(Error::DiceCount(faces.len()));
    }
    let mut counts = [0u8; 7];
    for &face in faces {
        if !(1..=6).contains(&face) {
            return Err(Error::InvalidFace(face));
        }
        counts[face as usize] += 1;
    }
    Ok(classify_counts(&counts))
}

/// Classification from face counts (`counts[face]`, index 0 unused). Callers
/// guarantee at most five dice.
pub(crate) fn classify_counts(counts: &[u8; 7]) -> Configuration {
    let mut triple = 0;
    for face in TRIPLE_FACES {
        if counts[face as usize] >= 3 {
            // two triples need six dice
            debug_assert_eq!(triple, 0);
            triple = face;
        }
    }
    Configuration::raw(counts[5], counts[1], triple)
}

const fn lookup_slot(c: Configuration) -> usize {
    (c.fives as usize * 6 + c.ones as usize) * 7 + c.triple as usize
}

const ALL: [Configuration; CONFIG_COUNT] = {
    let mut out = [Configuration::ZERO; CONFIG_COUNT];
    let mut k = 0;
    let mut dice = 1u8;
    while dice <= 5 {
        let mut f = dice as i32;
        while f >= 0 {
            out[k] = Configuration::raw(f as u8, dice - f as u8, 0);
            k += 1;
            f -= 1;
        }
        if dice >= 3 {
            let rest = dice - 3;
            let mut f = rest as i32;
            while f >= 0 {
                let mut t = 0;
                while t < TRIPLE_FACES.len() {
                    out[k] = Configuration::raw(f as u8, rest - f as u8, TRIPLE_FACES[t]);
                    k += 1;
                    t += 1;
                }
                f -= 1;
            }
        }
        dice += 1;
    }
    assert!(k == CONFIG_COUNT);
    out
};

const INDEX: [u8; 6 * 6 * 7] = {
    let mut idx = [u8::MAX; 6 * 6 * 7];
    let mut k = 0;
    while k < CONFIG_COUNT {
        idx[lookup_slot(ALL[k])] = k as u8;
        k += 1;
    }
    idx
};

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn cfg(f: u8, o: u8, t: u8) -> Configuration {
        Configuration::new(f, o, t).unwrap()
    }

    #[test]
    fn classify_examples() {
        assert_eq!(classify_roll(&[5, 1, 2, 2, 2]).unwrap(), cfg(1, 1, 2));
        assert_eq!(cfg(1, 1, 2).score(), 7);
        assert_eq!(classify_roll(&[3]).unwrap(), Configuration::ZERO);
        let four_twos = classify_roll(&[2, 2, 2, 2]).unwrap();
        assert_eq!(four_twos, cfg(0, 0, 2));
        assert_eq!(four_twos.scoring_dice(), 3);
    }

    #[test]
    fn classify_rejects_bad_input() {
        assert!(matches!(classify_roll(&[]), Err(Error::DiceCount(0))));
        assert!(matches!(classify_roll(&[1; 6]), Err(Error::DiceCount(6))));
        assert!(matches!(classify_roll(&[0, 1]), Err(Error::InvalidFace(0))));
        assert!(matches!(classify_roll(&[7]), Err(Error::InvalidFace(7))));
    }

    #[test]
    fn scores() {
        let c = cfg(3, 0, 0);
        assert_eq!((c.score(), c.scoring_dice(), c.scoring_combinations()), (10, 3, 3));
        assert_eq!(Configuration::ZERO.score(), 0);
        assert_eq!(Configuration::ZERO.scoring_dice(), 0);
        assert_eq!(Configuration::ZERO.scoring_combinations(), 0);
        assert_eq!(cfg(0, 4, 0).score(), 22);
        assert_eq!(cfg(0, 4, 0).scoring_dice(), 4);
        assert_eq!(cfg(0, 5, 0).score(), 24);
        assert_eq!(cfg(0, 0, 6).scoring_combinations(), 1);
    }

    #[test]
    fn invalid_configurations() {
        assert!(Configuration::new(0, 0, 5).is_err());
        assert!(Configuration::new(0, 0, 1).is_err());
        assert!(Configuration::new(3, 0, 2).is_err());
        assert!(Configuration::new(6, 0, 0).is_err());
        assert!("2,1".parse::<Configuration>().is_err());
        assert_eq!("2,1,0".parse::<Configuration>().unwrap(), cfg(2, 1, 0));
    }

    #[test]
    fn enumeration() {
        let all = configurations();
        assert_eq!(all.len(), 44);
        for (k, c) in all.iter().enumerate() {
            assert_eq!(c.index(), k);
            assert!(!c.is_zero());
            assert_eq!(Configuration::new(c.fives, c.ones, c.triple).unwrap(), *c);
        }
        let one: Vec<_> = configurations_up_to(1).collect();
        assert_eq!(one, vec![cfg(1, 0, 0), cfg(0, 1, 0)]);
        assert_eq!(configurations_up_to(4).count(), 26);
        assert_eq!(single_combination(3).count(), 6);
        assert_eq!(movers_into(cfg(1, 0, 0), 1).count(), 0);
        let into: Vec<_> = movers_into(cfg(1, 0, 0), 2).collect();
        assert_eq!(into, vec![cfg(2, 0, 0), cfg(1, 1, 0)]);
    }

    #[test]
    fn smaller_than_examples() {
        let mut subs = cfg(2, 1, 0).sub_configurations();
        subs.sort();
        let mut expected = vec![cfg(1, 1, 0), cfg(0, 1, 0), cfg(2, 0, 0), cfg(1, 0, 0)];
        expected.sort();
        assert_eq!(subs, expected);
        assert!(!cfg(1, 0, 0).is_smaller_than(cfg(1, 0, 0)));
        assert!(cfg(2, 0, 0).is_smaller_than(cfg(3, 0, 0)));
        assert!(cfg(0, 0, 2).is_smaller_than(cfg(1, 0, 2)));
        assert!(!cfg(0, 0, 3).is_smaller_than(cfg(1, 0, 2)));
        assert!(!Configuration::ZERO.is_smaller_than(cfg(1, 0, 0)));
    }

    /// Brute force over resignation subsets of the individual combinations.
    fn brute_force_subs(c: Configuration) -> Vec<Configuration> {
        let combos = c.scoring_combinations() as u32;
        let mut out = std::collections::BTreeSet::new();
        for mask in 0u32..(1 << combos) {
            // bit k set = combination k is kept; fives first, then ones, then the triple
            let kept = |k: u32| mask & (1 << k) != 0;
            let f = (0..c.fives as u32).filter(|&k| kept(k)).count() as u8;
            let o = (0..c.ones as u32)
                .filter(|&k| kept(c.fives as u32 + k))
                .count() as u8;
            let t = if c.triple != 0 && kept(combos - 1) { c.triple } else { 0 };
            let j = Configuration::raw(f, o, t);
            if !j.is_zero() && j != c {
                out.insert(j);
            }
        }
        out.into_iter().collect()
    }

    #[test]
    fn sub_configurations_match_brute_force() {
        for &c in configurations() {
            let mut subs = c.sub_configurations();
            subs.sort();
            assert_eq!(subs, brute_force_subs(c), "{c}");
            for j in subs {
                assert!(j.score() < c.score());
                assert!(j.scoring_dice() < c.scoring_dice());
                assert!(0 < j.scoring_combinations() && j.scoring_combinations() < c.scoring_combinations());
            }
        }
    }

    proptest! {
        #[test]
        fn classify_is_permutation_invariant(
            faces in proptest::collection::vec(1u8..=6, 1..=5),
            seed in any::<u64>(),
        ) {
            let mut shuffled = faces.clone();
            // deterministic Fisher-Yates from the seed
            let mut state = seed | 1;
            for k in (1..shuffled.len()).rev() {
                state ^= state << 13;
                state ^= state >> 7;
                state ^= state << 17;
                shuffled.swap(k, (state % (k as u64 + 1)) as usize);
            }
            prop_assert_eq!(classify_roll(&faces).unwrap(), classify_roll(&shuffled).unwrap());
        }

        #[test]
        fn classified_rolls_fit_the_dice(faces in proptest::collection::vec(1u8..=6, 1..=5)) {
            let c = classify_roll(&faces).unwrap();
            prop_assert!(c.scoring_dice() as usize <= faces.len());
            if !c.is_zero() {
                prop_assert_eq!(configurations()[c.index()], c);
            }
        }
    }
}
