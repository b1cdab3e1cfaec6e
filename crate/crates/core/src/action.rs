//! The fifteen actions of the game.
//!
//! Besides stopping and rolling, a player holding more than one scoring
//! combination with fewer than five dice to roll may resign part of the
//! combinations to get more dice back. Each such move is named by the dice it
//! gives up.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::dice::Configuration;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "String", try_from = "String")]
pub enum ActionId {
    Stop,
    Roll,
    Resign5,
    Resign1,
    Resign55,
    Resign51,
    Resign11,
    Resign551,
    Resign511,
    /// Three ones.
    ResignTriple1,
    ResignTriple2,
    ResignTriple3,
    ResignTriple4,
    /// Three fives.
    ResignTriple5,
    ResignTriple6,
}

impl ActionId {
    pub const ALL: [ActionId; 15] = [
        ActionId::Stop,
        ActionId::Roll,
        ActionId::Resign5,
        ActionId::Resign1,
        ActionId::Resign55,
        ActionId::Resign51,
        ActionId::Resign11,
        ActionId::Resign551,
        ActionId::Resign511,
        ActionId::ResignTriple1,
        ActionId::ResignTriple2,
        ActionId::ResignTriple3,
        ActionId::ResignTriple4,
        ActionId::ResignTriple5,
        ActionId::ResignTriple6,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ActionId::Stop => "s",
            ActionId::Roll => "r",
            ActionId::Resign5 => "m5",
            ActionId::Resign1 => "m1",
            ActionId::Resign55 => "m55",
            ActionId::Resign51 => "m51",
            ActionId::Resign11 => "m11",
            ActionId::Resign551 => "m551",
            ActionId::Resign511 => "m511",
            ActionId::ResignTriple1 => "mt1",
            ActionId::ResignTriple2 => "mt2",
            ActionId::ResignTriple3 => "mt3",
            ActionId::ResignTriple4 => "mt4",
            ActionId::ResignTriple5 => "mt5",
            ActionId::ResignTriple6 => "mt6",
        }
    }

    pub fn is_move(self) -> bool {
        !matches!(self, ActionId::Stop | ActionId::Roll)
    }

    /// Dice given up by a move, as `(fives, ones, triple face)`; `None` for
    /// stop and roll.
    pub fn resigned(self) -> Option<(u8, u8, u8)> {
        Some(match self {
            ActionId::Stop | ActionId::Roll => return None,
            ActionId::Resign5 => (1, 0, 0),
            ActionId::Resign1 => (0, 1, 0),
            ActionId::Resign55 => (2, 0, 0),
            ActionId::Resign51 => (1, 1, 0),
            ActionId::Resign11 => (0, 2, 0),
            ActionId::Resign551 => (2, 1, 0),
            ActionId::Resign511 => (1, 2, 0),
            ActionId::ResignTriple1 => (0, 3, 0),
            ActionId::ResignTriple5 => (3, 0, 0),
            ActionId::ResignTriple2 => (0, 0, 2),
            ActionId::ResignTriple3 => (0, 0, 3),
            ActionId::ResignTriple4 => (0, 0, 4),
            ActionId::ResignTriple6 => (0, 0, 6),
        })
    }

    /// The move that turns `from` into `to`, if `to ≺ from` and the resigned
    /// dice form one of the named moves.
    pub fn for_move(from: Configuration, to: Configuration) -> Option<ActionId> {
        if !to.is_smaller_than(from) {
            return None;
        }
        let diff = (
            from.fives() - to.fives(),
            from.ones() - to.ones(),
            if to.triple() == 0 { from.triple() } else { 0 },
        );
        ActionId::ALL
            .into_iter()
            .find(|a| a.resigned() == Some(diff))
    }

    /// Configuration left after applying this move to `from`.
    pub fn apply_move(self, from: Configuration) -> Option<Configuration> {
        let (f, o, t) = self.resigned()?;
        if from.fives() < f || from.ones() < o || (t != 0 && from.triple() != t) {
            return None;
        }
        let triple = if t != 0 { 0 } else { from.triple() };
        let to = Configuration::new(from.fives() - f, from.ones() - o, triple).ok()?;
        to.is_smaller_than(from).then_some(to)
    }
}

impl fmt::Display for ActionId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ActionId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        ActionId::ALL
            .into_iter()
            .find(|a| a.name() == s)
            .ok_or_else(|| Error::UnknownAction(s.to_string()))
    }
}

impl From<ActionId> for String {
    fn from(a: ActionId) -> Self {
        a.name().to_string()
    }
}

impl TryFrom<String> for ActionId {
    type Error = Error;

    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dice::configurations;

    #[test]
    fn names_round_trip() {
        for a in ActionId::ALL {
            assert_eq!(a.name().parse::<ActionId>().unwrap(), a);
        }
        assert!("m3".parse::<ActionId>().is_err());
    }

    #[test]
    fn every_move_with_few_scoring_dice_is_named() {
        // moves exist only with fewer than five dice to roll, so d(i) <= 4
        for &from in configurations().iter().filter(|c| c.scoring_dice() <= 4) {
            for to in from.sub_configurations() {
                let a = ActionId::for_move(from, to).unwrap_or_else(|| panic!("{from} -> {to}"));
                assert_eq!(a.apply_move(from), Some(to));
            }
        }
    }

    #[test]
    fn breaking_a_triple_of_fives() {
        let from = Configuration::new(3, 0, 0).unwrap();
        let to = Configuration::new(2, 0, 0).unwrap();
        assert_eq!(ActionId::for_move(from, to), Some(ActionId::Resign5));
        let from = Configuration::new(3, 1, 0).unwrap();
        assert_eq!(
            ActionId::ResignTriple5.apply_move(from),
            Some(Configuration::new(0, 1, 0).unwrap())
        );
        assert_eq!(ActionId::ResignTriple5.apply_move(Configuration::new(3, 0, 0).unwrap()), None);
    }
}
