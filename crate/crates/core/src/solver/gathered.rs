//! Faster solve over gathered classes of states.
//!
//! States whose relevant action sets coincide share one value function:
//! `V₀` for states where only stop and roll matter, `V₅` for `[2,0,0]` and
//! `[1,1,0]`, `V₁` for `[0,2,0]`, `V₅₅` for `[2,1,0]` and `V₅₁` for `[1,2,0]`,
//! all with fewer than five dice to roll. Every other state is valued by `V₀`.

use crate::action::ActionId;
use crate::dice::Configuration;
use crate::value::{chips, Value};

use super::{roll_value, Decision, STOPPING_BOUNDARY};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GatheredClass {
    Zero,
    Five,
    One,
    FiveFive,
    FiveOne,
}

impl GatheredClass {
    pub const ALL: [GatheredClass; 5] = [
        GatheredClass::Zero,
        GatheredClass::Five,
        GatheredClass::One,
        GatheredClass::FiveFive,
        GatheredClass::FiveOne,
    ];

    /// Dice counts on which the class is defined.
    pub fn dice_range(self) -> std::ops::RangeInclusive<u8> {
        match self {
            GatheredClass::Zero => 1..=5,
            GatheredClass::Five | GatheredClass::One => 1..=3,
            GatheredClass::FiveFive | GatheredClass::FiveOne => 1..=2,
        }
    }

    /// Class whose value function covers `(·, config, dice)`.
    pub fn of(config: Configuration, dice: u8) -> GatheredClass {
        if dice == 5 {
            return GatheredClass::Zero;
        }
        match (config.fives(), config.ones(), config.triple()) {
            (2, 0, 0) | (1, 1, 0) => GatheredClass::Five,
            (0, 2, 0) => GatheredClass::One,
            (2, 1, 0) => GatheredClass::FiveFive,
            (1, 2, 0) => GatheredClass::FiveOne,
            _ => GatheredClass::Zero,
        }
    }

    fn row(self) -> usize {
        self as usize
    }
}

/// `(V_ℓ(τ, n), A_ℓ(τ, n))` for the five classes, `τ < 56`.
#[derive(Debug, Clone)]
pub struct GatheredClassTable {
    cells: Vec<Option<Decision>>,
}

impl GatheredClassTable {
    fn slot(class: GatheredClass, tau: u32, dice: u8) -> usize {
        (class.row() * STOPPING_BOUNDARY as usize + tau as usize) * 5 + dice as usize - 1
    }

    pub fn get(&self, class: GatheredClass, tau: u32, dice: u8) -> Option<&Decision> {
        if tau >= STOPPING_BOUNDARY || !class.dice_range().contains(&dice) {
            return None;
        }
        self.cells[Self::slot(class, tau, dice)].as_ref()
    }

    fn set(&mut self, class: GatheredClass, tau: u32, dice: u8, decision: Decision) {
        if class.dice_range().contains(&dice) {
            self.cells[Self::slot(class, tau, dice)] = Some(decision);
        }
    }

    /// Value of `(tau, config, dice)` through its class, `τ` from the boundary on.
    pub fn value(&self, tau: u32, config: Configuration, dice: u8) -> Value {
        if tau >= STOPPING_BOUNDARY {
            return chips(tau);
        }
        match self.get(GatheredClass::of(config, dice), tau, dice) {
            Some(d) => d.value.clone(),
            None => panic!("class value for ({tau}, [{config}], {dice}) not computed yet"),
        }
    }

    pub fn v_roll(&self, tau: u32, dice: u8) -> Value {
        roll_value(tau, dice, |t, k, n| self.value(t, k, n))
    }

    /// Offers `aux` to the class state `(tau, dice)`; taken on strict gain.
    fn offer(&mut self, class: GatheredClass, tau: u32, dice: u8, aux: &Value, action: ActionId) {
        if tau >= STOPPING_BOUNDARY {
            return;
        }
        let current = self.get(class, tau, dice).expect("solved at a higher chip count");
        if current.value < *aux {
            self.set(
                class,
                tau,
                dice,
                Decision {
                    value: aux.clone(),
                    action,
                },
            );
        }
    }
}

/// Backward induction over the gathered classes.
///
/// Each offer names the move actually taken from the class state: offers one
/// chip down and one die up come from resigning a single five.
pub fn solve_efficient() -> GatheredClassTable {
    use GatheredClass::*;
    let mut table = GatheredClassTable {
        cells: vec![None; GatheredClass::ALL.len() * STOPPING_BOUNDARY as usize * 5],
    };
    for tau in (0..STOPPING_BOUNDARY).rev() {
        let roll5 = table.v_roll(tau, 5);
        table.set(
            Zero,
            tau,
            5,
            Decision {
                value: roll5,
                action: ActionId::Roll,
            },
        );
        for dice in (1..=4u8).rev() {
            let aux = table.v_roll(tau, dice);
            let stop = aux <= chips(tau);
            for class in GatheredClass::ALL {
                let decision = if stop {
                    Decision {
                        value: chips(tau),
                        action: ActionId::Stop,
                    }
                } else {
                    Decision {
                        value: aux.clone(),
                        action: ActionId::Roll,
                    }
                };
                table.set(class, tau, dice, decision);
            }
            if stop {
                continue;
            }
            if dice >= 2 {
                table.offer(Five, tau + 1, dice - 1, &aux, ActionId::Resign5);
                table.offer(One, tau + 2, dice - 1, &aux, ActionId::Resign1);
            }
            if (2..=3).contains(&dice) {
                table.offer(FiveFive, tau + 1, dice - 1, &aux, ActionId::Resign5);
            }
            if dice >= 3 {
                table.offer(FiveFive, tau + 2, dice - 2, &aux, ActionId::Resign55);
            }
            if (2..=3).contains(&dice) {
                table.offer(FiveOne, tau + 1, dice - 1, &aux, ActionId::Resign5);
            }
            if dice >= 3 {
                table.offer(FiveOne, tau + 3, dice - 2, &aux, ActionId::Resign51);
            }
        }
    }
    table
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::value::to_decimal;

    #[test]
    fn class_values() {
        let t = solve_efficient();
        let v = |c, tau, n| to_decimal(&t.get(c, tau, n).unwrap().value, 3);
        assert_eq!(v(GatheredClass::Five, 5, 3), "6.476");
        assert_eq!(v(GatheredClass::One, 4, 3), "5.021");
        assert_eq!(v(GatheredClass::FiveFive, 4, 2), "5.021");
        assert_eq!(
            t.get(GatheredClass::FiveFive, 4, 2).unwrap().value,
            t.get(GatheredClass::Five, 3, 3).unwrap().value
        );
        assert_eq!(to_decimal(&t.v_roll(0, 5), 10), "5.8720189185");
    }

    #[test]
    fn more_actions_never_hurt() {
        use GatheredClass::*;
        let t = solve_efficient();
        for tau in 0..STOPPING_BOUNDARY {
            for n in 1..=3 {
                let v = |c| t.get(c, tau, n).map(|d| d.value.clone());
                assert!(v(Five) >= v(Zero));
                assert!(v(One) >= v(Zero));
                if n <= 2 {
                    assert!(v(FiveFive) >= v(Five));
                    assert!(v(FiveOne) >= v(One));
                }
            }
        }
    }
}
