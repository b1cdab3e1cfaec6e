//! Related games solved with the same machinery: Ten Thousand with a
//! restricted set of moves, and the one-die Pig game.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::action::ActionId;
use crate::error::{Error, Result};
use crate::solver::{backward_induction, Solution};
use crate::value::{chips, Value};

/// Actions a restricted game allows; always contains stop and roll.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ActionSubset(BTreeSet<ActionId>);

impl ActionSubset {
    pub fn new(actions: impl IntoIterator<Item = ActionId>) -> Self {
        let mut set: BTreeSet<ActionId> = actions.into_iter().collect();
        set.insert(ActionId::Stop);
        set.insert(ActionId::Roll);
        ActionSubset(set)
    }

    /// Stop and roll only.
    pub fn stop_roll() -> Self {
        Self::new([])
    }

    pub fn all() -> Self {
        Self::new(ActionId::ALL)
    }

    /// The nested subsets `{s,r}`, `+m5`, `+m1`, `+m55`, `+m51`, and all 15.
    pub fn nested_rows() -> Vec<ActionSubset> {
        use ActionId::*;
        vec![
            Self::stop_roll(),
            Self::new([Resign5]),
            Self::new([Resign5, Resign1]),
            Self::new([Resign5, Resign1, Resign55]),
            Self::new([Resign5, Resign1, Resign55, Resign51]),
            Self::all(),
        ]
    }

    pub fn contains(&self, action: ActionId) -> bool {
        self.0.contains(&action)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = ActionId> + '_ {
        self.0.iter().copied()
    }

    pub fn is_full(&self) -> bool {
        self.0.len() == ActionId::ALL.len()
    }
}

impl fmt::Display for ActionSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_full() {
            return f.write_str("all");
        }
        let names: Vec<&str> = self.0.iter().map(|a| a.name()).collect();
        f.write_str(&names.join(","))
    }
}

impl FromStr for ActionSubset {
    type Err = Error;

    /// Comma-separated action names, or `all`. Stop and roll must be listed.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.eq_ignore_ascii_case("all") || s.eq_ignore_ascii_case("full") {
            return Ok(Self::all());
        }
        let actions = s
            .split(',')
            .filter(|p| !p.trim().is_empty())
            .map(str::parse)
            .collect::<Result<BTreeSet<ActionId>>>()?;
        if !actions.contains(&ActionId::Stop) || !actions.contains(&ActionId::Roll) {
            return Err(Error::Parse(format!(
                "action subset `{s}` must include both s and r"
            )));
        }
        Ok(ActionSubset(actions))
    }
}

/// Backward induction in which a move may be chosen only if it is in
/// `subset`. A move is valued by rolling from its destination, so chains of
/// allowed moves count only when their composite is itself allowed.
pub fn solve_restricted(subset: &ActionSubset) -> Solution {
    backward_induction(|a| subset.contains(a))
}

/// Value function of solitaire Pig: roll one die, a 1 loses the turn, any
/// other face adds its pips.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PigTable {
    pub threshold: u32,
    values: Vec<Value>,
}

impl PigTable {
    pub fn value(&self, tau: u32) -> Value {
        match self.values.get(tau as usize) {
            Some(v) => v.clone(),
            None => chips(tau),
        }
    }

    /// `(1/6)·Σ_{d=2..6} V(τ + d)`.
    pub fn roll_value(&self, tau: u32) -> Value {
        let sum: Value = (2..=6).map(|d| self.value(tau + d)).sum();
        sum / BigInt::from(6)
    }

    /// Checks `V(τ) = max(τ, roll)` exactly for `τ` in `0..=up_to`.
    pub fn satisfies_dpe(&self, up_to: u32) -> bool {
        (0..=up_to).all(|tau| self.value(tau) == chips(tau).max(self.roll_value(tau)))
    }
}

/// Smallest `τ` with `τ ≥ (1/6)·Σ_{d=2..6}(τ + d)`.
pub fn pig_threshold() -> u32 {
    (0..)
        .find(|&tau: &u32| 6 * tau >= (2..=6).map(|d| tau + d).sum::<u32>())
        .expect("threshold exists")
}

pub fn solve_pig() -> PigTable {
    let threshold = pig_threshold();
    let mut table = PigTable {
        threshold,
        values: vec![BigRational::from_integer(0.into()); threshold as usize],
    };
    // a roll only reaches higher chip counts, which are already final
    for tau in (0..threshold).rev() {
        let roll = table.roll_value(tau);
        table.values[tau as usize] = chips(tau).max(roll);
    }
    table
}

/// `V(τ) = base·ratioᵗ`, a solution of the difference equation
/// `V(τ) = (1/6)·Σ_{d=2..6} V(τ + d)` with `V(τ) ≥ τ`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GeometricSolution {
    pub base: f64,
    pub ratio: f64,
}

impl GeometricSolution {
    pub fn value(&self, tau: u32) -> f64 {
        self.base * self.ratio.powi(tau as i32)
    }

    /// `|V(τ) − (1/6)·Σ_{d=2..6} V(τ + d)|`.
    pub fn residual(&self, tau: u32) -> f64 {
        let avg: f64 = (2..=6).map(|d| self.value(tau + d)).sum::<f64>() / 6.0;
        (self.value(tau) - avg).abs()
    }
}

/// Positive root of `g² + g³ + g⁴ + g⁵ + g⁶ = 6`, by bisection.
pub fn geometric_ratio() -> f64 {
    let p = |g: f64| (2..=6).map(|k| g.powi(k)).sum::<f64>() - 6.0;
    let (mut lo, mut hi) = (1.0f64, 2.0f64);
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if p(mid) < 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

/// Smallest base for which `base·gᵗ ≥ τ` at every integer `τ ≥ 0`.
pub fn minimal_geometric_base() -> f64 {
    let g = geometric_ratio();
    // τ/gᵗ peaks near 1/ln g and decreases afterwards
    let peak = (1.0 / g.ln()).ceil() as u32 + 1;
    (0..=2 * peak)
        .map(|tau| tau as f64 / g.powi(tau as i32))
        .fold(0.0, f64::max)
}

/// Witness that the Pig equation has solutions above the value function.
pub fn demonstrate_nonuniqueness(base: f64) -> Result<GeometricSolution> {
    let ratio = geometric_ratio();
    if base.is_nan() || base < minimal_geometric_base() {
        return Err(Error::BaseTooSmall(base));
    }
    Ok(GeometricSolution { base, ratio })
}
