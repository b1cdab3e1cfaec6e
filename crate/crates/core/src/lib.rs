//! Exact solver for the solitaire Ten Thousand dice game.
//!
//! One turn is a Markov control process over states `(τ, i, n)`: chips
//! accumulated, the last scoring configuration and the number of dice left
//! to roll. Above 55 chips stopping is optimal, so the game is solved exactly
//! by backward induction over the finitely many states below.
//!
//! ```
//! let solution = tenk_core::solver::solve_backward();
//! let value = tenk_core::value::to_decimal(solution.initial_value(), 10);
//! assert_eq!(value, "5.8720189185");
//! ```

pub mod action;
pub mod dice;
pub mod error;
pub mod frequency;
pub mod oracle;
pub mod policy_io;
pub mod reference;
pub mod solver;
pub mod state;
pub mod value;
pub mod variants;
pub mod verify;

pub use action::ActionId;
pub use dice::{classify_roll, Configuration};
pub use error::{Error, Result};
pub use frequency::{build_frequency_table, frequencies, FrequencyTable};
pub use solver::{solve_backward, Solution};
pub use state::{available_actions, transitions, GameState, TransitionEntry};
pub use value::Value;
pub use policy_io::{export_table, import_table, render_published_table, ExportBundle, ExportFormat};
pub use variants::{solve_pig, solve_restricted, ActionSubset};
pub use verify::{run_verification, VerificationReport, VerifyOptions};
