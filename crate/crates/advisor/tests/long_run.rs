use uuid::Uuid;

use tenk_advisor::{Mode, Session, Status};
use tenk_core::solve_backward;
use tenk_core::value::to_f64;

/// Following the advice in seeded sessions averages out to the game value.
#[test]
fn following_advice_earns_the_game_value() {
    let solution = solve_backward();
    let exact = to_f64(solution.initial_value());
    let turns = 25_000u64;
    let (mut sum, mut sum_sq) = (0.0, 0.0);
    for seed in 0..turns {
        let mut s = Session::new(Uuid::nil(), Mode::Rng, Some(seed));
        while !s.status.is_finished() {
            match s.status {
                Status::AwaitingRoll => {
                    s.roll(None).unwrap();
                }
                _ => {
                    let advice = s.advise(&solution).unwrap();
                    let best = advice.iter().find(|a| a.optimal).expect("one optimal action");
                    s.act(best.action).unwrap();
                }
            }
        }
        let payoff = s.payoff().unwrap() as f64;
        sum += payoff;
        sum_sq += payoff * payoff;
    }
    let n = turns as f64;
    let mean = sum / n;
    let se = ((sum_sq / n - mean * mean) / n).sqrt();
    assert!((mean - exact).abs() < 4.0 * se, "mean {mean} +- {se}, exact {exact}");
}
