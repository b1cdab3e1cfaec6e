//! Enumerate every ordered roll of 1..5 dice and print the one-roll table.

use tenk_core::dice::configurations;
use tenk_core::FrequencyTable;

fn main() {
    let table = tenk_core::build_frequency_table();
    println!("{:>7} {:>5} {:>6}  {:>5} {:>5} {:>5} {:>5} {:>5}", "config", "score", "comb", "n=1", "n=2", "n=3", "n=4", "n=5");
    print!("{:>7} {:>5} {:>6} ", "0,0,0", 0, "-");
    for n in 1..=5 {
        print!(" {:>5}", table.bust(n));
    }
    println!();
    for &c in configurations() {
        print!("{:>7} {:>5} {:>6} ", c.to_string(), c.score(), c.scoring_combinations());
        for n in 1..=5 {
            print!(" {:>5}", table.count(n, c));
        }
        println!();
    }
    for n in 1..=5 {
        let mean = table.total_score(n) as f64 / FrequencyTable::outcomes(n) as f64;
        println!("n={n}: {} outcomes, mean score of one roll {mean:.4}", FrequencyTable::outcomes(n));
    }
}
