//! Exhaustive scan of the wedge-product vanishing conditions on LG(k).
//!
//! cargo run --release --example verify_question1 -- 6 4

use std::time::Instant;

use lgbott::{enumerate_conditions, Mode, Scanner};

fn main() -> lgbott::Result<()> {
    let mut args = std::env::args().skip(1).map(|a| a.parse::<usize>().expect("integer argument"));
    let max_k = args.next().unwrap_or(6);
    let jobs = args.next().unwrap_or(4);
    for k in 1..=max_k {
        let start = Instant::now();
        let tuples = enumerate_conditions(Mode::Lagrangian, k, 2 * k + 1)?;
        let summary = Scanner::new(k)?.verify(&tuples, jobs)?;
        println!(
            "LG({k}): {:>7} tuples, {:>3} violations, {:.2?}",
            summary.tuples_checked,
            summary.violations.len(),
            start.elapsed()
        );
    }
    Ok(())
}
