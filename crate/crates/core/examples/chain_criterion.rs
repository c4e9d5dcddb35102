//! Vanishing of ∧^jQ*(t) on every LG(i) of a chain, in degrees 1..=2i+2.
//!
//! cargo run --example chain_criterion -- 6

use lgbott::verify_chain_criterion;

fn main() -> lgbott::Result<()> {
    let k: usize = std::env::args().nth(1).map_or(6, |a| a.parse().expect("k"));
    let summary = verify_chain_criterion(k)?;
    println!("{} twists checked across LG(1)..LG({k})", summary.checks);
    for f in &summary.failures {
        println!("  LG({}) wedge {} twist {}: degree {}", f.i, f.j, f.twist, f.degree);
    }
    println!("{}", if summary.is_clean() { "no failures" } else { "failures found" });
    Ok(())
}
