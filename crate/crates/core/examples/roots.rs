//! Positive roots of C_{k+1} and their pairings with ω_i + tω_{k+1} + ρ.
//!
//! cargo run --example roots -- 5 1

use lgbott::cli::{pairing_table, symbolic_pairing};
use lgbott::lie::lagrangian_dim;
use lgbott::RootSystem;

fn main() -> lgbott::Result<()> {
    let mut args = std::env::args().skip(1).map(|a| a.parse::<usize>().expect("integer argument"));
    let k = args.next().unwrap_or(5);
    let i = args.next().unwrap_or(1);
    let roots = RootSystem::for_lagrangian(k)?;
    println!(
        "C_{}: {} positive roots, {} containing the last simple root (dim LG({k}) = {})",
        roots.rank(),
        roots.positive_roots().len(),
        roots.parabolic_roots().count(),
        lagrangian_dim(k)
    );
    println!("rho = {}", roots.rho());
    println!("pairings with w{i} + t w{} + rho, smallest first:", k + 1);
    for (label, slope, c) in pairing_table(k, i, false)? {
        println!("  {label:<28} {}", symbolic_pairing(slope, c));
    }
    Ok(())
}
