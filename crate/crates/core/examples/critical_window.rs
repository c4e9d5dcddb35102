//! The twist window outside which a summand only has H^0 or top cohomology.
//!
//! cargo run --example critical_window -- 7 7,6,5,3,2,1

use lgbott::bundle::top_degree;
use lgbott::{bott, critical_twist_window, weight_of, Partition, RootSystem};

fn main() -> lgbott::Result<()> {
    let mut args = std::env::args().skip(1);
    let k: usize = args.next().map_or(7, |a| a.parse().expect("k"));
    let parts: Vec<u32> = args
        .next()
        .unwrap_or_else(|| "7,6,5,3,2,1".into())
        .split(',')
        .map(|p| p.trim().parse().expect("part"))
        .collect();
    let pi = Partition::new(parts)?;
    let roots = RootSystem::for_lagrangian(k)?;
    let window = critical_twist_window(&pi, k)?;
    println!("F{pi} on LG({k}): window {}..={}", window.start(), window.end());
    for t in window.start() - 1..=window.end() + 1 {
        let r = bott(&roots, &weight_of(&pi, t, k + 1)?)?;
        let shown = r.degree().map_or("singular".to_string(), |d| format!("degree {d}"));
        println!("  t = {t:>4}: {shown}");
    }
    println!("below the window every twist gives degree {}", top_degree(k));
    Ok(())
}
