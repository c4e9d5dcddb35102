//! Decomposes a product of exterior powers of the SL(m) standard module.
//!
//! cargo run --example pieri -- 4 2,2,1

use lgbott::{decompose_wedges, sl_dim};

fn main() -> lgbott::Result<()> {
    let mut args = std::env::args().skip(1);
    let m: usize = args.next().map_or(4, |a| a.parse().expect("rank"));
    let wedges: Vec<u32> = args
        .next()
        .unwrap_or_else(|| "2,2,1".into())
        .split(',')
        .map(|j| j.trim().parse().expect("exterior degree"))
        .collect();
    let d = decompose_wedges(&wedges, m)?;
    println!("{} summands for wedges {wedges:?} over SL({m}):", d.len());
    for (pi, mult) in d.iter() {
        println!("  {mult} x F{pi}  (dimension {})", sl_dim(pi, m)?);
    }
    println!("total dimension {}", d.dimension());
    Ok(())
}
