//! Bott's algorithm on a single weight in fundamental-weight coordinates.
//!
//! cargo run --example bott -- 0 1 0 -4

use lgbott::lie::to_epsilon;
use lgbott::{bott, CohomologyResult, RootSystem, Weight};

fn main() -> lgbott::Result<()> {
    let mut coords: Vec<i64> = std::env::args().skip(1).map(|a| a.parse().expect("integer coordinate")).collect();
    if coords.is_empty() {
        coords = vec![0, 0, -4];
    }
    let roots = RootSystem::new(coords.len())?;
    let lambda = Weight::new(coords);
    let shifted = &lambda + roots.rho();
    println!("lambda = {lambda}, lambda + rho in epsilon coordinates = {}", to_epsilon(&shifted));
    match bott(&roots, &lambda)? {
        CohomologyResult::Singular => println!("singular: all cohomology vanishes"),
        CohomologyResult::NonSingular { degree, dominant, dimension } => {
            println!("H^{degree} = irreducible module of highest weight {dominant}, dimension {dimension}");
        }
    }
    Ok(())
}
