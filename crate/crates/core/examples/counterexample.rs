//! The first LG(k) where the wedge-product conditions fail to force
//! vanishing: the full k = 7 scan, grouped by factor multiset.
//!
//! cargo run --release --example counterexample

use std::collections::BTreeMap;

use lgbott::{bundle_cohomology, verify_criterion, BundleExpression, Mode, Twist};

fn main() -> lgbott::Result<()> {
    let expr = BundleExpression::from_factors(7, &[6, 5, 4, 3, 3, 2, 1], Twist::Fixed(-9))?;
    let report = bundle_cohomology(&expr)?;
    for (d, n) in &report.aggregate {
        println!("{expr}: H^{d} has dimension {n}");
    }

    let summary = verify_criterion(Mode::Lagrangian, 7, 4)?;
    println!("{} tuples, {} violations", summary.tuples_checked, summary.violations.len());
    let mut grouped: BTreeMap<Vec<u32>, BTreeMap<String, usize>> = BTreeMap::new();
    for v in &summary.violations {
        let mut factors = v.tuple.effective_factors();
        factors.sort_unstable_by(|a, b| b.cmp(a));
        *grouped
            .entry(factors)
            .or_default()
            .entry(format!("F{} at t={} in degree {}", v.partition, v.twist, v.degree))
            .or_default() += 1;
    }
    for (factors, hits) in grouped {
        println!("factors {factors:?}:");
        for (hit, orderings) in hits {
            println!("  {hit} ({orderings} slot orderings)");
        }
    }
    Ok(())
}
