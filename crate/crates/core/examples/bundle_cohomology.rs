//! Cohomology of a wedge-product bundle given as an expression.
//!
//! cargo run --example bundle_cohomology -- "w1*w1(-4) @ LG(2)"
//! With `--all` the twist in the expression is ignored and every twist
//! with intermediate cohomology is listed.

use lgbott::report::write_report_text;
use lgbott::{bundle_cohomology, parse_bundle_expression, twist_scan, Twist};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let all = args.iter().any(|a| a == "--all");
    let text = args.iter().find(|a| *a != "--all").cloned().unwrap_or_else(|| "w1*w1(-4) @ LG(2)".into());
    let expr = parse_bundle_expression(&text)?;
    println!("bundle {expr}");
    let mut stdout = std::io::stdout();
    if all {
        for report in twist_scan(&expr.with_twist(Twist::All))? {
            if !report.is_zero() {
                write_report_text(&report, false, &mut stdout)?;
            }
        }
    } else {
        write_report_text(&bundle_cohomology(&expr)?, false, &mut stdout)?;
    }
    Ok(())
}
