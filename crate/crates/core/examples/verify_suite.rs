//! Runs every invariant suite programmatically and prints a summary per suite.
//!
//! cargo run --release --example verify_suite [n] [max_weight]

use symfact::verify::{run, Suite, VerifyConfig};

fn main() -> symfact::Result<()> {
    let mut args = std::env::args().skip(1);
    let n = args.next().and_then(|a| a.parse().ok()).unwrap_or(3);
    let max_weight = args.next().and_then(|a| a.parse().ok()).unwrap_or(3);
    for suite in [Suite::Eigen, Suite::Chain, Suite::Inverse, Suite::Ode, Suite::Lifting, Suite::Quadrature] {
        let report = run(&VerifyConfig { suite, n, max_weight, seed: 1 })?;
        println!(
            "{:<11} checked {:>5}  failed {:>3}  {}",
            suite.name(),
            report.checked,
            report.failed,
            if report.passed { "ok" } else { "FAILED" }
        );
        for note in &report.notes {
            println!("            note: {note}");
        }
    }
    Ok(())
}
