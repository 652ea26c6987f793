//! Run the frozen verification suite and print one line per report.
//!
//! ```text
//! cargo run --release --example verify_suite -- [default|strict]
//! ```

use punctured_metric::verify::{run_suite, Profile};

fn main() {
    let profile: Profile = std::env::args()
        .nth(1)
        .map(|s| s.parse().expect("profile is `default` or `strict`"))
        .unwrap_or_default();
    let reports = run_suite(profile);
    let failed = reports.iter().filter(|r| !r.passed).count();
    for r in &reports {
        let status = if r.passed { "pass" } else { "FAIL" };
        println!(
            "{status}  {:<24} margin {:>10.3e}  {}",
            r.name, r.worst_margin, r.notes
        );
    }
    println!(
        "{} reports, {failed} failed ({profile} profile)",
        reports.len()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
