//! Sweep every catalogued identity over its standard grid and print the
//! text report, one verdict line per identity.
//!
//! ```text
//! cargo run --example verify_catalog
//! ```

use exoseries::verify::{emit_all, verify_all, ReportFormat, Verdict};

fn main() {
    let reports = verify_all(1e-9);
    print!(
        "{}",
        String::from_utf8(emit_all(&reports, ReportFormat::Text)).unwrap()
    );

    let passed = reports
        .iter()
        .filter(|r| r.verdict == Verdict::Pass)
        .count();
    let rejected = reports
        .iter()
        .filter(|r| r.verdict == Verdict::PrintedFormRejected)
        .count();
    let points: usize = reports.iter().map(|r| r.points.len()).sum();
    println!(
        "\n{} identities over {points} grid points: {passed} pass, {rejected} printed-form rejections, {} failures",
        reports.len(),
        reports.len() - passed - rejected
    );
}
