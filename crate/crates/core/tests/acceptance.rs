//! One line per acceptance criterion, then a single assertion over all of them.

use std::io::Write;

use k3inv::suite::{run_suite, SuiteOptions};

#[test]
fn acceptance() {
    let report = run_suite(&SuiteOptions::default());
    // straight to the handle so the lines show up without --nocapture
    let mut err = std::io::stderr().lock();
    for r in &report.results {
        let _ = writeln!(err, "{}", r.line());
    }
    let failed: Vec<u8> = report.results.iter().filter(|r| !r.passed).map(|r| r.id).collect();
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
