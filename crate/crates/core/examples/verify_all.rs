//! Runs the complete verification suite, prints the per-group summary and
//! then demonstrates the fault hook: a deliberately corrupted bracket table
//! must be caught by the frozen reference tables.

use acbm3::verify::{run_all, Fault};

fn main() {
    let report = run_all(None);
    for line in report.summary_lines() {
        println!("{line}");
    }
    assert!(report.passed(), "clean run must pass every check");

    let fault = Fault::ScaleHeisenbergBracket;
    let corrupted = run_all(Some(fault));
    println!();
    println!("with fault `{fault}` injected:");
    for check in corrupted.failures() {
        println!("  FAIL {}", check.name);
    }
    assert!(!corrupted.passed(), "the corruption must be caught");
}
