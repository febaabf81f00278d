//! Run the structural-theorem verification suites programmatically.
//!
//! Each suite replays one theorem over a deterministic corpus and reports
//! how many instances met the hypotheses, how many were skipped, and any
//! violations. The oracle suite additionally checks the fast engine
//! against brute-force subset enumeration on every small graph.

use rigidity::{run_suite, RigidityEngine, Suite};

fn main() {
    let engine = RigidityEngine::default();
    for suite in [Suite::Gluing, Suite::Motion, Suite::Oracle] {
        for result in run_suite(&engine, suite, 0) {
            let status = if result.passed() { "pass" } else { "FAIL" };
            println!(
                "{status} {} [{}]: {} tested, {} not applicable, {} violations",
                result.property,
                result.corpus,
                result.tested,
                result.not_applicable,
                result.violations.len()
            );
        }
    }
}
