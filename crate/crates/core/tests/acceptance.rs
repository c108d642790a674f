//! One line per acceptance criterion. Failures are reported, not raised.

use std::time::Instant;

use branching_core::qseries::DEFAULT_ORDER;
use branching_core::report::all_passed;
use branching_core::scalars::int;
use branching_core::suites;
use branching_core::CheckResult;

fn line(n: usize, title: &str, results: &[CheckResult], started: Instant) {
    let status = if all_passed(results) { "PASS" } else { "FAIL" };
    let failed: Vec<String> = results.iter().filter(|r| !r.passed()).map(|r| r.to_string()).collect();
    println!(
        "criterion {n} [{status}] {title}: {}/{} checks pass ({:.1}s)",
        results.len() - failed.len(),
        results.len(),
        started.elapsed().as_secs_f64()
    );
    for f in failed {
        println!("    {f}");
    }
}

#[test]
fn acceptance() {
    let t = Instant::now();
    line(1, "highest weight vectors", &suites::hwv(), t);
    let t = Instant::now();
    line(2, "Sugawara conformal vectors", &suites::sugawara_checks(), t);
    let t = Instant::now();
    line(3, "Virasoro brackets to depth 2", &suites::virasoro_checks(&int(2)), t);
    let t = Instant::now();
    let mut q = suites::identities(DEFAULT_ORDER);
    q.extend(suites::characters(DEFAULT_ORDER));
    q.extend(suites::branching(DEFAULT_ORDER));
    line(4, "q-series identities at order 200", &q, t);
    let t = Instant::now();
    line(5, "basis counts against horizontal products", &suites::graded_dims(8), t);
    let t = Instant::now();
    line(6, "finite algebra and triality", &suites::finite_algebra(), t);
    let t = Instant::now();
    line(7, "Ramond corrections", &suites::ramond_checks(), t);
    let t = Instant::now();
    line(8, "regenerated tables", &suites::tables(), t);
    let t = Instant::now();
    line(9, "σ̂ on the conformal span", &suites::sigma_hat_checks(), t);
}
