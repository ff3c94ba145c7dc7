//! Timing harness: runs every suite at its default (acceptance) bounds and
//! prints wall times. Ignored by default; invoke with
//! `cargo test --test suite_timings -- --ignored --nocapture`.

use pfq::suites::{run_suite, SuiteOptions, SUITE_NAMES};

#[test]
#[ignore = "timing harness, run explicitly"]
fn time_default_bounds() {
    for name in SUITE_NAMES {
        let opts = SuiteOptions {
            jobs: std::thread::available_parallelism().map(|n| n.get()).unwrap_or(1),
            ..Default::default()
        };
        let r = run_suite(name, &opts).unwrap();
        println!(
            "{name}: {} cases, {} failures, {} ms",
            r.cases,
            r.failures.len(),
            r.millis
        );
        assert!(r.passed(), "{:?}", r.failures);
    }
}
