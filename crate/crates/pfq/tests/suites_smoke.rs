//! Quick pass over every named suite at reduced bounds, plus the full
//! default-bound runs for the cheap suites.

use pfq::suites::{positivity_experiment, run_suite, SuiteOptions, SUITE_NAMES};

fn small() -> SuiteOptions {
    SuiteOptions {
        max_weight: Some(3),
        vars: Some(2),
        order: Some(4),
        jobs: 4,
    }
}

#[test]
fn every_suite_passes_at_small_bounds() {
    for name in SUITE_NAMES {
        let report = run_suite(name, &small()).expect("registered suite");
        assert!(
            report.passed(),
            "suite {name} failed: {:?}",
            report.failures
        );
        assert!(report.cases > 0, "suite {name} ran no cases");
    }
}

#[test]
fn unknown_suite_is_rejected() {
    assert!(run_suite("no-such-suite", &SuiteOptions::default()).is_none());
}

#[test]
fn positivity_experiment_reports() {
    let records = positivity_experiment(4);
    assert!(!records.is_empty());
}
