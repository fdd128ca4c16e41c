use qtau_core::report::Status;
use qtau_core::suites::{run_suite, SUITES};
use qtau_core::Error;

fn assert_passes(name: &str) {
    let report = run_suite(name, 7).unwrap();
    assert!(!report.checks.is_empty());
    assert!(report.passed(), "{report}");
}

#[test]
fn s2_example_passes() {
    assert_passes("s2-example");
}

#[test]
fn s3_figure_passes() {
    assert_passes("s3-figure");
}

#[test]
fn s3_embedding_passes() {
    assert_passes("s3-embedding");
}

#[test]
fn s3_boundary_passes() {
    assert_passes("s3-boundary");
}

#[test]
fn nonprojective_passes() {
    assert_passes("nonprojective");
}

#[test]
fn properties_pass_for_several_seeds() {
    for seed in [0, 11] {
        let report = run_suite("properties", seed).unwrap();
        assert!(report.passed(), "seed {seed}: {report}");
        assert_eq!(report.checks[0].status, Status::Skip);
    }
}

#[test]
fn every_suite_name_is_known() {
    assert_eq!(SUITES.len(), 6);
    assert!(matches!(run_suite("s4", 0), Err(Error::UnknownSuite(_))));
}

#[test]
fn report_json_lists_checks() {
    let report = run_suite("nonprojective", 0).unwrap();
    let value: serde_json::Value = serde_json::from_str(&report.to_json()).unwrap();
    assert_eq!(value["suite"], "nonprojective");
    assert!(value["checks"].as_array().unwrap().iter().all(|c| c["status"] == "pass"));
}
