use qtwist::cochain::{extend_seed, SeedKind};
use qtwist::linalg::q;
use qtwist::scenarios::{plane, r_matrix, run_theorem_suite, Outcome, ScenarioError, SuiteParams, SUITES};

// bridge is exercised by the acceptance target; it is the one slow suite
const LIGHT: &[&str] = &[
    "cosimplicial",
    "coboundary_square",
    "q_plane",
    "primitive",
    "T11",
    "T14",
    "T15",
    "T16",
    "prop9",
    "varsigma",
    "negative",
    "star",
    "sttp",
    "omega_chain",
];

#[test]
fn every_light_suite_passes() {
    for name in LIGHT {
        let rep = run_theorem_suite(name, &SuiteParams::default()).unwrap();
        assert!(rep.passed(), "{name}:\n{}", rep.lines());
        assert!(!rep.checks.is_empty(), "{name} ran no checks");
    }
    assert_eq!(LIGHT.len() + 1, SUITES.len());
}

#[test]
fn reports_are_deterministic() {
    for name in ["cosimplicial", "star", "sttp"] {
        let p = SuiteParams::with_seed(7);
        let a = run_theorem_suite(name, &p).unwrap();
        let b = run_theorem_suite(name, &p).unwrap();
        assert_eq!(a.lines(), b.lines());
        assert_eq!(a.to_json(false).to_string(), b.to_json(false).to_string());
    }
}

#[test]
fn timing_is_only_emitted_on_request() {
    let rep = run_theorem_suite("q_plane", &SuiteParams::default()).unwrap();
    assert!(rep.to_json(false)["runtime_ms"].is_null());
    assert!(rep.to_json(true)["runtime_ms"].is_number());
}

#[test]
fn unknown_suites_are_rejected() {
    assert!(matches!(
        run_theorem_suite("nope", &SuiteParams::default()),
        Err(ScenarioError::UnknownSuite(n)) if n == "nope"
    ));
}

#[test]
fn t14_reports_an_unmet_precondition_without_failing() {
    let a = plane(3);
    let psi = extend_seed(&r_matrix(&q(2)), SeedKind::Bicharacter, 3).unwrap();
    let p = SuiteParams { space: Some(a), cochain: Some(psi), ..SuiteParams::default() };
    let rep = run_theorem_suite("T14", &p).unwrap();
    assert!(rep.passed());
    assert!(rep.has_unmet_precondition());
    assert!(rep.checks.iter().all(|c| c.outcome == Outcome::PreconditionUnmet));
}

#[test]
fn negative_suite_records_the_expected_refusals() {
    let rep = run_theorem_suite("negative", &SuiteParams::default()).unwrap();
    assert!(rep.passed());
    assert!(rep.checks.len() >= 3);
}
