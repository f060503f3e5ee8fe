use blockcalc::verify::{run_verify, CheckStatus, Tamper, VerifyConfig};

fn config(t: &str) -> VerifyConfig {
    VerifyConfig::new(t.parse().unwrap())
}

#[test]
fn battery_passes_on_acceptance_types() {
    for t in ["A1", "A2", "B2"] {
        let report = run_verify(&config(t)).unwrap();
        assert!(report.pass, "{report}");
    }
}

#[test]
fn every_tamper_hook_is_caught_with_a_witness() {
    for tamper in Tamper::ALL {
        let report = run_verify(&config("A2").with_tamper(Some(tamper))).unwrap();
        assert!(!report.pass, "{tamper} went unnoticed");
        for c in report.failures() {
            assert_eq!(c.status, CheckStatus::Fail);
            assert!(c.witness.as_deref().is_some_and(|w| !w.is_empty()), "{} failed without witness", c.name);
        }
        eprintln!("{report}");
    }
}

#[test]
fn report_round_trips_through_json() {
    let report = run_verify(&config("A1")).unwrap();
    let text = serde_json::to_string(&report).unwrap();
    let back = serde_json::from_str(&text).unwrap();
    assert_eq!(report, back);
}
