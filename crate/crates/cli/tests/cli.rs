use std::process::{Command, Output};

use blockcalc::verify::VerifyReport;

fn blockcalc(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_blockcalc")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).expect("utf-8 output")
}

#[test]
fn kl_csv_has_header_and_identity_row() {
    let o = blockcalc(&["kl", "-t", "A2", "--format", "csv"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("x_word,y_word,polynomial"));
    assert_eq!(lines.next(), Some("e,e,1"));
    // 19 comparable pairs x <= y in S3 plus the header.
    assert_eq!(text.lines().count(), 20);
}

#[test]
fn verify_json_round_trips() {
    let o = blockcalc(&["verify", "-t", "A2", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let report: VerifyReport = serde_json::from_str(&stdout(&o)).expect("report parses");
    assert!(report.pass);
    assert!(report.checks.iter().all(|c| c.witness.is_none()));
    assert_eq!(format!("{:?}", report.conventions.survivor_rule), "LongestInCoset");
}

#[test]
fn tampered_verify_exits_one_with_a_witness() {
    let o = blockcalc(&["verify", "-t", "A1", "--tamper", "transposed-reciprocity"]);
    assert_eq!(o.status.code(), Some(1));
    let text = stdout(&o);
    assert!(text.lines().any(|l| l.starts_with("FAIL")), "{text}");
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["block", "-t", "A2", "--lambda", "0,x"][..],
        &["verify", "-t", "A2", "--tamper", "nonsense"],
        &["soergel", "-t", "A2", "--word", "1.3"],
    ] {
        let o = blockcalc(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}: {}", String::from_utf8_lossy(&o.stderr));
        assert!(!o.stderr.is_empty());
    }
}

#[test]
fn unsupported_requests_exit_three() {
    for args in [&["verify", "-t", "A4"][..], &["kl", "-t", "Z9"], &["block", "-t", "A2", "--lambda", "-1,0", "--show", "tilting"]] {
        let o = blockcalc(args);
        assert_eq!(o.status.code(), Some(3), "{args:?}: {}", String::from_utf8_lossy(&o.stderr));
    }
}

#[test]
fn soergel_split_matches_prediction() {
    let o = blockcalc(&["soergel", "-t", "A2", "--word", "1.2.1", "--show", "split"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("K-group prediction: 6 2"), "{text}");
}

#[test]
fn projective_matrix_is_unitriangular() {
    let o = blockcalc(&["block", "-t", "B2", "--show", "projective-matrix", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let m: Vec<Vec<i64>> = serde_json::from_value(v["matrix"].clone()).unwrap();
    assert_eq!(m.len(), 8);
    for (i, row) in m.iter().enumerate() {
        assert_eq!(row[i], 1);
        assert!(row[..i].iter().all(|&c| c == 0), "row {i} = {row:?}");
    }
    // The antidominant projective contains every Verma once.
    assert!(m.iter().all(|row| row[7] == 1));
}
