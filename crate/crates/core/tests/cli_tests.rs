use std::process::Command;

use serde_json::Value;

fn cmc(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_cmc")).args(args).output().expect("binary runs");
    (out.status.code().unwrap(), String::from_utf8(out.stdout).unwrap(), String::from_utf8(out.stderr).unwrap())
}

fn json(args: &[&str]) -> (i32, Value) {
    let mut all = args.to_vec();
    all.push("--json");
    let (code, stdout, _) = cmc(&all);
    (code, serde_json::from_str(&stdout).expect("valid JSON"))
}

#[test]
fn check_sphere_prints_certificate() {
    let (code, out, _) = cmc(&["check", "--vars", "3", "--hsq", "1", "x1^2+x2^2+x3^2-1"]);
    assert_eq!(code, 0);
    assert!(out.contains("verdict: divisible"));
    assert!(out.contains("certificate: 1024*x1^4 + 2048*x1^2*x2^2"));
}

#[test]
fn check_solve_reports_no_admissible_value() {
    let (code, out, _) = cmc(&["check", "--vars", "3", "--hsq", "solve", "x1^3+x2^2+x3"]);
    assert_eq!(code, 1);
    assert!(out.contains("no admissible H^2"));
}

#[test]
fn check_solve_finds_sphere_curvature() {
    let (code, doc) = json(&["check", "--hsq", "solve", "x1^2+x2^2+x3^2-4"]);
    assert_eq!(code, 0);
    assert_eq!(doc["result"]["hsq"], "1/4");
    assert_eq!(doc["result"]["divisible"], true);
}

#[test]
fn input_errors_exit_two() {
    for args in [
        &["check", "--vars", "3", "--hsq", "0", "x1"][..],
        &["check", "--vars", "3", "--hsq", "-2", "x1"],
        &["check", "--vars", "3", "--hsq", "1", "x1 + + x2"],
        &["check", "--vars", "3", "--hsq", "1", "7"],
        &["check", "--hsq", "1"],
        &["replay", "--n", "2"],
        &["decompose", "x1^"],
        &["surface", "--kind", "torus", "--n", "3"],
        &["sweep", "--n", "3", "--bound", "0"],
        &["nonsense"],
    ] {
        let (code, out, err) = cmc(args);
        assert_eq!(code, 2, "{args:?}");
        assert!(out.is_empty() && !err.is_empty(), "{args:?}");
    }
}

#[test]
fn parse_errors_carry_a_position() {
    let (_, _, err) = cmc(&["check", "--vars", "3", "--hsq", "1", "x1 + x4"]);
    assert!(err.contains("1:6"), "{err}");
}

#[test]
fn replay_three_passes() {
    let (code, out, _) = cmc(&["replay", "--n", "3"]);
    assert_eq!(code, 0);
    assert_eq!(out.lines().filter(|l| l.starts_with('[') && l.contains(" pass ")).count(), 9);
    assert!(out.ends_with("overall: pass\n"));
}

#[test]
fn replay_json_lists_steps() {
    let (code, doc) = json(&["replay", "--n", "3"]);
    assert_eq!(code, 0);
    assert_eq!(doc["schema_version"], "1");
    assert_eq!(doc["command"], "replay");
    assert_eq!(doc["inputs"]["n"], 3);
    let steps = doc["result"]["steps"].as_array().unwrap();
    assert_eq!(steps.len(), 9);
    assert_eq!(steps[5]["witness"], "729*x1^9*Ht^2");
    assert!(steps.iter().all(|s| s["status"] == "pass"));
}

#[test]
fn misc_commands() {
    let (code, out, _) = cmc(&["decompose", "--vars", "3", "x1^3+x1*x2+x2"]);
    assert_eq!((code, out.as_str()), (0, "degree 3: x1^3\ndegree 2: x1*x2\ndegree 1: x2\n"));
    let (code, out, _) = cmc(&["cube-test", "x1^3+6*x1^2*x2+12*x1*x2^2+8*x2^3"]);
    assert_eq!((code, out.as_str()), (0, "x1 + 2*x2\n"));
    let (code, out, _) = cmc(&["defect", "--hsq", "1", "x1^2+x2^2-1"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("256*x1^6 + 768*x1^4*x2^2"), "{out}");
    let (code, doc) = json(&["surface", "--kind", "sphere", "--n", "3", "--rsq", "4"]);
    assert_eq!(code, 0);
    assert_eq!(doc["result"]["expected_hsq"], "1/4");
    assert_eq!(
        doc["result"]["expected_certificate"],
        "256*x1^4 + 512*x1^2*x2^2 + 256*x2^4 + 512*x1^2*x3^2 + 512*x2^2*x3^2 + 256*x3^4"
    );
}

#[test]
fn sweep_matches_expectation() {
    let (code, out, _) = cmc(&["sweep", "--n", "3", "--count", "200", "--bound", "5", "--seed", "42"]);
    assert_eq!((code, out.as_str()), (0, "0 admissible of 200\n"));
    let (code, doc) = json(&["sweep", "--n", "3", "--count", "10", "--seed", "1", "--control"]);
    assert_eq!(code, 0);
    assert_eq!(doc["result"]["admissible"], 10);
    assert_eq!(doc["result"]["candidates"].as_array().unwrap().len(), 10);
}

#[test]
fn json_is_byte_deterministic() {
    for args in [
        &["sweep", "--n", "3", "--count", "30", "--seed", "9", "--control", "--json"][..],
        &["check", "--hsq", "solve", "x1^2+x2^2+x3^2-1", "--json"],
        &["replay", "--n", "3", "--json"],
    ] {
        assert_eq!(cmc(args).1, cmc(args).1, "{args:?}");
    }
}

#[test]
fn human_output_is_capped_unless_full() {
    let poly = "x1^3+x2^3+x3^3+x1*x2*x3+x1+x2+x3+1";
    let (_, capped, _) = cmc(&["defect", "--vars", "3", "--hsq", "1", poly]);
    assert!(capped.contains("more terms)"), "{capped}");
    let (_, full, _) = cmc(&["defect", "--vars", "3", "--hsq", "1", "--full", poly]);
    assert!(!full.contains("more terms)"));
    assert!(full.len() > capped.len());
}

#[test]
fn leading_minus_is_a_polynomial_not_a_flag() {
    let (code, out, _) = cmc(&["check", "--hsq", "1", "-x1^2-x2^2-x3^2+1"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("input: -x1^2 - x2^2 - x3^2 + 1\n"));
    let (code, out, _) = cmc(&["decompose", "-(x1-x2)"]);
    assert_eq!((code, out.as_str()), (0, "degree 1: -x1 + x2\n"));
}
