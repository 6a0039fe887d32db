//! End-to-end tests of the binary: exit codes, fixture behavior, and the
//! machine-readable output format.

use std::path::PathBuf;
use std::process::{Command, Output};

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../fixtures")
        .join(name)
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lefwedge"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_of(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

#[test]
fn validate_accepts_the_swap_fixture() {
    let out = run(&["validate", fixture("ex1.json").to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout_of(&out);
    assert!(text.contains("permutative"));
    assert!(text.contains("cyclic"));
    assert!(text.contains("squared by blocks"));
}

#[test]
fn validate_rejects_obstructed_candidates_with_exit_3() {
    for name in ["ex3.json", "ex4_a1.json"] {
        let out = run(&["validate", fixture(name).to_str().unwrap()]);
        assert_eq!(out.status.code(), Some(3), "{name}");
        assert!(stdout_of(&out).contains("nonvanishing wedge"), "{name}");
    }
}

#[test]
fn validate_accepts_the_non_permutative_pass_fixture() {
    let out = run(&["validate", fixture("ex5.json").to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout_of(&out).contains("not permutative"));
    assert!(stdout_of(&out).contains("obstruction: pass"));
}

#[test]
fn validate_flags_structural_errors_with_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.json");
    std::fs::write(
        &path,
        r#"{
            "format": "wedge-map/1",
            "spaces": [{"kind": "torus", "dim": 2}, {"kind": "torus", "dim": 2}],
            "coordinates": [{"from": 1, "to": 2, "h1": [[1, 0, 0], [0, 1, 0], [0, 0, 1]]}]
        }"#,
    )
    .unwrap();
    let out = run(&["validate", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn unreadable_and_unparseable_inputs_exit_1() {
    let out = run(&["validate", "/nonexistent/nope.json"]);
    assert_eq!(out.status.code(), Some(1));
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("junk.json");
    std::fs::write(&path, "{ not json").unwrap();
    let out = run(&["validate", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn invalid_flags_exit_1() {
    let out = run(&["scan-gc", "--n", "3"]);
    assert_eq!(out.status.code(), Some(1));
    let out = run(&["no-such-command"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn invariants_tables_match_published_values() {
    let out = run(&[
        "invariants",
        fixture("ex1.json").to_str().unwrap(),
        "--all",
        "12",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout_of(&out);
    assert!(text.contains("1 7 1 -1 1 7 1 -1 1 7 1 -1"));
    assert!(text.contains("1 6 0 -8 0 0 0 0 0 0 0 0"));
    assert!(text.contains("(1 + 2t^2 + t^4) / (1 - t - t^2 + t^3)"));
    assert!(text.contains("APer up to 12: {1, 2, 4}"));
}

#[test]
fn invariants_all_constant_map() {
    let out = run(&[
        "invariants",
        fixture("all_constant.json").to_str().unwrap(),
        "--all",
        "4",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout_of(&out);
    assert!(text.contains("1 1 1 1"));
    assert!(text.contains("1 0 0 0"));
    assert!(text.contains("zeta: (1) / (1 - t)"));
}

#[test]
fn invariants_refuses_obstructed_input_with_exit_3() {
    let out = run(&[
        "invariants",
        fixture("ex3.json").to_str().unwrap(),
        "--zeta",
    ]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn json_output_round_trips_exact_integers() {
    let out = run(&[
        "invariants",
        fixture("ex5.json").to_str().unwrap(),
        "--all",
        "8",
        "--json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let value: serde_json::Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    assert_eq!(value["format"], "wedge-result/1");
    let lefschetz: Vec<String> = value["lefschetz"]
        .as_array()
        .unwrap()
        .iter()
        .map(|v| v.as_str().unwrap().to_string())
        .collect();
    assert_eq!(lefschetz, vec!["2", "4", "2", "0", "2", "4", "2", "0"]);
    assert_eq!(value["dold"][3], "-4");
    assert_eq!(value["zeta"]["numerator"][2], "1");
    assert_eq!(value["aper"]["members"], serde_json::json!([1, 2, 4]));
    assert_eq!(value["obstruction"]["verdict"], "pass");
    let induced = value["obstruction"]["induced"]["2"].as_array().unwrap();
    assert_eq!(induced[0][0], "1");
    assert_eq!(induced[0][1], "-1");
    assert!(value["input_digest"]
        .as_str()
        .unwrap()
        .starts_with("sha256:"));
    assert!(!value["warnings"].as_array().unwrap().is_empty());
    // big integers survive the string encoding exactly
    let big_doc = {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("big.json");
        std::fs::write(
            &path,
            r#"{
                "format": "wedge-map/1",
                "spaces": [{"kind": "torus", "dim": 1}],
                "coordinates": [{"from": 1, "to": 1, "h1": [["123456789012345678901234567890"]]}]
            }"#,
        )
        .unwrap();
        run(&["invariants", path.to_str().unwrap(), "--lefschetz", "2", "--json"])
    };
    assert_eq!(big_doc.status.code(), Some(0));
    let value: serde_json::Value = serde_json::from_str(&stdout_of(&big_doc)).unwrap();
    // L(g) = 1 - c for the circle map of degree c
    assert_eq!(
        value["lefschetz"][0],
        "-123456789012345678901234567889"
    );
}

#[test]
fn scan_gc_reports_signs_and_certified_periods() {
    let out = run(&[
        "scan-gc", "--n", "3", "--c", "3", "--s", "1", "--max", "30", "--json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let value: serde_json::Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    assert_eq!(value["preconditions_ok"], true);
    assert_eq!(value["single_all_negative"], true);
    let dold: Vec<String> = value["wedge_dold"]
        .as_array()
        .unwrap()
        .iter()
        .map(|v| v.as_str().unwrap().to_string())
        .collect();
    assert_eq!(dold.len(), 30);
    assert!(dold.iter().all(|v| v.starts_with('-')));
    assert_eq!(value["certified_periods"].as_array().unwrap().len(), 30);

    // degraded preconditions still produce a report, without assertions
    let out = run(&["scan-gc", "--n", "4", "--c", "3", "--max", "20"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout_of(&out).contains("not an odd prime"));
}

#[test]
fn declared_permutation_mismatch_is_structural() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("perm.json");
    std::fs::write(
        &path,
        r#"{
            "format": "wedge-map/1",
            "spaces": [{"kind": "torus", "dim": 1}, {"kind": "torus", "dim": 1}],
            "coordinates": [{"from": 1, "to": 2, "h1": [[1]]}],
            "permutation": [1, 2]
        }"#,
    )
    .unwrap();
    let out = run(&["validate", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn generic_spaces_compute_without_obstruction() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("generic.json");
    // a genus-2-surface-like signature (1, 4, 1) with a graded self-map
    std::fs::write(
        &path,
        r#"{
            "format": "wedge-map/1",
            "spaces": [{"kind": "generic", "betti": [1, 4, 1]}],
            "coordinates": [{
                "from": 1, "to": 1,
                "graded": {
                    "1": [[0,1,0,0],[-1,0,0,0],[0,0,0,1],[0,0,-1,0]],
                    "2": [[1]]
                }
            }]
        }"#,
    )
    .unwrap();
    let out = run(&["invariants", path.to_str().unwrap(), "--all", "8"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout_of(&out);
    // L(f^m) = 1 - tr(M1^m) + tr(M2^m); M1^2 = -I so pattern (2,6,2,-2)
    assert!(text.contains("2 6 2 -2 2 6 2 -2"), "got: {text}");
}
