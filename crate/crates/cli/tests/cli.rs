use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn coxring(args: &[&str], cache: Option<&Path>) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_coxring"));
    cmd.args(args).env_remove("COXRING_CACHE_DIR");
    if let Some(dir) = cache {
        cmd.env("COXRING_CACHE_DIR", dir);
    }
    cmd.output().expect("spawn coxring")
}

fn json(args: &[&str]) -> Value {
    let mut full = vec!["--format", "json"];
    full.extend_from_slice(args);
    let out = coxring(&full, None);
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn presentation_counts() {
    let v = json(&["presentation", "--type", "A2", "--ring", "P"]);
    let p = &v[0];
    assert_eq!(p["variables"].as_array().unwrap().len(), 4);
    assert_eq!(
        p["monomial_relations"],
        serde_json::json!(["x1*y1", "x2*y2"])
    );
    assert_eq!(p["linear_relations"].as_array().unwrap().len(), 2);
    assert_eq!(p["graded_dims"], serde_json::json!([1, 2, 1]));

    let v = json(&["presentation", "--type", "A1", "--ring", "WP"]);
    assert_eq!(v[0]["variables"].as_array().unwrap().len(), 2);
    assert_eq!(v[0]["graded_dims"], serde_json::json!([1, 1]));
}

#[test]
fn polynomials() {
    assert_eq!(
        json(&["eulerian", "--type", "B2"])[0]["coefficients"],
        serde_json::json!([1, 6, 1])
    );
    let inv = json(&[
        "poincare",
        "--type",
        "A3",
        "--ring",
        "invariants",
        "--cross-check",
    ]);
    assert_eq!(inv[0]["coefficients"], serde_json::json!([1, 3, 3, 1]));
    assert_eq!(
        inv[0]["fixed_subspace_coefficients"],
        serde_json::json!([1, 3, 3, 1])
    );
    assert_eq!(
        json(&["poincare", "--type", "A1", "--ring", "WP"])[0]["coefficients"],
        serde_json::json!([1, 1])
    );
    let h3 = json(&["poincare", "--type", "H3", "--ring", "WP"]);
    assert_eq!(h3[0]["mode"], "coxeter");
    assert_eq!(h3[0]["coefficients"], serde_json::json!([1, 59, 59, 1]));
}

#[test]
fn verify_both_modes() {
    let v = json(&["verify", "--type", "A2,B2", "--mode", "both"]);
    let items = v.as_array().unwrap();
    assert_eq!(items.len(), 4);
    assert!(items.iter().all(|r| r["verdict"] == "pass"), "{v}");
    let out = coxring(&["verify", "--type", "A2"], None);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stdout).contains("PASS"));
}

#[test]
fn catalog_lists_the_built_in_types() {
    let v = json(&["catalog"]);
    let find = |label: &str| {
        v.as_array()
            .unwrap()
            .iter()
            .find(|e| e["label"] == label)
            .cloned()
            .unwrap()
    };
    assert_eq!(find("H3")["crystallographic"], false);
    assert_eq!(find("H4")["group_order"], 14400);
    assert_eq!(find("I2(6)")["crystallographic"], true);
    assert_eq!(find("F4")["group_order"], 1152);
}

#[test]
fn group_dump_words() {
    let v = json(&["group-dump", "--type", "A2"]);
    assert_eq!(v[0]["order"], 6);
    let elements = v[0]["elements"].as_array().unwrap();
    assert_eq!(elements[0]["word"], "e");
    assert_eq!(v[0]["longest"], "s1s2s1");
    assert_eq!(elements.iter().filter(|e| e["length"] == 3).count(), 1);
}

#[test]
fn usage_errors_exit_with_two() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, r#"{"rank": 2, "m": [[1, 1], [1, 1]]}"#).unwrap();
    let out = coxring(&["verify", "--coxeter-matrix", bad.to_str().unwrap()], None);
    assert_eq!(out.status.code(), Some(2));
    for args in [
        &["verify", "--type", "H3", "--mode", "crystallographic"][..],
        &["verify", "--type", "H4"],
        &["eulerian", "--type", "Z9"],
        &["verify"],
    ] {
        assert_eq!(coxring(args, None).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn custom_coxeter_matrix() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("pentagon.json");
    std::fs::write(&file, r#"{"rank": 2, "m": [[1, 5], [5, 1]]}"#).unwrap();
    let out = coxring(
        &[
            "--format",
            "json",
            "eulerian",
            "--coxeter-matrix",
            file.to_str().unwrap(),
        ],
        None,
    );
    assert!(out.status.success());
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v[0]["label"], "pentagon");
    assert_eq!(v[0]["coefficients"], serde_json::json!([1, 8, 1]));
}

#[test]
fn output_is_deterministic_with_and_without_cache() {
    let args = [
        "--format",
        "json",
        "verify",
        "--type",
        "B3,H3",
        "--cross-check",
    ];
    let plain = coxring(&args, None);
    assert!(plain.status.success());
    assert_eq!(plain.stdout, coxring(&args, None).stdout);

    let dir = tempfile::tempdir().unwrap();
    let cold = coxring(&args, Some(dir.path()));
    let entries = std::fs::read_dir(dir.path()).unwrap().count();
    assert_eq!(entries, 2);
    let warm = coxring(&args, Some(dir.path()));
    assert_eq!(plain.stdout, cold.stdout);
    assert_eq!(plain.stdout, warm.stdout);

    // a corrupted entry is recomputed
    for e in std::fs::read_dir(dir.path()).unwrap() {
        std::fs::write(e.unwrap().path(), b"garbage").unwrap();
    }
    assert_eq!(plain.stdout, coxring(&args, Some(dir.path())).stdout);
}

#[test]
fn large_groups_use_the_pairing() {
    let wp = json(&["poincare", "--type", "H4", "--ring", "WP", "--allow-slow"]);
    assert_eq!(
        wp[0]["coefficients"],
        serde_json::json!([1, 2636, 9126, 2636, 1])
    );
    let v = json(&["verify", "--type", "H4", "--allow-slow"]);
    assert_eq!(v[0]["method"], "duality");
    assert_eq!(v[0]["verdict"], "pass");
    assert_eq!(v[0]["dims_invariants"], serde_json::json!([1, 4, 6, 4, 1]));
    assert_eq!(
        json(&["verify", "--type", "B3"])[0]["method"],
        "elimination"
    );
    let out = coxring(
        &[
            "poincare",
            "--type",
            "H4",
            "--ring",
            "invariants",
            "--allow-slow",
            "--cross-check",
        ],
        None,
    );
    assert_eq!(out.status.code(), Some(2));
}
