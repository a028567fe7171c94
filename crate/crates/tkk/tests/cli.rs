use std::io::Write;
use std::process::{Command, Output};

fn tkk(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tkk")).args(args).output().expect("spawn tkk")
}

fn spec_file(text: &str) -> tempfile::NamedTempFile {
    let mut f = tempfile::Builder::new().suffix(".json").tempfile().unwrap();
    f.write_all(text.as_bytes()).unwrap();
    f
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn hc1_of_scalar_prints_zero() {
    let o = tkk(&["hc1", "--base", "scalar"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "0\n");
}

#[test]
fn sl_builder_spec_has_dim_3() {
    let f = spec_file(r#"{"construct": "sl", "n": 2, "base": {"construct": "scalar"}}"#);
    let o = tkk(&["check", "--base", f.path().to_str().unwrap(), "--format", "machine"]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["result"]["dim"], 3);
    assert_eq!(v["result"]["kind"], "lie");
}

#[test]
fn zero_denominator_rejected() {
    let f = spec_file(
        r#"{"name": "k", "kind": "associative", "basis": ["1"],
            "products": [{"i": 0, "j": 0, "terms": [{"k": 0, "c": "1/0"}]}]}"#,
    );
    let o = tkk(&["check", "--base", f.path().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    let err = String::from_utf8_lossy(&o.stderr);
    assert!(err.contains("products[0].terms[0].c"), "{err}");
}

#[test]
fn malformed_json_reports_position() {
    let f = spec_file("{\"name\": \"k\",\n \"kind\": }");
    let o = tkk(&["check", "--base", f.path().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 2"));
}

/// M2(k) written out as a table but tagged jordan.
const M2_AS_JORDAN: &str = r#"{"name": "m2raw", "kind": "jordan", "basis": ["e11", "e12", "e21", "e22"],
  "products": [
    {"i": 0, "j": 0, "terms": [{"k": 0, "c": "1"}]},
    {"i": 0, "j": 1, "terms": [{"k": 1, "c": "1"}]},
    {"i": 1, "j": 2, "terms": [{"k": 0, "c": "1"}]},
    {"i": 1, "j": 3, "terms": [{"k": 1, "c": "1"}]},
    {"i": 2, "j": 0, "terms": [{"k": 2, "c": "1"}]},
    {"i": 2, "j": 1, "terms": [{"k": 3, "c": "1"}]},
    {"i": 3, "j": 2, "terms": [{"k": 2, "c": "1"}]},
    {"i": 3, "j": 3, "terms": [{"k": 3, "c": "1"}]}
  ]}"#;

#[test]
fn jordan_tagged_matrix_table_rejected_with_witness() {
    let f = spec_file(M2_AS_JORDAN);
    let o = tkk(&["check", "--base", f.path().to_str().unwrap(), "--format", "machine"]);
    assert_eq!(o.status.code(), Some(1));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["passed"], false);
    let w = &v["result"]["checks"][0]["witness"];
    assert_ne!(w["left"], w["right"]);
    // The same table passes as associative.
    let o = tkk(&["check", "--base", f.path().to_str().unwrap(), "--kind", "associative"]);
    assert!(o.status.success());
}

#[test]
fn verify_scalar_machine_report() {
    let o = tkk(&["verify", "thm32", "--base", "scalar", "--format", "machine"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["schema_version"], 1);
    let r = &v["result"]["results"][0];
    assert_eq!((r["iso"].as_bool(), r["dim_uce"].as_u64(), r["dim_tkk"].as_u64()), (Some(true), Some(3), Some(3)));
}

#[test]
fn build_exports_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("plus.json");
    let o = tkk(&["build", "plus", "--base", "grassmann2", "--out", out.to_str().unwrap()]);
    assert!(o.status.success());
    let o = tkk(&["check", "--base", out.to_str().unwrap(), "--format", "machine"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["result"]["kind"], "jordan");
    assert_eq!(v["result"]["dim"], 4);
}

#[test]
fn build_tkk_export_has_graded_dims() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("k.json");
    let o = tkk(&["build", "tkk", "--base", "dual", "--out", out.to_str().unwrap()]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
    let dims: Vec<u64> = v["dims"].as_array().unwrap().iter().map(|d| d.as_u64().unwrap()).collect();
    assert_eq!((dims[0], dims[2]), (2, 2));
    // Total dimension agrees with uce(sl2(A)) from the exterior-square route.
    let h = tkk(&["h2", "--base", "dual", "--format", "machine"]);
    let h: serde_json::Value = serde_json::from_slice(&h.stdout).unwrap();
    assert_eq!(dims.iter().sum::<u64>(), h["result"]["dim_uce"].as_u64().unwrap());
    assert!(v["kernel_dim_over_standard"].is_u64());
}

#[test]
fn resource_guard_fails_cleanly() {
    let o = tkk(&["h2", "--base", "free2d2", "--n", "4", "--max-dim", "100"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("100"));
}

#[test]
fn triple_spec_checks() {
    let f = spec_file(
        r#"{"name": "t", "basis": ["a"], "gamma": [{"u": 0, "v": 0, "w": 0, "terms": [{"t": 0, "c": "2"}]}]}"#,
    );
    let o = tkk(&["check", "--base", f.path().to_str().unwrap()]);
    assert!(o.status.success(), "{}", stdout(&o));
}
