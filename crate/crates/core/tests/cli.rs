use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;

const BIN: &str = env!("CARGO_BIN_EXE_pencil5");

fn manifest_dir() -> &'static Path {
    Path::new(env!("CARGO_MANIFEST_DIR"))
}

fn run(args: &[&str]) -> Output {
    Command::new(BIN).args(args).env_remove("PENCIL5_BUDGET").output().expect("binary runs")
}

fn stdout_json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| {
        panic!("stdout is not JSON ({e}): {}", String::from_utf8_lossy(&out.stdout));
    })
}

fn load(name: &str) -> Value {
    let text = std::fs::read_to_string(manifest_dir().join("docs").join(name)).unwrap();
    serde_json::from_str(&text).unwrap()
}

/// Validator for one of the published schemas, with the others registered
/// so cross-file references resolve offline.
fn validator(name: &str) -> jsonschema::Validator {
    let files = ["model.schema.json", "fibre-report.schema.json", "slope-report.schema.json"];
    let resources: Vec<(String, Value)> = files
        .iter()
        .map(|f| {
            let v = load(f);
            (v["$id"].as_str().unwrap().to_string(), v)
        })
        .collect();
    let registry = resources
        .iter()
        .try_fold(jsonschema::Registry::new(), |r, (uri, v)| r.add(uri, v.clone()))
        .unwrap()
        .prepare()
        .unwrap();
    let schema = load(name);
    // the validator keeps no borrow of the registry once built
    let registry: &'static jsonschema::Registry<'static> = Box::leak(Box::new(registry));
    jsonschema::options().with_registry(registry).build(&schema).unwrap()
}

fn assert_valid(schema: &str, v: &Value) {
    let val = validator(schema);
    let errors: Vec<String> = val.iter_errors(v).map(|e| e.to_string()).collect();
    assert!(errors.is_empty(), "{schema}: {errors:?}");
}

fn golden(name: &str) -> PathBuf {
    manifest_dir().join("tests").join("golden").join(name)
}

#[test]
fn construct_example1_matches_golden() {
    let out = run(&["construct", "--family", "example1", "--seed", "7"]);
    assert_eq!(out.status.code(), Some(0));
    let expected = std::fs::read(golden("example1_seed7_model.json")).unwrap();
    assert_eq!(String::from_utf8(out.stdout.clone()).unwrap(), String::from_utf8(expected).unwrap());
    let v = stdout_json(&out);
    assert_eq!(v["generators"].as_array().unwrap().len(), 5);
    assert_valid("model.schema.json", &v);
}

#[test]
fn verify_example1_matches_golden() {
    let out = run(&["verify", "--family", "example1", "--seed", "7"]);
    assert_eq!(out.status.code(), Some(0));
    let expected = std::fs::read(golden("example1_seed7_verify.json")).unwrap();
    assert_eq!(String::from_utf8(out.stdout.clone()).unwrap(), String::from_utf8(expected).unwrap());
    let v = stdout_json(&out);
    assert_eq!(v["verdict"], true);
    assert_eq!(v["equation"], "41 = 4*10 + 1");
    assert_valid("slope-report.schema.json", &v);
}

#[test]
fn verify_in_a_prime_field_agrees_with_rational_mode() {
    let q = stdout_json(&run(&["verify", "--family", "example1", "--seed", "7"]));
    let out = run(&["verify", "--family", "example1", "--seed", "7", "--mode", "prime:31991"]);
    assert_eq!(out.status.code(), Some(0));
    let p = stdout_json(&out);
    for key in ["N", "torsion_length", "verdict", "equation", "discrepancy"] {
        assert_eq!(p[key], q[key], "{key}");
    }
    assert_eq!(p["invariants"]["hilbert_values"], q["invariants"]["hilbert_values"]);
    assert_valid("slope-report.schema.json", &p);
}

#[test]
fn construct_example2_is_tagged() {
    let out = run(&["construct", "--family", "example2", "--a", "1", "--seed", "7"]);
    assert_eq!(out.status.code(), Some(0));
    let v = stdout_json(&out);
    assert_eq!(v["family"]["name"], "example2");
    assert_eq!(v["family"]["a"], 1);
    assert_valid("model.schema.json", &v);
}

#[test]
fn model_file_round_trip() {
    let dir = std::env::temp_dir().join(format!("pencil5-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let model = dir.join("model.json");
    let out = run(&["construct", "--family", "example1", "--seed", "7", "--output", model.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let out = run(&["fibre", "--model", model.to_str().unwrap(), "--point", "1,0", "--mode", "prime:32003"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout_json(&out)["classification"], "Trigonal");
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn fibre_classifications() {
    let out = run(&["fibre", "--family", "example1", "--point", "1,0"]);
    assert_eq!(out.status.code(), Some(0));
    let v = stdout_json(&out);
    assert_eq!(v["classification"], "Trigonal");
    assert_eq!(v["coker_dim"], 2);
    assert_valid("fibre-report.schema.json", &v);

    let v = stdout_json(&run(&["fibre", "--family", "example1", "--point", "2,3"]));
    assert_eq!(v["classification"], "Nontrigonal");
    assert_valid("fibre-report.schema.json", &v);
}

#[test]
fn usage_errors_exit_with_2() {
    for args in [
        &["construct", "--family", "example3", "--d", "0"][..],
        &["fibre", "--family", "example1", "--point", "0,0"],
        &["fibre", "--family", "example1", "--point", "banana"],
        &["verify", "--family", "example1", "--mode", "prime:32004"],
        &["verify", "--family", "example1", "--window", "2"],
        &["frobnicate"],
        &[],
    ] {
        assert_eq!(run(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn budget_exhaustion_exits_with_3() {
    let out = Command::new(BIN)
        .args(["verify", "--family", "example1", "--mode", "prime:32003"])
        .env("PENCIL5_BUDGET", "3")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));
    let out = run(&["verify", "--family", "example1", "--mode", "prime:32003", "--budget", "3"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn unsupported_hypotheses_exit_with_1() {
    let out = run(&["verify", "--family", "example3", "--d", "1", "--mode", "prime:32003", "--no-smoothness"]);
    assert_eq!(out.status.code(), Some(1));
    let v = stdout_json(&out);
    assert_eq!(v["status"], "unsupported-by-hypotheses");
    assert_valid("slope-report.schema.json", &v);
}

#[test]
fn dual_prime_report_is_schema_valid() {
    let out = run(&["verify", "--family", "example2", "--a", "1", "--mode", "dual-prime", "--no-smoothness"]);
    let v = stdout_json(&out);
    assert_eq!(v["cross_check"]["agrees"], true);
    assert_eq!(out.status.code(), Some(if v["status"] == "verified" { 0 } else { 1 }));
    assert_valid("slope-report.schema.json", &v);
}

#[test]
fn explicit_window() {
    let out = run(&["verify", "--family", "example1", "--mode", "prime:32003", "--window", "2,3,4"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout_json(&out)["invariants"]["fit_window"], serde_json::json!([2, 3, 4]));
}
