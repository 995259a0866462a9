use std::fs;
use std::path::PathBuf;

use lgmf::cli::{run, Output};
use serde_json::Value;

fn data(name: &str) -> String {
    let p: PathBuf = [env!("CARGO_MANIFEST_DIR"), "..", "..", "data", name].iter().collect();
    p.to_string_lossy().into_owned()
}

fn lgmf(args: &[&str]) -> Output {
    run(std::iter::once("lgmf").chain(args.iter().copied()))
}

fn machine(args: &[&str]) -> Value {
    let mut full = vec!["--format", "machine"];
    full.extend_from_slice(args);
    let out = lgmf(&full);
    assert_eq!(out.code, 0, "{}", out.stderr);
    serde_json::from_str(&out.stdout).unwrap()
}

const FACTORIZATIONS: [&str; 5] = ["A1.json", "A2_1.json", "A2_2.json", "uv.json", "vu.json"];

#[test]
fn shift_twice_is_byte_identical() {
    let dir = tempfile::tempdir().unwrap();
    for f in FACTORIZATIONS {
        let out = dir.path().join(f);
        let r = lgmf(&["shift", &data(f), "--twice", "--out", out.to_str().unwrap()]);
        assert_eq!(r.code, 0);
        assert_eq!(fs::read(out).unwrap(), fs::read(data(f)).unwrap(), "{f}");
    }
}

#[test]
fn round_trip_through_emitted_files() {
    let dir = tempfile::tempdir().unwrap();
    for f in FACTORIZATIONS {
        let once = dir.path().join("once.json");
        let twice = dir.path().join("twice.json");
        assert_eq!(lgmf(&["shift", &data(f), "--out", once.to_str().unwrap()]).code, 0);
        assert_eq!(lgmf(&["shift", once.to_str().unwrap(), "--out", twice.to_str().unwrap()]).code, 0);
        assert_eq!(fs::read_to_string(&twice).unwrap(), fs::read_to_string(data(f)).unwrap());
    }
}

#[test]
fn hom_on_odp() {
    let v = machine(&["hom", &data("A1.json"), &data("A1.json")]);
    assert_eq!(v["schema_version"], 1);
    assert_eq!(v["status"], "ok");
    assert_eq!(v["payload"]["h0"], 1);
    assert_eq!(v["payload"]["h1"], 1);

    let v = machine(&["hom", &data("uv.json"), &data("vu.json"), "--oracle"]);
    assert_eq!((v["payload"]["h0"].clone(), v["payload"]["h1"].clone()), (0.into(), 1.into()));
    assert_eq!(v["payload"]["oracle"]["h1"], 1);
}

#[test]
fn infinite_hom_is_reported() {
    let v = machine(&["hom", &data("uv.json"), &data("uv.json"), "--oracle"]);
    assert_eq!(v["payload"]["h0"], 1);
    let v = machine(&["cok", &data("uv.json")]);
    assert_eq!(v["payload"]["dimension"], "INFINITE");
    assert_eq!(v["payload"]["hilbert_slices"], serde_json::json!(vec![1; 11]));
}

#[test]
fn mirror_verbs() {
    let v = machine(&["mirror", "count", "--preset", "P2", "--param", "q=1"]);
    assert_eq!(v["payload"]["count"], 3);
    let v = machine(&["mirror", "count", &data("P2.json"), "--param", "q=1"]);
    assert_eq!(v["payload"]["count"], 3);
    let v = machine(&["mirror", "build", "--preset", "dP6"]);
    assert_eq!(v["payload"]["W"], "Y1 + Y2 + Y1*Y2 + q_r/Y1 + q_s/Y2 + q_t/(Y1*Y2)");
    let v = machine(&["mirror", "values", "--preset", "P1", "--param", "q=1"]);
    assert_eq!(v["payload"]["value_polynomial"], "w^2 - 4");
    assert_eq!(v["payload"]["rational_values"], serde_json::json!(["-2", "2"]));
    let v = machine(&["mirror", "fiber", "--preset", "P1", "--param", "q=1", "--at", "0"]);
    assert_eq!(v["payload"]["cardinality"], 2);
}

#[test]
fn morphism_and_complex_verbs() {
    let v = machine(&["nullhomotopic", &data("A1_x.json")]);
    assert_eq!(v["payload"]["null_homotopic"], true);
    let v = machine(&["equiv", &data("A2_map.json")]);
    assert_eq!(v["payload"]["homotopy_equivalence"], false);
    let v = machine(&["cone", &data("A2_map.json")]);
    assert_eq!(v["payload"]["rank"], 2);
    let v = machine(&["totalize", &data("A1_id_complex.json")]);
    assert_eq!(v["payload"]["rank"], 2);
}

#[test]
fn validation_error_goes_to_stderr() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    fs::write(&bad, r#"{"field":"Q","vars":["x","y"],"W":"x^2","e1":[["x"]],"e0":[["y"]]}"#).unwrap();
    let out = lgmf(&["--format", "machine", "validate", bad.to_str().unwrap()]);
    assert_eq!(out.code, 1);
    assert!(out.stdout.is_empty());
    let v: Value = serde_json::from_str(&out.stderr).unwrap();
    assert_eq!(v["status"], "error");
    assert_eq!(v["payload"]["code"], "VALIDATION_ERROR");
    assert!(!v["diagnostics"].as_array().unwrap().is_empty());
}

#[test]
fn parse_errors_carry_positions() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    fs::write(&bad, "{\"field\": \"Q\",\n \"vars\": [\"x\"] \"W\": 1}").unwrap();
    let out = lgmf(&["validate", bad.to_str().unwrap()]);
    assert_eq!(out.code, 1);
    assert!(out.stderr.contains("PARSE_ERROR") && out.stderr.contains("line 2"), "{}", out.stderr);

    fs::write(&bad, r#"{"field":"Q","vars":["x"],"W":"x^2","e1":[["x +"]],"e0":[["x"]]}"#).unwrap();
    let out = lgmf(&["validate", bad.to_str().unwrap()]);
    assert!(out.stderr.contains("e1[0][0]") && out.stderr.contains("column"), "{}", out.stderr);
}

#[test]
fn exit_codes() {
    assert_eq!(lgmf(&["frobnicate"]).code, 2);
    assert_eq!(lgmf(&["hom", &data("A1.json")]).code, 2);
    assert_eq!(lgmf(&["validate", "missing.json"]).code, 2);
    assert_eq!(lgmf(&["mirror", "count", "--preset", "P7"]).code, 2);
    assert_eq!(lgmf(&["mirror", "count", "--preset", "P2"]).code, 1);
    assert_eq!(lgmf(&["mirror", "fiber", "--preset", "P1", "--param", "q=1", "--at", "2"]).code, 1);
    assert_eq!(lgmf(&["hom", &data("A1.json"), &data("uv.json")]).code, 1);
    let out = lgmf(&["--field", "Fp:8", "validate", &data("A1.json")]);
    assert_eq!(out.code, 2);
    assert!(out.stdout.is_empty());
}

#[test]
fn field_override() {
    let v = machine(&["--field", "Fp:7", "hom", "An:3:2", "An:3:2"]);
    assert_eq!((v["payload"]["h0"].clone(), v["payload"]["h1"].clone()), (2.into(), 2.into()));
}

#[test]
fn output_is_deterministic() {
    let args = ["--format", "machine", "hom", "An:4:2", "An:4:3", "--basis"];
    assert_eq!(lgmf(&args), lgmf(&args));
    let args = ["mirror", "values", "--preset", "F1", "--param", "q_t=2", "--param", "q_s=3/5"];
    assert_eq!(lgmf(&args), lgmf(&args));
}
