use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn data(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/data").join(name).display().to_string()
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_weylzeta"))
        .args(args)
        .env_remove("WEYLZETA_MAX_ELEMENTS")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json_of(args: &[&str]) -> (Value, i32) {
    let mut full = args.to_vec();
    full.extend(["--format", "json"]);
    let o = run(&full);
    (serde_json::from_slice(&o.stdout).unwrap_or_else(|e| panic!("{args:?}: {e}")), o.status.code().unwrap())
}

fn schema(name: &str) -> jsonschema::Validator {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("schemas").join(format!("{name}.schema.json"));
    let s: Value = serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap();
    jsonschema::validator_for(&s).unwrap()
}

fn assert_valid(name: &str, v: &Value) {
    let validator = schema(name);
    let errors: Vec<String> = validator.iter_errors(v).map(|e| format!("{} at {}", e, e.instance_path())).collect();
    assert!(errors.is_empty(), "{name}: {errors:#?}");
}

#[test]
fn alt_prints_the_closed_form() {
    for (tag, expected) in [("A2t", "(1-u^3)^2"), ("C2t", "(1-u^4)(1-u^3)"), ("G2t", "(1-u^5)(1-u^3)")] {
        let o = run(&["alt", "--type", tag]);
        assert!(o.status.success());
        assert!(stdout(&o).contains(&format!("Alt(W)(u)^-1 = {expected}\n")), "{tag}: {}", stdout(&o));
    }
}

#[test]
fn macdonald_table_e8_row() {
    let o = run(&["macdonald-table", "--type", "E8"]);
    assert!(o.status.success());
    let out = stdout(&o);
    assert_eq!(out.lines().nth(1), Some("E8,8,30,9,11,13,14,17,19,23,29"));
    assert!(out.contains("9,11,13,14,17,19,23,29"));
}

#[test]
fn macdonald_table_matches_golden_csv() {
    let golden = include_str!("../../core/tests/data/macdonald_table.csv");
    let o = run(&["macdonald-table"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), golden);
}

#[test]
fn ihara_k4_formula_passes() {
    let o = run(&["ihara", "--graph", &data("k4.txt"), "--q", "2"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("formula (q = 2)"));
    let (v, code) = json_of(&["ihara", "--graph", &data("k4.txt"), "--q", "2"]);
    assert_eq!(code, 0);
    assert_eq!(v["formula"]["pass"], Value::Bool(true));
}

#[test]
fn ihara_irregular_graph_skips_formula() {
    let (v, code) = json_of(&["ihara", "--graph", &data("bowtie.txt"), "--trunc", "9"]);
    assert_eq!(code, 0);
    assert!(v["formula"].is_null());
    assert_eq!(v["geodesic_oracle"]["pass"], Value::Bool(true));
    // asking for a formula on an irregular graph is an input error
    assert_eq!(run(&["ihara", "--graph", &data("bowtie.txt"), "--q", "2"]).status.code(), Some(2));
}

#[test]
fn every_json_output_validates() {
    let k4 = data("k4.txt");
    let petersen = data("petersen.txt");
    let rep = data("a2t_reflection.json");
    let cases: Vec<(&str, Vec<&str>)> = vec![
        ("poincare", vec!["poincare", "--type", "G2t", "--trunc", "12"]),
        ("poincare", vec!["poincare", "--type", "B3"]),
        ("alt", vec!["alt", "--type", "A2t"]),
        ("alt", vec!["alt", "--type", "G2"]),
        ("factorize", vec!["factorize", "--type", "C2t", "--trunc", "12"]),
        ("corollary1", vec!["corollary1", "--type", "G2t", "--trunc", "8"]),
        ("corollary1", vec!["corollary1", "--type", "A2t", "--trunc", "6", "--rep", &rep, "--q", "1/2"]),
        ("macdonald-table", vec!["macdonald-table", "--type", "F4"]),
        ("ihara", vec!["ihara", "--graph", &k4, "--trunc", "8"]),
        ("ihara", vec!["ihara", "--graph", &petersen, "--trunc", "6"]),
        ("torus", vec!["torus", "--type", "C2t", "--trunc", "8"]),
    ];
    for (name, args) in cases {
        let (v, code) = json_of(&args);
        assert_eq!(code, 0, "{args:?}");
        assert_valid(name, &v);
        assert_eq!(v["pass"], Value::Bool(true), "{args:?}");
    }
}

#[test]
fn subcommands_are_deterministic() {
    let k4 = data("k4.txt");
    for args in [
        vec!["poincare", "--type", "A2t", "--format", "json"],
        vec!["factorize", "--type", "G2t", "--trunc", "12", "--format", "json"],
        vec!["corollary1", "--type", "C2t", "--trunc", "6", "--format", "json"],
        vec!["ihara", "--graph", &k4, "--format", "json"],
        vec!["torus", "--type", "A2t", "--scale", "3", "--trunc", "8", "--format", "json"],
        vec!["macdonald-table"],
    ] {
        let a = run(&args);
        let b = run(&args);
        assert!(a.status.success(), "{args:?}");
        assert_eq!(a.stdout, b.stdout, "{args:?}");
    }
}

#[test]
fn small_truncations_still_contain_the_parabolics() {
    for args in [["factorize", "--type", "G2t", "--trunc", "2"], ["corollary1", "--type", "C2t", "--trunc", "1"]] {
        assert_eq!(run(&args).status.code(), Some(0), "{args:?}");
    }
}

#[test]
fn out_writes_to_a_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("table.csv");
    let o = run(&["macdonald-table", "--type", "G2", "--out", path.to_str().unwrap()]);
    assert!(o.status.success());
    assert!(o.stdout.is_empty());
    assert_eq!(std::fs::read_to_string(path).unwrap(), "type,rank,h,d_1,d_2\nG2,2,6,3,5\n");
}

#[test]
fn rank_completes_a_family_letter() {
    let o = run(&["macdonald-table", "--type", "D", "--rank", "5"]);
    assert_eq!(stdout(&o).lines().nth(1), Some("D5,5,8,6,7,8,8,8"));
}

#[test]
fn bad_representation_reports_the_violated_relation() {
    let o = run(&["corollary1", "--type", "A2t", "--rep", &data("a2t_bad.json"), "--format", "json"]);
    assert_eq!(o.status.code(), Some(2));
    let v: Value = serde_json::from_slice(&o.stderr).unwrap();
    assert_valid("error", &v);
    assert_eq!(v["error"], "representation");
    assert_eq!(v["violation"]["relation"], "quadratic");
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(run(&["alt", "--type", "X9"]).status.code(), Some(2));
    assert_eq!(run(&["alt"]).status.code(), Some(2));
    assert_eq!(run(&["factorize", "--type", "A3t"]).status.code(), Some(2));
    assert_eq!(run(&["alt", "--type", "A2t", "--format", "csv"]).status.code(), Some(2));
    assert_eq!(run(&["corollary1", "--type", "A2t", "--q", "x"]).status.code(), Some(2));
    let o = run(&["ihara", "--graph", "/nonexistent/graph.txt", "--format", "json"]);
    assert_eq!(o.status.code(), Some(2));
    assert_valid("error", &serde_json::from_slice(&o.stderr).unwrap());
}

#[test]
fn element_cap_is_honoured() {
    let o = Command::new(env!("CARGO_BIN_EXE_weylzeta"))
        .args(["factorize", "--type", "A2t", "--trunc", "20"])
        .env("WEYLZETA_MAX_ELEMENTS", "50")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("element limit of 50"));

    // the cap turns optional enumeration checks into skips
    let o = Command::new(env!("CARGO_BIN_EXE_weylzeta"))
        .args(["alt", "--type", "A3t", "--format", "json"])
        .env("WEYLZETA_MAX_ELEMENTS", "10")
        .output()
        .unwrap();
    assert!(o.status.success());
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert!(v["checks"]["enumeration"].is_null());
}
