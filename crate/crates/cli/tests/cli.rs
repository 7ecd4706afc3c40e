use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output};

use gbchar::parse::parse_polynomial;
use gbchar::{PolyRing, VariableOrder};
use serde_json::Value;

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures").join(format!("{name}.sys"))
}

fn gbchar(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gbchar")).args(args).output().expect("binary runs")
}

fn run_fixture(args: &[&str], name: &str) -> Output {
    let path = fixture(name);
    let mut full: Vec<&str> = args.to_vec();
    full.push(path.to_str().unwrap());
    gbchar(&full)
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).expect("valid JSON")
}

fn displays(v: &Value) -> Vec<String> {
    v.as_array().unwrap().iter().map(|p| p["display"].as_str().unwrap().to_string()).collect()
}

fn temp_system(text: &str) -> tempfile::NamedTempFile {
    let mut f = tempfile::Builder::new().suffix(".sys").tempfile().unwrap();
    f.write_all(text.as_bytes()).unwrap();
    f
}

#[test]
fn classify_example_c() {
    let o = run_fixture(&["classify"], "c");
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "abnormal, irregular; k=1, case (c)\n");
}

#[test]
fn ritt_example_a_json() {
    let o = run_fixture(&["--json", "ritt"], "a");
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["tag"], "regular_star");
    assert_eq!(displays(&v["charset"]), ["x1*x2 - 1", "x1*x3 - 1"]);
}

#[test]
fn missing_file_is_a_usage_error() {
    let o = gbchar(&["gb", "nonexistent.sys"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(o.stdout.is_empty());
    assert!(!o.stderr.is_empty());
}

#[test]
fn unknown_variable_is_a_parse_error() {
    let f = temp_system("vars: x1 < x2\npolys:\nx1*y\n");
    let o = gbchar(&["gb", f.path().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    let err = String::from_utf8(o.stderr).unwrap();
    assert!(err.contains("`y`"), "{err}");
}

#[test]
fn bad_arguments_exit_two() {
    assert_eq!(gbchar(&[]).status.code(), Some(2));
    assert_eq!(run_fixture(&["--field", "zz", "gb"], "a").status.code(), Some(2));
    assert_eq!(run_fixture(&["--field", "fp:10", "gb"], "a").status.code(), Some(2));
}

#[test]
fn crlf_input_is_accepted() {
    let f = temp_system("vars: x1 < x2 < x3\r\npolys:\r\nx1*x2 - 1\r\nx3 - x2\r\n");
    let o = gbchar(&["gb", f.path().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "x1*x2 - 1\nx3 - x2\n");
}

#[test]
fn gb_example_d_over_both_fields() {
    let q = run_fixture(&["gb"], "d");
    let fp = run_fixture(&["--field", "fp:32003", "gb"], "d");
    assert_eq!(q.status.code(), Some(0));
    assert_eq!(fp.status.code(), Some(0));
    assert_eq!(stdout(&q), "x1^4\nx1^3*x2^3\nx2^4\nx1*x2*x3 + x1^2*x3 - x1^3\n");
    assert_eq!(stdout(&fp), "x1^4\nx1^3*x2^3\nx2^4\nx1*x2*x3 + x1^2*x3 + 32002*x1^3\n");
}

#[test]
fn output_is_deterministic() {
    for args in [&["--json", "decompose"][..], &["--json", "--certificates", "ritt"], &["verify"]] {
        let a = run_fixture(args, "c");
        let b = run_fixture(args, "c");
        assert_eq!(a.stdout, b.stdout);
    }
}

#[test]
fn json_polynomials_round_trip() {
    let o = run_fixture(&["--json", "--certificates", "gb"], "e");
    let v = json(&o);
    let names: Vec<&str> = v["order"].as_str().unwrap().split(" < ").collect();
    let ring = PolyRing::new(VariableOrder::new(&names).unwrap(), ());
    for p in v["basis"].as_array().unwrap() {
        let parsed = parse_polynomial(&ring, p["display"].as_str().unwrap()).unwrap();
        let terms = p["terms"].as_array().unwrap();
        assert_eq!(parsed.terms().len(), terms.len());
        for (t, j) in parsed.terms().iter().zip(terms) {
            let (num, den) = gbchar::Field::to_ratio(&t.coeff);
            assert_eq!(j[0].as_str().unwrap(), num.to_string());
            assert_eq!(j[1].as_str().unwrap(), den.to_string());
            let exps: Vec<u32> = j[2].as_array().unwrap().iter().map(|e| e.as_u64().unwrap() as u32).collect();
            assert_eq!(exps, t.mono.exponents());
        }
    }
    assert_eq!(v["generator_traces"].as_array().unwrap().len(), 3);
}

#[test]
fn decompose_example_c_tree() {
    let o = run_fixture(&["--json", "--certificates", "decompose"], "c");
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["leaves"].as_array().unwrap().len(), 3);
    assert_eq!(v["verification"]["passed"], true);
    let first = &v["splits"][0];
    assert_eq!(first["parent"], 0);
    assert_eq!(first["adjoined"].as_array().unwrap().len(), 2);
}

#[test]
fn verify_passes_on_fixtures() {
    for name in ["a", "b", "c", "d", "d-bar", "e", "e-bar"] {
        let o = run_fixture(&["verify"], name);
        assert_eq!(o.status.code(), Some(0), "{name}: {}", stdout(&o));
        assert!(stdout(&o).contains("decomposition: passed"));
    }
}

#[test]
fn strong_decomposition_of_example_a() {
    let o = run_fixture(&["decompose", "--strong"], "a");
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("strong_leaf"));
}

#[test]
fn classify_json_carries_witnesses() {
    let v = json(&run_fixture(&["--json", "--certificates", "classify"], "c"));
    assert_eq!(v["classification"]["is_regular"], false);
    assert_eq!(v["irregularity"]["k"], 1);
    assert_eq!(v["irregularity"]["case"], "(c)");
    assert!(v["classification"]["regular_witness"]["certificate"].is_object());
}
