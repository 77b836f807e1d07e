use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn fixture(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures").join(name).to_string_lossy().into_owned()
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lunasmooth")).args(args).output().expect("spawn")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exit code")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn documents(text: &str) -> Vec<Value> {
    serde_json::Deserializer::from_str(text).into_iter::<Value>().map(|v| v.unwrap()).collect()
}

#[test]
fn validate() {
    let o = run(&["validate", &fixture("sl4_sp4_tensor.json")]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).starts_with("valid"));
    let o = run(&["validate", &fixture("non_primitive_root.json")]);
    assert_eq!(code(&o), 2);
    assert!(String::from_utf8_lossy(&o.stderr).contains("invalid"));
}

#[test]
fn unreadable_input_exits_1() {
    assert_eq!(code(&run(&["smooth", "/nonexistent/x.json"])), 1);
    let mut f = tempfile::NamedTempFile::new().unwrap();
    f.write_all(b"{ \"schema\": 1, ").unwrap();
    assert_eq!(code(&run(&["validate", f.path().to_str().unwrap()])), 1);
}

#[test]
fn smooth_exit_codes() {
    for (name, want) in [
        ("sl4_sp4_tensor.json", 0),
        ("sl5_sp4_tensor.json", 0),
        ("g2_vector.json", 0),
        ("sym2_c3.json", 0),
        ("toric_smooth.json", 0),
        ("toric_singular.json", 3),
    ] {
        let o = run(&["smooth", &fixture(name)]);
        assert_eq!(code(&o), want, "{name}");
        assert!(stdout(&o).starts_with(if want == 0 { "smooth: yes" } else { "smooth: no" }));
    }
    assert_eq!(code(&run(&["smooth", &fixture("non_primitive_root.json")])), 2);
}

#[test]
fn smooth_json_agrees_with_exit_code() {
    for name in ["sl4_sp4_tensor.json", "toric_singular.json", "toric_smooth.json"] {
        let o = run(&["smooth", "--json", &fixture(name)]);
        let v: Value = serde_json::from_slice(&o.stdout).unwrap();
        assert_eq!(v["smooth"].as_bool().unwrap(), code(&o) == 0, "{name}");
        assert_eq!(v["failed"].as_array().unwrap().is_empty(), code(&o) == 0);
    }
    let v: Value = serde_json::from_slice(&run(&["smooth", "--json", &fixture("sl4_sp4_tensor.json")]).stdout).unwrap();
    let a = &v["condition3"]["assignment"][0];
    assert_eq!(a["root"], 2);
    assert_eq!(a["u"], serde_json::json!([0, 0, 0, 0, 0, 1]));
    assert_eq!(v["condition2"]["components"][0]["outcome"][0]["entry"], 13);
}

#[test]
fn explain_and_vacuous_conditions() {
    let t = stdout(&run(&["smooth", "--explain", &fixture("sl4_sp4_tensor.json")]));
    assert!(t.contains("S_F = {1.1, 1.2, 1.3, 2.1, 2.2}"));
    assert!(t.contains("entry 13"));
    let t = stdout(&run(&["smooth", &fixture("toric_smooth.json")]));
    assert!(t.contains("condition 2 (catalog): pass (vacuous)"));
    assert!(t.contains("condition 3 (marked roots): pass (vacuous)"));
}

#[test]
fn factorial() {
    let o = run(&["factorial", &fixture("toric_singular.json")]);
    assert_eq!(code(&o), 3);
    assert!(stdout(&o).contains("witness"));
    let o = run(&["factorial", "--json", &fixture("toric_smooth.json")]);
    assert_eq!(code(&o), 0);
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["pass"], true);
}

#[test]
fn localize_closure_decompose() {
    let o = run(&["localize", &fixture("sl4_sp4_tensor.json"), "--at", "1.1,1.2,2.1,2.2"]);
    assert_eq!(code(&o), 0);
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["kind"], "datum");
    assert_eq!(v["sigma"].as_array().unwrap().len(), 4);
    assert_eq!(code(&run(&["localize", &fixture("sl4_sp4_tensor.json"), "--at", "3.1"])), 2);

    let v: Value = serde_json::from_slice(&run(&["closure", &fixture("b3_short_chain.json")]).stdout).unwrap();
    assert_eq!(v["kind"], "system");
    assert_eq!(v["sigma"][0]["coeffs"], serde_json::json!([2, 2, 2]));

    let docs = documents(&stdout(&run(&["decompose", &fixture("product_a1_a1.json")])));
    assert_eq!(docs.len(), 2);
    assert_eq!(documents(&stdout(&run(&["decompose", &fixture("sl4_sp4_tensor.json")]))).len(), 1);
}

#[test]
fn catalog() {
    let o = run(&["catalog", "list"]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o).lines().count(), 42);

    let v: Value = serde_json::from_slice(&run(&["catalog", "show", "21"]).stdout).unwrap();
    assert_eq!(v["root_system"]["components"], serde_json::json!(["A1"]));
    assert_eq!(v["marked"], serde_json::json!([0]));
    assert_eq!(v["entry"]["id"], 21);

    let t = stdout(&run(&["catalog", "show", "13", "--format", "text"]));
    assert!(t.contains("arrow 1.2+ -> #3"));
    let v: Value =
        serde_json::from_slice(&run(&["catalog", "show", "9", "--param", "n=2", "--param", "n'=4"]).stdout).unwrap();
    assert_eq!(v["entry"]["params"], "n=2, n'=4");

    assert_eq!(code(&run(&["catalog", "show", "44"])), 2);
    assert_eq!(code(&run(&["catalog", "show", "7", "--param", "n=4"])), 2);
    assert_eq!(code(&run(&["catalog", "show", "7", "--param", "k"])), 2);
}

#[test]
fn catalog_output_is_a_document() {
    let o = run(&["catalog", "show", "13"]);
    let mut f = tempfile::NamedTempFile::new().unwrap();
    f.write_all(&o.stdout).unwrap();
    let p = f.path().to_str().unwrap();
    assert_eq!(code(&run(&["validate", p])), 0);
    // a system carries no cone
    assert_eq!(code(&run(&["smooth", p])), 2);
    assert!(stdout(&run(&["diagram", p])).contains("[gamma]"));
}

#[test]
fn diagram_svg_is_deterministic() {
    let a = run(&["diagram", "--format", "svg", &fixture("sl4_sp4_tensor.json")]);
    let b = run(&["diagram", "--format", "svg", &fixture("sl4_sp4_tensor.json")]);
    assert_eq!(code(&a), 0);
    assert_eq!(a.stdout, b.stdout);
    assert!(stdout(&a).starts_with("<svg"));
    let s = run(&["catalog", "show", "13", "--format", "svg"]);
    assert_eq!(s.stdout, run(&["catalog", "show", "13", "--format", "svg"]).stdout);
}
