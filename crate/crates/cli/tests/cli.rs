use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn data(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/data").join(name).display().to_string()
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_liecohom")).args(args).output().expect("binary runs")
}

fn json(args: &[&str]) -> (i32, Value) {
    let mut a = args.to_vec();
    a.extend(["--format", "json"]);
    let out = run(&a);
    let text = if out.stdout.is_empty() { out.stderr } else { out.stdout };
    (out.status.code().unwrap(), serde_json::from_slice(&text).expect("JSON output"))
}

#[test]
fn gh_tau_ideal_is_computed() {
    let (code, v) = json(&["gh", "--catalog", "paper_ex2", "--assume-compact-quotient"]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["betti"], serde_json::json!([1, 1, 0, 1, 1]));
    assert_eq!(v["result"]["theorem"], "Thm1.5");
    assert_eq!(v["result"]["cross_checks"][0]["equal"], true);
    assert_eq!(v["tool"], "liecohom");
    assert_eq!(v["input_digest"].as_str().unwrap().len(), 64);
}

#[test]
fn gh_refusal_exit_code_and_audit() {
    let out = run(&["gh", "--catalog", "paper_ex1"]);
    assert_eq!(out.status.code(), Some(2));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("G/H̄ compact: missing"), "{text}");
    let (_, v) = json(&["gh", "--catalog", "paper_ex1"]);
    assert!(v["result"]["betti"].is_null());
    assert_eq!(v["result"]["advisory"]["quotient_algebra_betti"], serde_json::json!([1, 1]));
    assert_eq!(v["result"]["advisory"]["known_de_rham"], serde_json::json!([1, 0]));
}

#[test]
fn gh_dense_and_relative_routes() {
    let (code, v) = json(&["gh", "--catalog", "abelian(2)", "--subalgebra", r#"[["1","t"]]"#, "--assume-dense"]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["theorem"], "ThmA.9");
    assert_eq!(v["result"]["betti"], serde_json::json!([1, 1]));

    let (code, v) = json(&["gh", "--catalog", "tsu2", "--assume-compact-quotient"]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["theorem"], "Thm1.4");

    let (code, v) = json(&["gh", "--catalog", "tsu2", "--assume-dense"]);
    assert_eq!(code, 2);
    assert_eq!(v["result"]["verdict"], "Refused");
}

#[test]
fn betti_tables() {
    let out = run(&["betti", "--catalog", "sl2r"]);
    assert_eq!(out.status.code(), Some(0));
    let (_, v) = json(&["betti", "--catalog", "sl2r", "--representatives"]);
    assert_eq!(v["result"]["betti"], serde_json::json!([1, 0, 0, 1]));
    assert_eq!(v["result"]["euler"], 0);
    assert_eq!(v["result"]["representatives"]["3"], serde_json::json!([["1"]]));

    let (_, v) = json(&["betti", "--catalog", "heis3", "--degree", "1"]);
    assert_eq!(v["result"]["betti"], serde_json::json!([2]));
    assert_eq!(v["result"]["degree"], 1);

    let (_, v) = json(&["invariant", "--file", &data("heis3.json")]);
    assert_eq!(v["result"]["betti"], serde_json::json!([1, 2, 1, 1]));
    assert_eq!(v["result"]["route"], "invariant");

    let (_, v) = json(&["relative", "--catalog", "paper_ex2"]);
    assert_eq!(v["result"]["betti"], serde_json::json!([1, 1, 0, 1, 1]));

    let (_, v) = json(&["quotient", "--file", &data("heis3.json")]);
    assert_eq!(v["result"]["betti"], serde_json::json!([1, 2, 1]));
}

#[test]
fn e1_and_check() {
    let (code, v) = json(&["e1", "--catalog", "su2", "--imax", "4"]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["invariants"], serde_json::json!([1, 0, 1, 0, 1]));
    let (_, v) = json(&["e1", "--catalog", "su2", "--imax", "2", "--basic-betti", "1,1"]);
    assert_eq!(v["result"]["entries"][2], serde_json::json!([0, 0, 1, 1]));

    let (code, v) = json(&["check", "--catalog", "sl2r"]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["compact_type"]["no"], "KillingNotNegDefOnDerived");
}

#[test]
fn torus_verb() {
    let (code, v) = json(&["torus", "--file", &data("t3_line.json"), "--form", &data("closed_form.json")]);
    assert_eq!(code, 0);
    let r = &v["result"];
    assert_eq!(r["betti"], serde_json::json!([1, 2, 1]));
    assert_eq!(r["certificates"]["all_acyclic"], true);
    assert_eq!(r["certificates"]["checked"], 3);
    assert_eq!(r["form"]["residual_zero"], true);
    assert_eq!(r["form"]["average"]["terms"].as_array().unwrap().len(), 2);

    let (code, v) = json(&["torus", "--file", &data("kronecker.json"), "--form", &data("open_form.json")]);
    assert_eq!(code, 1);
    assert_eq!(v["error"]["kind"], "not-closed");
}

#[test]
fn input_errors_exit_one() {
    let (code, v) = json(&["check", "--file", &data("bad_jacobi.json")]);
    assert_eq!(code, 1);
    assert_eq!(v["error"]["kind"], "jacobi");
    assert_eq!(v["error"]["detail"]["triple"], serde_json::json!([1, 2, 3]));

    let (code, v) = json(&["betti", "--file", &data("lower_bracket.json")]);
    assert_eq!(code, 1);
    assert_eq!(v["error"]["kind"], "format");

    let (code, v) = json(&["betti", "--catalog", "e8"]);
    assert_eq!((code, v["error"]["kind"].as_str()), (1, Some("unknown-catalog-name")));

    let (code, _) = json(&["betti", "--catalog", "su2", "--file", &data("heis3.json")]);
    assert_eq!(code, 1);

    let (code, v) = json(&["quotient", "--catalog", "tsu2"]);
    assert_eq!((code, v["error"]["kind"].as_str()), (1, Some("not-an-ideal")));

    let (code, v) = json(&["gh", "--catalog", "su2", "--subalgebra", r#"[["1","0","0"],["0","1","0"]]"#]);
    assert_eq!((code, v["error"]["kind"].as_str()), (1, Some("not-a-subalgebra")));

    let (code, v) = json(&["betti", "--catalog", "abelian(13)"]);
    assert_eq!((code, v["error"]["kind"].as_str()), (1, Some("too-large")));
    let (code, v) = json(&["betti", "--catalog", "abelian(13)", "--degree", "1"]);
    assert_eq!((code, &v["result"]["betti"]), (0, &serde_json::json!([13])));

    let out = run(&["frobnicate"]);
    assert_eq!(out.status.code(), Some(1));
    let err: Value = serde_json::from_slice(&out.stderr).unwrap();
    assert_eq!(err["error"]["kind"], "usage");
}

#[test]
fn catalog_round_trip_through_files() {
    let dir = tempfile::tempdir().unwrap();
    for name in ["heis3", "su2", "paper_ex1", "paper_ex2", "tsu2"] {
        let out = run(&["catalog", name, "--format", "json"]);
        assert_eq!(out.status.code(), Some(0));
        let v: Value = serde_json::from_slice(&out.stdout).unwrap();
        let text = serde_json::to_string_pretty(&v["result"]["algebra"]).unwrap();
        let path = dir.path().join(format!("{name}.json"));
        std::fs::write(&path, &text).unwrap();
        let (_, from_file) = json(&["betti", "--file", path.to_str().unwrap()]);
        let (_, from_catalog) = json(&["betti", "--catalog", name]);
        assert_eq!(from_file["result"]["betti"], from_catalog["result"]["betti"], "{name}");
        let (lf, hf) = liecohom::format::parse_algebra(&text).unwrap();
        assert_eq!(liecohom::format::print_algebra(&lf, hf.as_ref()), text);
    }
    let out = run(&["catalog"]);
    assert!(String::from_utf8(out.stdout).unwrap().contains("paper_ex2"));
}

#[test]
fn runs_are_deterministic() {
    let args = ["gh", "--catalog", "paper_ex2", "--assume-compact-quotient", "--representatives", "--format", "json"];
    let strip = |o: Output| {
        let mut v: Value = serde_json::from_slice(&o.stdout).unwrap();
        v.as_object_mut().unwrap().remove("timing_ms");
        serde_json::to_string(&v).unwrap()
    };
    assert_eq!(strip(run(&args)), strip(run(&args)));
}
