//! Command-line front end: every subcommand, the JSON schema and exit codes.

use serde_json::Value;

use gm2_height::cli::{run_command, CommandResult};

fn run(args: &[&str]) -> CommandResult {
    run_command(args.iter().copied())
}

const COMMANDS: &[&[&str]] = &[
    &["height", "--minpoly", "x^2-2"],
    &["point-height", "--field", "t^4-10*t^2+1", "--x", "(t^3-9*t)/2", "--y", "(11*t-t^3)/2"],
    &["torsion", "--field", "zeta_5", "--x", "t", "--y", "t^2"],
    &["power", "--x", "2", "--y", "1/3", "--l", "3"],
    &["obstruction", "--field", "t^4-10*t^2+1", "--x", "(t^3-9*t)/2", "--y", "(11*t-t^3)/2"],
    &["siegel", "--x", "2", "--y", "3", "--t", "2"],
    &["extrapolate", "--x", "2", "--y", "3", "--prime", "7", "--t", "2"],
    &["curve-height", "--curve", "x+y-5"],
    &["curve-torsion", "--curve", "x^2*y^3-1"],
    &["power-image", "--curve", "x+y-1", "--l", "2"],
    &["ecc", "--curve", "x^2-2", "--bound", "10"],
    &["bound", "--kind", "theorem2", "--omega", "16"],
    &["params", "--schedule", "section_V1", "--omega", "16", "--degree", "4"],
    &["verify", "--kind", "theorem2", "--curve", "x+y-5", "--x", "2", "--y", "3"],
    &["audit", "--suite", "lemma-III2", "--to", "2000"],
];

fn check_schema(v: &Value) {
    let o = v.as_object().expect("top level object");
    assert!(o["command"].is_string());
    assert!(o["inputs"].is_object());
    assert!(o["details"].is_object());
    if let Some(val) = o.get("value") {
        let mid = val["mid"].as_str().expect("mid is a string");
        let rad = val["rad"].as_str().expect("rad is a string");
        assert!(mid.parse::<f64>().is_ok() && rad.parse::<f64>().is_ok(), "{val}");
    }
    if let Some(verdict) = o.get("verdict") {
        assert!(["pass", "fail", "undecided"].contains(&verdict.as_str().unwrap()));
    }
    for k in o.keys() {
        assert!(["command", "inputs", "value", "verdict", "details"].contains(&k.as_str()), "unexpected key {k}");
    }
}

#[test]
fn every_command_round_trips() {
    for args in COMMANDS {
        let r = run(args);
        assert_eq!(r.exit_code, 0, "{args:?}: {}", r.output);
        let js = run(&[&["--json"], *args].concat());
        assert_eq!(js.exit_code, 0);
        let v: Value = serde_json::from_str(&js.output).expect("output parses as JSON");
        check_schema(&v);
        assert_eq!(v, r.to_json(), "{args:?}");
        assert_eq!(serde_json::from_str::<Value>(&serde_json::to_string(&v).unwrap()).unwrap(), v);
        // The table shows the same decimal strings.
        if let Some(val) = v.get("value") {
            let line = format!("{} +/- {}", val["mid"].as_str().unwrap(), val["rad"].as_str().unwrap());
            assert!(r.output.contains(&line), "{args:?}: {line} not in\n{}", r.output);
        }
        if let Some(verdict) = v.get("verdict") {
            assert!(r.output.contains(verdict.as_str().unwrap()));
        }
    }
}

#[test]
fn documented_examples() {
    let r = run(&["height", "--minpoly", "x^2-2"]);
    assert!(r.output.contains("0.34657359"));
    let r = run(&["bound", "--kind", "theorem2", "--omega", "16"]);
    let v = r.value.unwrap().mid_f64();
    assert!((v / 1.626e-23 - 1.0).abs() < 1e-3, "{v}");
    let r = run(&["audit", "--suite", "lemma-III2", "--to", "100000"]);
    assert_eq!(r.exit_code, 0, "{}", r.output);
    assert_eq!(r.verdict.unwrap().to_string(), "pass");
}

#[test]
fn exit_codes() {
    let bad = run(&["height", "--minpoly", "x^2-*2"]);
    assert_eq!(bad.exit_code, 2);
    assert!(bad.output.contains('*'), "{}", bad.output);
    assert_eq!(run(&["frobnicate"]).exit_code, 2);
    assert_eq!(run(&["verify", "--kind", "prop_IV1", "--curve", "x*y-1"]).exit_code, 2);
    let js = run(&["--json", "height", "--minpoly", "x^2-*2"]);
    let v: Value = serde_json::from_str(&js.output).unwrap();
    check_schema(&v);
    assert!(v["details"]["error"].is_string());
}

#[test]
fn deterministic_output() {
    for args in COMMANDS {
        assert_eq!(run(args).output, run(args).output, "{args:?}");
    }
}
