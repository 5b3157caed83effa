use serde_json::Value;
use strathom::cli::{run, Outcome, EXIT_INPUT, EXIT_OK, EXIT_UNKNOWN};

fn strathom(args: &[&str]) -> Outcome {
    run(std::iter::once("strathom").chain(args.iter().copied()))
}

fn json(args: &[&str]) -> Value {
    let mut full = args.to_vec();
    full.push("--json");
    let out = strathom(&full);
    assert_eq!(out.code, EXIT_OK, "{args:?}: {}", out.stderr);
    let v: Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(v["format_version"], "1");
    v["result"].clone()
}

#[test]
fn stratify_a3() {
    let r = json(&["stratify", "FX-A3", "--all-orders"]);
    assert_eq!(r["leaf_count"], 3);
    assert!(r["leaves"].as_array().unwrap().iter().all(|l| l["dim"] == 1));
    assert_eq!(r["factors_agree"], true);
    let dot = strathom(&["stratify", "FX-A3", "--dot"]).stdout;
    assert!(dot.starts_with("digraph stratification {"));
}

#[test]
fn recollement_43() {
    let r = json(&["recollement", "FX-43", "--tilting", "P2+S2"]);
    assert_eq!(r["outcome"], "success");
    let ranks = &r["datum"]["ranks"];
    assert_eq!((ranks["a"].as_u64(), ranks["b"].as_u64(), ranks["c"].as_u64()), (Some(2), Some(1), Some(1)));
    assert_eq!(r["datum"]["b"]["dim"], 4);
}

#[test]
fn recollement_failures_still_exit_zero() {
    let r = json(&["recollement", "FX-41", "--tilting", "P1+P2+P2/P3"]);
    assert_eq!(r["outcome"], "failure");
    assert_eq!(r["hypothesis"], "homological epimorphism");
    let r = json(&["recollement", "FX-42", "--tilting", "A", "--split", "P2"]);
    assert_eq!(r["hypothesis"], "finite projective dimension of T1 over C");
    let r = json(&["recollement", "FX-A2", "--perpendicular", "S1"]);
    assert_eq!(r["outcome"], "success");
}

#[test]
fn sgldim_probe_43() {
    let r = json(&["sgldim-probe", "FX-43", "--max-len", "6"]);
    assert_eq!(r["lower_bound"], 6);
}

#[test]
fn minimize_staircase() {
    for m in 1..=6 {
        let s = m.to_string();
        let r = json(&["minimize", "FX-43", "--staircase", &s]);
        assert_eq!(r["length"], m);
        assert_eq!(r["unchanged"], true);
        assert_eq!(r["minimal"], true);
    }
}

#[test]
fn homological_queries() {
    let r = json(&["ext", "FX-A2", "--left", "S1", "--right", "S2", "--upto", "2"]);
    assert_eq!(r["ext_dims"], serde_json::json!([0, 1, 0]));
    let r = json(&["gldim", "FX-43"]);
    assert_eq!(r["global_dimension"]["kind"], "Finite");
    let r = json(&["tilting-check", "FX-A2", "--tilting", "S1+S2"]);
    assert_eq!(r["is_tilting"], false);
    let r = json(&["epi-check", "FX-42", "--tilting", "A", "--split", "P2"]);
    assert_eq!(r["b"]["dim"], 1);
    let r = json(&["heredity", "FX-43", "--vertices", "2"]);
    assert_eq!(r["heredity"]["corner_semisimple"], false);
    let r = json(&["exseq-check", "FX-A3", "--seq", "S1,P2,P3"]);
    assert!(r["valid"].is_boolean());
    let r = json(&["info", "FX-CAN222"]);
    assert_eq!(r["summary"]["dim"], 13);
}

#[test]
fn unknown_verdict_exits_two() {
    let out = strathom(&["gldim", "FX-42", "--cap", "1"]);
    assert_eq!(out.code, EXIT_UNKNOWN, "{}", out.stdout);
}

#[test]
fn input_errors_exit_one() {
    for args in [
        vec!["info", "no-such-file.json"],
        vec!["pd", "FX-43", "--module", "P7"],
        vec!["pd", "FX-43", "--module", "P1 +"],
        vec!["gldim", "FX-43", "--field", "Fp:4"],
        vec!["frobnicate"],
        vec!["tilting-check", "FX-A2"],
        vec!["ell", "FX-A2", "--tilting", "S1"],
    ] {
        let out = strathom(&args);
        assert_eq!(out.code, EXIT_INPUT, "{args:?}");
        assert!(!out.stderr.is_empty());
    }
    assert_eq!(strathom(&["--help"]).code, EXIT_OK);
}

#[test]
fn reports_are_byte_identical() {
    let a = strathom(&["recollement", "FX-A3", "--tilting", "P1+P3+S3", "--json"]);
    let b = strathom(&["recollement", "FX-A3", "--tilting", "P1+P3+S3", "--json"]);
    assert_eq!(a, b);
}

#[test]
fn fixtures_write_and_reload() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path().to_str().unwrap();
    let r = json(&["fixtures", "--write", d, "--verify"]);
    assert_eq!(r["all_ok"], true);
    assert_eq!(r["fixtures"].as_array().unwrap().len(), 7);
    let path = dir.path().join("FX-42.json");
    let r = json(&["info", path.to_str().unwrap()]);
    assert_eq!(r["summary"]["dim"], 7);
    let v = json(&["gldim", path.to_str().unwrap()]);
    assert_eq!(v["global_dimension"]["kind"], "Infinite");
    let digest = strathom(&["gldim", path.to_str().unwrap(), "--json"]).stdout;
    assert!(digest.contains("\"digest\""));

    let c = dir.path().join("FX-43-staircase-4.json");
    let arg = c.to_str().unwrap();
    let r = json(&["minimize", "FX-43", "--complex", arg]);
    assert_eq!(r["length"], 4);
    let r = json(&["gldim", path.to_str().unwrap(), "--field", "Fp:3"]);
    assert_eq!(r["global_dimension"]["kind"], "Infinite");
}
