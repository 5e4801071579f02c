use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_planar-turan"))
        .args(args)
        .env_remove("PLANAR_TURAN_SEARCH_CAP")
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| {
        panic!("stdout is not JSON ({e}): {}", String::from_utf8_lossy(&out.stdout))
    })
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn construct_glued_counterexample() {
    let out = run(&["construct", "counterexample-ck", "--k", "13", "--n", "390"]);
    assert!(out.status.success());
    let v = json(&out);
    assert_eq!(v["vertices"], 390);
    assert_eq!(v["edges"], 1078);
    assert_eq!(v["expected_edges"], 1078);
    assert_eq!(v["planar"], true);
    assert_eq!(v["construction"], "counterexample-ck k=13 n=390");
    assert!(v["graph6"].as_str().unwrap().starts_with('~'));
}

#[test]
fn construct_small_graphs() {
    let out = run(&["construct", "T", "--m", "3", "--format", "graph6"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "Bw\n");
    let v = json(&run(&["construct", "witness", "--name", "c8-plus-chords"]));
    assert_eq!((v["vertices"].as_u64(), v["edges"].as_u64()), (Some(8), Some(11)));
    let dot = stdout(&run(&["construct", "O", "--p", "5", "--format", "dot"]));
    assert!(dot.starts_with("graph G {") && dot.matches(" -- ").count() == 7);
}

#[test]
fn construct_writes_graph_and_sidecar() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("glue.g6");
    let out = run(&[
        "construct",
        "glue",
        "--name",
        "glue-fan",
        "--k",
        "5",
        "--base",
        "Bw",
        "--format",
        "graph6",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let g6 = std::fs::read_to_string(&path).unwrap();
    let sidecar: Value = serde_json::from_str(&std::fs::read_to_string(dir.path().join("glue.g6.json")).unwrap()).unwrap();
    assert_eq!(sidecar["graph6"].as_str().unwrap(), g6.trim());
    assert_eq!(sidecar["edges"], 3 + 9);
    assert_eq!(json(&out), sidecar);
}

#[test]
fn construct_errors_are_structured() {
    let out = run(&["construct", "nope"]);
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(json(&out)["error"]["kind"], "construction");
    let out = run(&["construct", "T"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(json(&out)["error"]["message"].as_str().unwrap().contains("m"));
}

#[test]
fn verify_construction_is_free() {
    let out = run(&["verify", "--construct", "counterexample-ck k=13 n=390", "--family", "cycle", "--k", "13"]);
    assert!(out.status.success());
    let v = json(&out);
    assert_eq!(v["free"], true);
    assert_eq!(v["planar"], true);
    assert_eq!(v["edge_count"], 1078);
}

#[test]
fn verify_reports_witness_and_nonplanarity() {
    // K4 contains a theta on four vertices
    let out = run(&["verify", "--g6", "C~", "--family", "theta", "--k", "4"]);
    assert_eq!(out.status.code(), Some(1));
    let v = json(&out);
    assert_eq!(v["free"], false);
    assert_eq!(v["checks"][0]["witness"]["cycles"][0].as_array().unwrap().len(), 4);
    assert!(v["checks"][0]["witness"]["chord"].is_array());

    let out = run(&["verify", "--g6", "D~{", "--family", "cycle", "--k", "3"]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(json(&out)["planar"], false);

    let out = run(&["verify", "--g6", "C~", "--family", "theta", "--k", "4", "--expect", "contains"]);
    assert!(out.status.success());
}

#[test]
fn verify_several_families_in_order() {
    let out = run(&[
        "verify", "--g6", "Bw", "--family", "cycle", "--family", "cycle", "--family", "theta", "--k", "3", "--k", "4",
        "--k", "4",
    ]);
    let v = json(&out);
    let checks = v["checks"].as_array().unwrap();
    assert_eq!(checks.len(), 3);
    assert_eq!((checks[0]["k"].as_u64(), checks[0]["free"].as_bool()), (Some(3), Some(false)));
    assert_eq!((checks[1]["k"].as_u64(), checks[1]["free"].as_bool()), (Some(4), Some(true)));
    assert_eq!(checks[2]["family"], "theta");
    assert_eq!(out.status.code(), Some(1));

    let out = run(&["verify", "--g6", "Bw", "--family", "cycle", "--family", "theta", "--k", "3", "--k", "4", "--k", "5"]);
    assert_eq!(out.status.code(), Some(2));
    let out = run(&["verify", "--g6", "!!", "--family", "cycle", "--k", "3"]);
    assert_eq!(json(&out)["error"]["kind"], "graph6");
}

#[test]
fn bounds_eval() {
    let out = run(&["bounds", "--id", "ck-glued-exact", "--k", "13", "--n", "390", "--format", "text"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "1078\n");
    let v = json(&run(&["bounds", "--id", "ck-conjecture", "--k", "13", "--n", "390"]));
    assert_eq!(v["value"], "13956/13");
    assert_eq!(v["decimal"], "1073.538462");
    assert_eq!(v["exact"], true);
    let out = run(&["bounds", "--id", "c5-upper", "--n", "3"]);
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(json(&out)["error"]["kind"], "bounds");
    let list = json(&run(&["bounds", "list"]));
    assert_eq!(list["formulas"].as_array().unwrap().len(), 25);
}

#[test]
fn bounds_compare_table() {
    let out = run(&["bounds", "compare", "--k", "13..25", "--at-threshold"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(lines.next().unwrap(), "k,n,construction_edges,conjecture,margin,margin_decimal,beats,threshold");
    let rows: Vec<Vec<&str>> = lines.map(|l| l.split(',').collect()).collect();
    assert_eq!(rows.len(), 13);
    assert_eq!(rows[0], ["13", "390", "1078", "13956/13", "58/13", "4.461538", "true", "390"]);
    assert!(rows.iter().all(|r| r[6] == "true" && !r[4].starts_with('-')));

    let v = json(&run(&["bounds", "compare", "--k", "16", "--at-threshold", "--format", "json"]));
    assert_eq!(v["rows"][0]["n"], 638);
    assert_eq!(v["rows"][0]["threshold"], "1275/2");

    // below the threshold the construction can lose to the conjecture
    let out = run(&["bounds", "compare", "--k", "13", "--n", "30"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn extremal_values() {
    let out = run(&["extremal", "--n", "8", "--family", "cycle", "--k", "4"]);
    assert!(out.status.success());
    let v = json(&out);
    assert_eq!(v["value"], 11);
    assert!(v["witness_graph6"].as_str().unwrap().starts_with('G'));
    let out = run(&["extremal", "--n", "5", "--family", "theta-plus", "--k", "4", "--expect", "8"]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(json(&out)["value"], 7);
}

#[test]
fn extremal_cap() {
    let out = run(&["extremal", "--n", "10", "--family", "cycle", "--k", "4"]);
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(json(&out)["error"]["kind"], "search");
    let out = run(&["extremal", "--n", "3", "--family", "cycle", "--k", "3", "--cap-override", "12"]);
    assert!(out.status.success());
    assert!(String::from_utf8_lossy(&out.stderr).contains("WARNING"));
    let env_out = Command::new(env!("CARGO_BIN_EXE_planar-turan"))
        .args(["extremal", "--n", "4", "--family", "cycle", "--k", "3"])
        .env("PLANAR_TURAN_SEARCH_CAP", "3")
        .output()
        .unwrap();
    assert_eq!(env_out.status.code(), Some(2));
}

#[test]
fn manifests_replay_exactly() {
    let dir = tempfile::tempdir().unwrap();
    let cases: &[&[&str]] = &[
        &["extremal", "--n", "6", "--family", "theta", "--k", "4"],
        &["construct", "counterexample-ck", "--k", "12", "--n", "150"],
        &["verify", "--g6", "C~", "--family", "theta", "--k", "4"],
        &["bounds", "compare", "--k", "13..15", "--at-threshold"],
        &["bounds", "--id", "ck-power-conjecture", "--k", "13", "--n", "100", "--d", "0.5"],
    ];
    for (i, args) in cases.iter().enumerate() {
        let path = dir.path().join(format!("m{i}.json"));
        let mut full = vec!["--manifest", path.to_str().unwrap()];
        full.extend_from_slice(args);
        let first = run(&full);
        let manifest: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
        assert_eq!(manifest["schema_version"], 1);
        assert_eq!(manifest["args"].as_array().unwrap().len(), args.len());
        assert_eq!(manifest["passed"], first.status.success());
        assert!(manifest["timing"]["elapsed_seconds"].is_number());
        let replay = run(&["repro", path.to_str().unwrap()]);
        let v = json(&replay);
        assert_eq!(v["reproduced"], true, "{args:?}: {v}");
        assert!(replay.status.success());
    }
}

#[test]
fn tampered_manifest_is_detected() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("m.json");
    run(&["extremal", "--n", "5", "--family", "cycle", "--k", "4", "--manifest", path.to_str().unwrap()]);
    let mut manifest: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    manifest["results"]["value"] = Value::from(7);
    std::fs::write(&path, manifest.to_string()).unwrap();
    let out = run(&["repro", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    let v = json(&out);
    assert_eq!(v["reproduced"], false);
    assert_eq!(v["mismatches"][0], "results");

    let out = run(&["repro", dir.path().join("missing.json").to_str().unwrap()]);
    assert_eq!(json(&out)["error"]["kind"], "io");
}
