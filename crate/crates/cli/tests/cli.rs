use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use jsonschema::JSONSchema;
use serde_json::Value;

fn divgraph(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_divgraph")).args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> Value {
    let out = divgraph(args);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).unwrap()
}

fn schema(name: &str) -> JSONSchema {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("../../docs").join(name);
    let raw: Value = serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap();
    JSONSchema::compile(&raw).expect("schema compiles")
}

fn assert_valid(schema: &JSONSchema, doc: &Value) {
    if let Err(errors) = schema.validate(doc) {
        let msgs: Vec<String> = errors.map(|e| format!("{} at {}", e, e.instance_path)).collect();
        panic!("schema violations: {msgs:?}");
    }
}

fn write_input(dir: &tempfile::TempDir, name: &str, body: &str) -> PathBuf {
    let path = dir.path().join(name);
    std::fs::write(&path, body).unwrap();
    path
}

#[test]
fn build_s5_json() {
    let v = json(&["build", "--group", "S", "--n", "5", "--kind", "D", "--format", "json"]);
    assert_eq!(v["vertices"].as_array().unwrap().len(), 5);
    assert_eq!(v["edges"].as_array().unwrap().len(), 3);
    assert_eq!(v["components"].as_array().unwrap().len(), 2);
    assert_eq!(v["schema"], "divgraph/1");
    assert_eq!(v["null_graph"], false);
}

#[test]
fn build_a5_dot_has_three_clusters() {
    let out = divgraph(&["build", "--group", "A", "--n", "5", "--kind", "D", "--format", "dot"]);
    assert!(out.status.success());
    let dot = stdout(&out);
    assert_eq!(dot.matches("subgraph cluster_").count(), 3);
    assert!(!dot.contains("--"));
}

#[test]
fn build_s2_is_null_graph() {
    let v = json(&["build", "--group", "S", "--n", "2"]);
    assert_eq!(v["null_graph"], true);
    assert!(v["vertices"].as_array().unwrap().is_empty());
}

#[test]
fn build_outputs_match_schema() {
    let s = schema("graph.schema.json");
    for (group, n) in [("S", "2"), ("S", "7"), ("A", "8")] {
        for kind in ["D", "Gamma", "Delta", "B"] {
            let v = json(&["build", "--group", group, "--n", n, "--kind", kind]);
            assert_valid(&s, &v);
        }
    }
    // above the diameter budget the diameters are null
    let v = json(&["build", "--group", "S", "--n", "26"]);
    assert!(v["diameters"].is_null());
    assert_valid(&s, &v);

    let mut bad = v.clone();
    bad["kind"] = "E".into();
    assert!(!s.is_valid(&bad));
}

#[test]
fn build_writes_out_file_and_csv() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("s5.csv");
    let out = divgraph(&[
        "build",
        "--group",
        "S",
        "--n",
        "5",
        "--format",
        "csv",
        "--factored",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    let csv = std::fs::read_to_string(path).unwrap();
    let mut lines = csv.lines();
    assert_eq!(lines.next(), Some("index,key,part,degree,component,origins,factors"));
    assert_eq!(lines.count(), 5);
}

#[test]
fn identical_runs_are_byte_identical() {
    for args in [
        &["build", "--group", "A", "--n", "12", "--format", "json"][..],
        &["build", "--group", "S", "--n", "10", "--format", "dot"],
        &["build", "--group", "S", "--n", "9", "--kind", "B", "--format", "csv", "--factored"],
        &["verify", "figures", "--format", "json"],
        &["sweep", "--group", "A", "--from", "1", "--to", "18"],
    ] {
        let a = divgraph(args);
        let b = divgraph(args);
        assert!(a.status.success());
        assert_eq!(a.stdout, b.stdout, "{args:?}");
    }
    let one = divgraph(&["--threads", "1", "sweep", "--group", "S", "--from", "1", "--to", "16"]);
    let many = divgraph(&["--threads", "4", "sweep", "--group", "S", "--from", "1", "--to", "16"]);
    assert_eq!(one.stdout, many.stdout);
}

#[test]
fn verify_figures_passes() {
    let out = divgraph(&["verify", "figures"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("pass"));
}

#[test]
fn verify_theorem9_range_and_oracle() {
    let out = divgraph(&["verify", "theorem9", "--from", "7", "--to", "20", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let s = schema("verdict.schema.json");
    let lines: Vec<Value> = stdout(&out).lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(lines.len(), 14);
    for l in &lines {
        assert_valid(&s, l);
        assert_eq!(l["verdict"], "pass");
        assert!(l.get("wall_ms").is_none());
    }
    assert_eq!(divgraph(&["verify", "oracle", "--max-n", "7"]).status.code(), Some(0));
}

#[test]
fn verify_timings_are_opt_in() {
    let out = divgraph(&["verify", "lemma2", "--from", "5", "--to", "5", "--format", "json", "--timings"]);
    let v: Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert!(v["wall_ms"].is_number());
    assert_valid(&schema("verdict.schema.json"), &v);
}

#[test]
fn conjecture_is_report_only() {
    let out = divgraph(&["verify", "conjecture", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    for line in stdout(&out).lines() {
        let v: Value = serde_json::from_str(line).unwrap();
        assert_eq!(v["verdict"], "report-only");
    }
}

#[test]
fn exit_codes() {
    assert_eq!(divgraph(&["verify", "lemma99"]).status.code(), Some(2));
    assert_eq!(divgraph(&["build", "--group", "X", "--n", "5"]).status.code(), Some(2));
    assert_eq!(divgraph(&["build", "--group", "S"]).status.code(), Some(2));
    assert_eq!(divgraph(&["build", "--group", "S", "--n", "41"]).status.code(), Some(3));
    assert_eq!(divgraph(&["verify", "diameter-bounds", "--to", "30"]).status.code(), Some(3));
    assert_eq!(divgraph(&["verify", "oracle", "--max-n", "9"]).status.code(), Some(3));
    assert_eq!(divgraph(&["build", "--group", "S", "--n", "20", "--max-edges", "10"]).status.code(), Some(3));
}

#[test]
fn raised_budget_warns() {
    let out = divgraph(&["build", "--group", "S", "--n", "3", "--max-diameter-n", "30"]);
    assert!(out.status.success());
    assert!(String::from_utf8_lossy(&out.stderr).contains("warning"));
}

#[test]
fn from_file_examples() {
    let dir = tempfile::tempdir().unwrap();

    let p = write_input(&dir, "two.txt", "2\n3\n");
    let v = json(&["from-file", p.to_str().unwrap(), "--kind", "D"]);
    assert_eq!(v["vertices"].as_array().unwrap().len(), 2);
    assert_eq!(v["isolated"], serde_json::json!([0, 1]));
    assert!(v["n"].is_null() && v["group"].is_null());
    assert_valid(&schema("graph.schema.json"), &v);

    let p = write_input(&dir, "delta.txt", "4\n6\n9\n");
    let v = json(&["fromfile", p.to_str().unwrap(), "--kind", "Delta"]);
    let keys: Vec<&str> = v["vertices"].as_array().unwrap().iter().map(|x| x["key"].as_str().unwrap()).collect();
    assert_eq!(keys, ["2", "3"]);
    assert_eq!(v["edges"], serde_json::json!([[0, 1]]));

    let p = write_input(&dir, "s5.txt", "10\n15\n1\n20\n24\n30\n20\n");
    let from_file = json(&["from-file", p.to_str().unwrap()]);
    let built = json(&["build", "--group", "S", "--n", "5"]);
    for field in ["edges", "components", "diameters", "isolated"] {
        assert_eq!(from_file[field], built[field], "{field}");
    }
    let keys = |v: &Value| -> Vec<String> {
        v["vertices"].as_array().unwrap().iter().map(|x| x["key"].as_str().unwrap().to_owned()).collect()
    };
    assert_eq!(keys(&from_file), keys(&built));
}

#[test]
fn from_file_errors() {
    let dir = tempfile::tempdir().unwrap();
    let p = write_input(&dir, "bad.txt", "4\n\nseven\n");
    let out = divgraph(&["from-file", p.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 3"));

    let p = write_input(&dir, "big.txt", "1000003\n");
    let out = divgraph(&["from-file", p.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("unsupported"));

    let out = divgraph(&["from-file", dir.path().join("missing.txt").to_str().unwrap()]);
    assert_ne!(out.status.code(), Some(0));
}

fn sweep_rows(group: &str, from: &str, to: &str) -> Vec<Vec<String>> {
    let out = divgraph(&["sweep", "--group", group, "--from", from, "--to", to]);
    assert!(out.status.success());
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("n,group,vertices,edges,components,component_sizes,diameter,wall_ms"));
    lines.map(|l| l.split(',').map(str::to_owned).collect()).collect()
}

#[test]
fn sweep_rows_and_bounds() {
    let s = sweep_rows("S", "3", "12");
    assert_eq!(s.len(), 10);
    assert!(s.iter().all(|r| r[4].parse::<u32>().unwrap() <= 2));
    assert_eq!(s.iter().map(|r| r[0].parse::<u32>().unwrap()).collect::<Vec<_>>(), (3..=12).collect::<Vec<_>>());

    let a = sweep_rows("A", "4", "12");
    assert_eq!(a.len(), 9);
    assert!(a.iter().all(|r| r[4].parse::<u32>().unwrap() <= 3));

    assert!(sweep_rows("S", "5", "4").is_empty());

    let tail = sweep_rows("S", "25", "26");
    assert_eq!(tail[0][6], "3");
    assert_eq!(tail[1][6], "");
}

#[test]
fn oracle_subcommand() {
    let out = divgraph(&["oracle", "--group", "A", "--n", "5", "--orbits"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.starts_with("cycle_type,size\n"));
    assert_eq!(text.matches("[5^1]").count(), 2);
    assert_eq!(divgraph(&["oracle", "--group", "S", "--n", "9"]).status.code(), Some(3));
}
