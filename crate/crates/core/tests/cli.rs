use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn run(dir: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cybergraph"))
        .current_dir(dir)
        .env_remove("CYBERGRAPH_SEED")
        .args(args)
        .output()
        .unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap()
}

fn write(dir: &Path, name: &str, text: &str) {
    std::fs::write(dir.join(name), text).unwrap();
}

fn read(dir: &Path, name: &str) -> String {
    std::fs::read_to_string(dir.join(name)).unwrap()
}

#[test]
fn fit_uses_bundled_histogram() {
    let dir = tempfile::tempdir().unwrap();
    let out = run(dir.path(), &["fit"]);
    assert!(out.status.success());
    let rows = json(&out);
    let rows = rows.as_array().unwrap();
    assert_eq!(rows.len(), 3);
    assert_eq!(rows[0]["family"], "lognormal");
    assert!((rows[0]["alpha"].as_f64().unwrap() - 1.371).abs() < 0.02);
    assert!(rows[2]["beta"].is_null());

    write(dir.path(), "k.csv", "degree,count\n1,10\n2,5\n3,1\n");
    let out = run(dir.path(), &["fit", "--counts", "k.csv", "--family", "zipf"]);
    assert!(out.status.success());
    assert_eq!(json(&out).as_array().unwrap().len(), 1);
}

#[test]
fn metrics_on_edge_list() {
    let dir = tempfile::tempdir().unwrap();
    write(dir.path(), "p.txt", "# nodes 4\n0 1\n1 2\n2 3\n");
    let out = run(dir.path(), &["metrics", "p.txt"]);
    assert!(out.status.success());
    let r = json(&out);
    assert_eq!(r["diameter"], 3);
    assert!((r["assortativity"].as_f64().unwrap() + 0.5).abs() < 1e-12);

    write(dir.path(), "m.txt", "# nodes 3\n# multigraph\n0 1\n0 1\n1 2\n");
    let r = json(&run(dir.path(), &["metrics", "m.txt"]));
    assert_eq!(r["simple"], false);
    assert!(r["clustering"].is_null());
    let r = json(&run(dir.path(), &["metrics", "m.txt", "--simplify"]));
    assert_eq!(r["m"], 2);
    assert_eq!(r["clustering"], 0.0);
}

#[test]
fn export_formats() {
    let dir = tempfile::tempdir().unwrap();
    write(dir.path(), "t.txt", "# nodes 3\n0 1\n0 2\n1 2\n");
    let dot = run(dir.path(), &["export", "t.txt", "--format", "dot"]);
    let dot = String::from_utf8(dot.stdout).unwrap();
    assert!(dot.starts_with("graph G {"));
    assert!(dot.contains("  0 -- 1;"));
    let gml = run(dir.path(), &["export", "t.txt", "--format", "graphml"]);
    assert!(String::from_utf8(gml.stdout).unwrap().contains("<graphml"));

    assert!(run(dir.path(), &["export", "t.txt", "--format", "json", "--out", "t.json"])
        .status
        .success());
    let back = run(dir.path(), &["export", "t.json", "--format", "edgelist"]);
    assert_eq!(String::from_utf8(back.stdout).unwrap(), read(dir.path(), "t.txt"));
}

#[test]
fn relabel_reports_costs() {
    let dir = tempfile::tempdir().unwrap();
    write(dir.path(), "g.txt", "# nodes 3\n0 1\n1 2\n");
    write(dir.path(), "power.csv", "label,x,y\n0,0,0\n1,10,0\n2,20,0\n");
    write(dir.path(), "cyber.csv", "label,x,y\n0,20,0\n1,10,0\n2,0,0\n");
    let out = run(
        dir.path(),
        &["relabel", "--edges", "g.txt", "--power", "power.csv", "--cyber", "cyber.csv", "--out", "r.txt"],
    );
    assert!(out.status.success());
    let r = json(&out);
    assert_eq!(r["permutation"], serde_json::json!([2, 1, 0]));
    assert_eq!(r["cost_before"], 40.0);
    assert_eq!(r["cost_after"], 0.0);
    assert_eq!(read(dir.path(), "r.txt"), "# nodes 3\n0 1\n1 2\n");
}

#[test]
fn seed_from_environment() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    run(d, &["gen", "-n", "30", "-m", "35", "--seed", "4", "--out", "a.txt"]);
    let env = Command::new(env!("CARGO_BIN_EXE_cybergraph"))
        .current_dir(d)
        .env("CYBERGRAPH_SEED", "4")
        .args(["gen", "-n", "30", "-m", "35", "--out", "b.txt"])
        .output()
        .unwrap();
    assert!(env.status.success());
    assert_eq!(read(d, "a.txt"), read(d, "b.txt"));
    let manifest: Value = serde_json::from_str(&read(d, "b.txt.manifest.json")).unwrap();
    assert_eq!(manifest["seed"], 4);
    assert_eq!(manifest["command"], "gen");
}

#[test]
fn exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    write(d, "bad.txt", "0 x\n");
    assert_eq!(run(d, &["metrics", "bad.txt"]).status.code(), Some(2));
    assert_eq!(run(d, &["metrics", "missing.txt"]).status.code(), Some(2));
    // fewer edges than a spanning tree needs
    let out = run(d, &["gen", "-n", "30", "-m", "20", "--out", "x.txt"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(!String::from_utf8(out.stderr).unwrap().is_empty());

    run(d, &["gen", "-n", "30", "-m", "35", "--out", "g.txt"]);
    write(d, "g.txt.manifest.json", &read(d, "g.txt.manifest.json").replace("\"sha256\": \"", "\"sha256\": \"0"));
    let out = run(d, &["replay", "g.txt.manifest.json"]);
    assert_eq!(out.status.code(), Some(4));
}

#[test]
fn compare_table() {
    let dir = tempfile::tempdir().unwrap();
    let out = run(dir.path(), &["compare", "-n", "30", "-m", "35", "--models", "hh,pw"]);
    assert!(out.status.success());
    let table = String::from_utf8(out.stdout).unwrap();
    assert!(table.contains("lambda"));
    assert_eq!(table.lines().filter(|l| l.starts_with("hh") || l.starts_with("pw")).count(), 2);
}
