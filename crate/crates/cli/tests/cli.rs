use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

fn burn(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_burn"))
        .args(args)
        .env_remove("BURN_SEED")
        .output()
        .unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| {
        panic!("{e}: stdout {:?}, stderr {:?}", String::from_utf8_lossy(&out.stdout), String::from_utf8_lossy(&out.stderr))
    })
}

fn path_file(dir: &Path, n: usize) -> PathBuf {
    let p = dir.join(format!("p{n}.el"));
    let text: String = (1..n).map(|v| format!("{} {v}\n", v - 1)).collect();
    fs::write(&p, if n == 1 { "0\n".to_string() } else { text }).unwrap();
    p
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn exact_on_p9() {
    let dir = TempDir::new().unwrap();
    let out = burn(&["exact", "--input", s(&path_file(dir.path(), 9))]);
    assert_eq!(out.status.code(), Some(0));
    let r = json(&out);
    assert_eq!(r["result"]["upper"], 3);
    assert_eq!(r["result"]["lower"], 3);
    assert_eq!(r["result"]["schedule"]["horizon"], 3);
    assert!(r.get("wall_time_ms").is_none());
}

#[test]
fn greedy_on_k1() {
    let dir = TempDir::new().unwrap();
    let out = burn(&["greedy", "--input", s(&path_file(dir.path(), 1))]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["result"]["upper"], 1);
}

#[test]
fn ptas_on_p16() {
    let dir = TempDir::new().unwrap();
    let out = burn(&["ptas", "--input", s(&path_file(dir.path(), 16)), "--a", "1", "--emit-witness"]);
    assert_eq!(out.status.code(), Some(0));
    let r = json(&out);
    assert_eq!(r["details"]["b_star"], 4);
    assert_eq!(r["details"]["interval"], serde_json::json!([4, 4]));
    assert_eq!(r["result"]["schedule"]["horizon"], 4);
}

#[test]
fn ptas_flags() {
    let dir = TempDir::new().unwrap();
    let input = path_file(dir.path(), 12);
    let both = burn(&["ptas", "--input", s(&input), "--a", "1", "--epsilon", "0.5"]);
    assert_eq!(both.status.code(), Some(2));
    let plain = json(&burn(&["ptas", "--input", s(&input), "--a", "1", "--no-prune"]));
    assert!(plain["result"]["schedule"].is_null());
    assert_eq!(plain["details"]["prune"], false);
    let shallow = json(&burn(&["ptas", "--input", s(&input), "--a", "1", "--subscript", "shallow"]));
    assert_eq!(shallow["algorithm"], "ptas-shallow");
}

#[test]
fn random_seed_from_environment() {
    let dir = TempDir::new().unwrap();
    let input = path_file(dir.path(), 30);
    let flag = burn(&["random", "--input", s(&input), "--seed", "11"]);
    let env = Command::new(env!("CARGO_BIN_EXE_burn"))
        .args(["random", "--input", s(&input)])
        .env("BURN_SEED", "11")
        .output()
        .unwrap();
    assert_eq!(flag.stdout, env.stdout);
    let r = json(&flag);
    assert_eq!(r["seed"], 11);
    assert!(!r["details"]["per_m"].as_array().unwrap().is_empty());
    let timed = json(&burn(&["random", "--input", s(&input), "--timings"]));
    assert!(timed["wall_time_ms"].is_u64());
}

#[test]
fn exit_codes() {
    let dir = TempDir::new().unwrap();
    let missing = burn(&["exact", "--input", "/nonexistent/graph.el"]);
    assert_eq!(missing.status.code(), Some(2));
    let bad = dir.path().join("bad.el");
    fs::write(&bad, "0 1\n1 1\n").unwrap();
    let out = burn(&["greedy", "--input", s(&bad)]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 2"));
    assert_eq!(burn(&["greedy", "--bogus"]).status.code(), Some(2));

    let big = path_file(dir.path(), 60);
    let out = burn(&["exact", "--input", s(&big), "--node-budget", "3"]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(json(&out)["status"], "budget_exceeded");

    let cycle = dir.path().join("c3.el");
    fs::write(&cycle, "0 1\n1 2\n2 0\n").unwrap();
    assert_eq!(burn(&["ptas", "--input", s(&cycle)]).status.code(), Some(2));
}

#[test]
fn dimacs_and_domination() {
    let dir = TempDir::new().unwrap();
    let input = dir.path().join("c5.dimacs");
    fs::write(&input, "c five-cycle\np edge 5 5\ne 1 2\ne 2 3\ne 3 4\ne 4 5\ne 5 1\n").unwrap();
    let r = json(&burn(&["exact", "--input", s(&input), "--format", "dimacs", "--domination"]));
    assert_eq!(r["result"]["upper"], 2);
    assert_eq!(r["details"]["dominating_set"].as_array().unwrap().len(), 2);
}

#[test]
fn gadget_writes_graph_and_maps() {
    let dir = TempDir::new().unwrap();
    let input = path_file(dir.path(), 3);
    let out_graph = dir.path().join("gp.el");
    let maps = dir.path().join("maps.json");
    let out = burn(&["gadget", "--input", s(&input), "--d", "2", "--out", s(&out_graph), "--maps", s(&maps)]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["details"]["gadget_n"], 3 + 3 + 2 * 3 + 3);
    let maps: Value = serde_json::from_str(&fs::read_to_string(&maps).unwrap()).unwrap();
    assert_eq!(maps["original_vertex_map"], serde_json::json!([0, 1, 2]));
    assert_eq!(maps["copy_vertex_map"], serde_json::json!([3, 4, 5]));
    assert_eq!(maps["edge_path_map"].as_array().unwrap().len(), 2);
    let r = json(&burn(&["exact", "--input", s(&out_graph)]));
    assert_eq!(r["input"]["n"], 15);
}

#[test]
fn gen_is_seeded() {
    let dir = TempDir::new().unwrap();
    let a = dir.path().join("a.el");
    let b = dir.path().join("b.el");
    for p in [&a, &b] {
        let out = burn(&["gen", "random-tree", "--n", "12", "--seed", "5", "--out", s(p)]);
        assert_eq!(out.status.code(), Some(0));
        let r = json(&out);
        assert_eq!(r["input"]["source"], "random_tree-n12-s5");
        assert!(r["result"]["upper"].is_u64());
    }
    assert_eq!(fs::read(&a).unwrap(), fs::read(&b).unwrap());
    let out = burn(&["gen", "path", "--n", "9"]);
    assert_eq!(String::from_utf8(out.stdout).unwrap().lines().count(), 8);
}

#[test]
fn bench_paths_suite() {
    let dir = TempDir::new().unwrap();
    let reports = dir.path().join("reports.json");
    let out = burn(&["bench", "paths", "--out", s(&reports)]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    let mut lines = text.lines();
    assert!(lines.next().unwrap().starts_with("instance,n,m,b_exact,r_greedy,r_random,b_star"));
    let rows: Vec<&str> = lines.collect();
    assert_eq!(rows.len(), 17);
    assert!(rows.iter().all(|r| r.contains(",true,true,")));
    let reports: Value = serde_json::from_str(&fs::read_to_string(&reports).unwrap()).unwrap();
    assert_eq!(reports.as_array().unwrap().len(), 17 * 4);
}
