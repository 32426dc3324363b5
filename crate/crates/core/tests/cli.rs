use std::path::PathBuf;
use std::process::Command;

use serde_json::Value;

fn iasi(args: &[&str]) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_iasi")).args(args).output().unwrap();
    (out.status.code().unwrap(), String::from_utf8(out.stdout).unwrap())
}

fn scratch(name: &str, contents: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("iasi-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

#[test]
fn classify_reports_every_class() {
    let (code, out) = iasi(&["classify", "--graph", "A_", "--labels", "[[1],[2]]"]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&out).unwrap();
    let r = &v["result"]["report"];
    for key in ["is_iasl", "is_iasi", "is_weak", "is_strong"] {
        assert_eq!(r[key], true, "{key}");
    }
    assert_eq!(r["edge_uniform_k"], 1);
}

#[test]
fn minsize_of_triangle_is_two() {
    let (code, out) = iasi(&["minsize", "--graph", "Bw"]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["result"]["size"], 2);
    assert!(v["result"]["certificate"]["witness"]["labeling"]["labels"].is_array());
}

#[test]
fn batch_keeps_input_order() {
    let path = scratch("batch.g6", "Bw\nA_\n\nCr\n");
    let arg = format!("@{}", path.display());
    let (code, out) = iasi(&["construct", "--graph", &arg, "--method", "two-uniform"]);
    assert_eq!(code, 1, "the triangle has none");
    let lines: Vec<Value> = out.lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(lines.len(), 3);
    assert_eq!(lines.iter().map(|l| l["line"].as_u64().unwrap()).collect::<Vec<_>>(), vec![1, 2, 4]);
    assert_eq!(lines[0]["result"]["status"], "impossible");
    assert_eq!(lines[2]["result"]["status"], "built");

    let (_, serial) = iasi(&["construct", "--graph", &arg, "--method", "two-uniform", "--serial"]);
    assert_eq!(out, serial);
}

#[test]
fn malformed_batch_line_is_located() {
    let path = scratch("bad.g6", "A_\nB w\n");
    let (code, out) = iasi(&["convert", "--graph", &format!("@{}", path.display())]);
    assert_eq!(code, 2);
    assert!(out.contains("line 2, byte 1"), "{out}");
}

#[test]
fn labels_from_file() {
    let path = scratch("labels.json", "[[0],[0,1],[0,4],[2]]");
    let (code, out) = iasi(&["classify", "--graph", "Cr", "--labels", &format!("@{}", path.display()), "--format", "text"]);
    assert_eq!(code, 0);
    assert!(out.contains("is_weak: true"), "{out}");
}

#[test]
fn dot_preserves_vertices_and_edges() {
    for g6 in ["Bw", "Dhc", "D??", "Cr"] {
        let (code, out) = iasi(&["convert", "--graph", g6, "--format", "dot"]);
        assert_eq!(code, 0);
        let g = iasi::graph::parse_graph6(g6).unwrap();
        let edges: Vec<(usize, usize)> = out
            .lines()
            .filter_map(|l| l.trim().trim_end_matches(';').split_once(" -- "))
            .map(|(a, b)| (a.parse().unwrap(), b.parse().unwrap()))
            .collect();
        assert_eq!(edges, g.edges());
        let vertices = out.lines().filter(|l| l.contains('[') || (!l.contains("--") && l.trim().ends_with(';'))).count();
        assert!(vertices >= g.vertex_count() || g.vertex_count() == 0, "{out}");
    }
}

#[test]
fn exit_codes() {
    assert_eq!(iasi(&["bogus"]).0, 2);
    assert_eq!(iasi(&["classify", "--graph", "A_"]).0, 2);
    assert_eq!(iasi(&["classify", "--graph", "A_", "--labels", "[[1],[1]]"]).0, 1);
    assert_eq!(iasi(&["uniform", "--graph", "Bw", "--k", "2", "--element-bound", "6", "--size-bound", "3"]).0, 1);
    assert_eq!(
        iasi(&["uniform", "--graph", "F~~~w", "--k", "3", "--element-bound", "30", "--budget-ms", "1"]).0,
        3
    );
    assert_eq!(iasi(&["oracle", "run", "saturated-class-size"]).0, 0);
}

#[test]
fn product_through_the_binary() {
    let (code, out) = iasi(&["product", "--kind", "corona", "--left", "A_", "--right", "@", "--format", "json"]);
    assert_eq!(code, 2, "{out}");
    let (code, out) = iasi(&["product", "--kind", "rooted", "--left", "A_", "--right", "A_", "--root", "0"]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["result"]["labeling"]["graph6"].as_str().map(str::len), Some(2));
}

#[test]
fn full_oracle_suite_passes() {
    let (code, out) = iasi(&["oracle", "run", "all"]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&out).unwrap();
    let summary = v["result"]["summary"].as_array().unwrap();
    assert_eq!(summary.len(), iasi::oracle::CheckId::ALL.len());
    assert!(summary.iter().all(|c| c["verdict"] == "pass"), "{summary:?}");
}
