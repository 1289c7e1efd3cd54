use std::io::Write;
use std::process::{Command, Output, Stdio};

use graph_inertia::canonical::p2_catalog;
use graph_inertia::graph6;
use serde_json::Value;

fn run(args: &[&str], stdin: Option<&str>) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_graph-inertia"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    let mut pipe = child.stdin.take().unwrap();
    pipe.write_all(stdin.unwrap_or("").as_bytes()).unwrap();
    drop(pipe);
    child.wait_with_output().unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| panic!("{e}: {}", String::from_utf8_lossy(&out.stdout)))
}

fn json_lines(out: &Output) -> Vec<Value> {
    String::from_utf8_lossy(&out.stdout).lines().map(|l| serde_json::from_str(l).unwrap()).collect()
}

#[test]
fn verify_single_graph() {
    let out = run(&["--format", "json", "verify", "--graph6", "D~{"], None);
    assert_eq!(out.status.code(), Some(0));
    let reports = json_lines(&out);
    assert_eq!(reports.len(), 1);
    assert_eq!(reports[0]["graph6"], "D~{");
    assert_eq!(reports[0]["bounds"]["brooks"]["status"], "inapplicable");
    assert!(String::from_utf8_lossy(&out.stderr).contains("verified 1 graph(s), 0 violation(s)"));
}

#[test]
fn verify_with_chi_from_stdin() {
    let out = run(&["--format", "json", "verify", "--with-chi"], Some("Dhc\nC~\n\nCh\n"));
    assert_eq!(out.status.code(), Some(0));
    let reports = json_lines(&out);
    assert_eq!(reports.len(), 3);
    let chis: Vec<_> = reports.iter().map(|r| r["chi"].as_u64().unwrap()).collect();
    assert_eq!(chis, [3, 4, 2]);
    for r in &reports {
        assert_ne!(r["bounds"]["ando-lin-plus"]["status"], "inapplicable");
    }
}

#[test]
fn tree_collapses_cyclomatic_window() {
    // A path on four vertices.
    let out = run(&["--format", "json", "verify", "--graph6", "Ch"], None);
    let r = json(&out);
    for id in ["window-minus", "window-plus"] {
        let e = &r["bounds"][id];
        assert_eq!(e["right"], 0.0, "{id}");
        assert_eq!(e["equality"], true, "{id}");
    }
    assert!((r["s_plus"].as_f64().unwrap() - 3.0).abs() < 1e-9);
    assert!((r["s_minus"].as_f64().unwrap() - 3.0).abs() < 1e-9);
}

#[test]
fn bad_input_line_is_reported() {
    let out = run(&["--format", "json", "verify"], Some("Dhc\nD~{x\n"));
    assert_eq!(out.status.code(), Some(1));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("line 2"), "{err}");
}

#[test]
fn search_all_graphs_on_five_vertices() {
    let out = run(&["--format", "json", "search", "--n", "5"], None);
    assert_eq!(out.status.code(), Some(0));
    let s = json(&out);
    assert_eq!(s["total"], 34);
    assert_eq!(s["violations"].as_array().unwrap().len(), 0);
}

#[test]
fn search_connected_range_as_csv() {
    let out = run(&["--format", "csv", "search", "--n", "4..7", "--connected"], None);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8_lossy(&out.stdout);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("graph6,n,m,s_plus,s_minus,slack,flags"));
    assert_eq!(lines.count(), 6 + 21 + 112 + 853);
    assert!(!text.contains("-0.000000000000"));
    let summary: Value = serde_json::from_str(String::from_utf8_lossy(&out.stderr).trim()).unwrap();
    assert_eq!(summary["per_n"]["7"]["count"], 853);
}

#[test]
fn family_barbell_matches_prediction() {
    let out = run(&["--format", "json", "family", "barbell", "7"], None);
    assert_eq!(out.status.code(), Some(0));
    let r = json(&out);
    assert_eq!(r["n"], 14);
    assert!(r["barbell"]["max_deviation"].as_f64().unwrap() <= 1e-8);
    assert_eq!(r["bounds"]["barbell-closed-form"]["status"], "satisfied");
}

#[test]
fn family_complete_tripartite_has_one_positive_eigenvalue() {
    let r = json(&run(&["--format", "json", "family", "complete-q-partite", "2,3,4"], None));
    assert_eq!(r["inertia"]["positive"], 1);
    assert_eq!(r["inertia"]["negative"], 2);
}

#[test]
fn family_star_meets_hong_with_equality() {
    let r = json(&run(&["--format", "json", "family", "star", "9"], None));
    assert_eq!(r["bounds"]["hong"]["equality"], true);
    assert_eq!(r["bounds"]["hong"]["status"], "satisfied");
}

#[test]
fn quotient_of_blown_up_catalog_graph() {
    let g3 = &p2_catalog().unwrap().get(3).unwrap().graph;
    let g = g3.blow_up(&[2, 1, 1, 3]).unwrap().permuted(&[6, 0, 3, 5, 1, 2, 4]);
    let text = graph6::encode(&g);
    let r = json(&run(&["--format", "json", "quotient", "--graph6", &text], None));
    assert_eq!(r["catalog_index"], 3);
    assert_eq!(r["catalog_multiplicities"], serde_json::json!([2, 1, 1, 3]));
    let mut mult: Vec<u64> = r["multiplicities"].as_array().unwrap().iter().map(|v| v.as_u64().unwrap()).collect();
    mult.sort();
    assert_eq!(mult, [1, 1, 2, 3]);
}

#[test]
fn quotient_of_twin_free_graph_is_identity() {
    let r = json(&run(&["--format", "json", "quotient", "--graph6", "Dhc"], None));
    assert_eq!(r["quotient"], "Dhc");
    assert_eq!(r["multiplicities"], serde_json::json!([1, 1, 1, 1, 1]));
}

#[test]
fn quotient_of_k33_is_an_edge() {
    let r = json(&run(&["--format", "json", "family", "complete-bipartite", "3,3"], None));
    let k33 = r["graph6"].as_str().unwrap().to_owned();
    let q = json(&run(&["--format", "json", "quotient", "--graph6", &k33], None));
    assert_eq!(q["quotient"], "A_");
    assert_eq!(q["multiplicities"], serde_json::json!([3, 3]));
}

#[test]
fn help_lists_bound_ids_and_usage_errors_exit_one() {
    let help = run(&["--help"], None);
    assert_eq!(help.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&help.stdout).contains("ando-lin-minus"));
    assert_eq!(run(&["search", "--n", "13"], None).status.code(), Some(1));
    assert_eq!(run(&["frobnicate"], None).status.code(), Some(1));
}
