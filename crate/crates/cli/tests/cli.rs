use std::io::Write;
use std::process::{Command, Output, Stdio};

fn sperfect(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_sperfect"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn generate_writes_graph6() {
    let o = sperfect(&["generate", "sun", "--k", "5", "--inner", "fan", "--out", "-"], "");
    assert_eq!(o.status.code(), Some(0));
    let line = stdout(&o);
    let g = sperfect::from_graph6(line.trim()).unwrap();
    assert_eq!(g.n(), 10);
    assert_eq!(g.edge_count(), 5 + 2 + 10);
}

#[test]
fn generate_spec_and_formats() {
    let o = sperfect(&["generate", "--spec", "family=cycle k=4", "--format", "edges"], "");
    assert_eq!(stdout(&o), "4\n0 1\n0 3\n1 2\n2 3\n");
    let o = sperfect(&["generate", "path", "--k", "3", "--format", "dot"], "");
    assert!(stdout(&o).starts_with("graph"));
    let o = sperfect(&["generate", "sun", "--k", "2"], "");
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn analyze_json_per_line() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("g.g6");
    std::fs::write(&input, "E}Y_\nCl\n").unwrap();
    let o = sperfect(&["analyze", "--in", input.to_str().unwrap(), "--json"], "");
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let lines: Vec<serde_json::Value> = text.lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(lines.len(), 2);
    assert_eq!(lines[0]["graph6"], "E}Y_");
    assert_eq!(lines[0]["alpha_s"], 1);
    assert_eq!(lines[0]["theta_s"], 2);
    assert_eq!(lines[1]["chordality"]["is_chordal"], false);
    assert!(lines[0].get("elapsed_ms").is_none());
    // identical input, identical bytes
    let again = sperfect(&["analyze", "--in", input.to_str().unwrap(), "--json"], "");
    assert_eq!(stdout(&again), text);
}

#[test]
fn analyze_edge_list_from_stdin_to_file() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("report.txt");
    let o = sperfect(&["analyze", "--format", "edges", "--out", out.to_str().unwrap()], "3\n0 1\n1 2\n");
    assert_eq!(o.status.code(), Some(0));
    let text = std::fs::read_to_string(out).unwrap();
    assert!(text.contains("alpha_S = 1"));
    assert!(text.contains("chordal: yes"));
}

#[test]
fn verify_theorem_exhaustive() {
    let o = sperfect(&["verify-theorem", "--exhaustive", "6", "--json"], "");
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(v["checked"], 82);
    assert_eq!(v["disagreements"].as_array().unwrap().len(), 0);
}

#[test]
fn verify_theorem_rejects_holes() {
    let o = sperfect(&["verify-theorem"], "Cl\n");
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("not chordal"));
}

#[test]
fn explore_conjecture_reports_findings() {
    let o = sperfect(&["explore-conjecture", "--max-n", "8"], "Cl\nE}Y_\nbad!\nH?CidJB\n");
    assert_eq!(o.status.code(), Some(1));
    let text = stdout(&o);
    assert!(text.contains("1 malformed"));
    assert!(text.contains("1 oversize"));
    assert!(text.contains("E}Y_"));
    let o = sperfect(&["explore-conjecture"], "Cl\n");
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn minimal_witness_text() {
    let o = sperfect(&["minimal-witness"], "Cl\nDhC\n");
    assert_eq!(o.status.code(), Some(1));
    let text = stdout(&o);
    assert!(text.contains("Cl: not S-perfect"));
    assert!(text.contains("DhC: S-perfect"));
}

#[test]
fn usage_and_io_errors_exit_2() {
    assert_eq!(sperfect(&["frobnicate"], "").status.code(), Some(2));
    assert_eq!(sperfect(&["analyze", "--in", "/definitely/missing.g6"], "").status.code(), Some(2));
    assert_eq!(sperfect(&["analyze"], "not-graph6\n").status.code(), Some(2));
}
