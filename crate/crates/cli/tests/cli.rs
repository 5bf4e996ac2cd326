use extremal_core::graph::io;
use extremal_core::matching::MatchingCert;
use extremal_core::multiplicity::{count_mono, EdgeColoring};
use extremal_core::report::{Outcome, SearchReport};
use extremal_core::Graph;
use std::path::Path;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_extremal")).args(args).output().expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

fn report(out: &Output) -> SearchReport {
    serde_json::from_slice(&out.stdout).expect("stdout is a report")
}

fn arg(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn turan_edge_list_file() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("t29.txt");
    let out = run(&["construct", "turan", "--n", "9", "--r", "2", "--emit", "edgelist", "--out", arg(&file)]);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    let g = io::parse_edge_list(&std::fs::read_to_string(&file).unwrap()).unwrap();
    assert_eq!((g.n(), g.edge_count()), (9, 20));
    assert_eq!(g.count_cliques(3).unwrap().total, 0);
}

#[test]
fn construct_json_carries_checks() {
    let out = run(&["construct", "prism", "--n", "12", "--j", "2", "--emit", "json"]);
    assert_eq!(code(&out), 0);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["report"]["pass"], true);
    let g = io::parse_graph6_line(v["graph6"].as_str().unwrap(), 1).unwrap();
    assert_eq!(g.count_cliques(3).unwrap().total, 16);
}

#[test]
fn ramsey_k3_witness_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("pentagon.json");
    let out = run(&["ramsey", "exact", "--pattern", "k3", "--json", "--witness", arg(&file)]);
    assert_eq!(code(&out), 0);
    assert_eq!(report(&out).outcome, Outcome::Exact { value: 6 });
    let c: EdgeColoring = serde_json::from_str(&std::fs::read_to_string(&file).unwrap()).unwrap();
    assert_eq!(c.n(), 5);
    assert_eq!(count_mono(&c, &Graph::complete(3)).unwrap().total, 0);
    let recount = run(&["mult", "count", "--coloring", arg(&file), "--pattern", "k3", "--json"]);
    assert_eq!(report(&recount).outcome, Outcome::Exact { value: 0 });
}

#[test]
fn matching_certificate_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    let graph = dir.path().join("k6.g6");
    std::fs::write(&graph, io::to_graph6(&Graph::complete(6))).unwrap();
    let cert_file = dir.path().join("cert.json");
    let out = run(&["match", "exact", "--graph", arg(&graph), "--s", "4", "--json", "--witness", arg(&cert_file)]);
    assert_eq!(code(&out), 0);
    assert_eq!(report(&out).outcome, Outcome::Exact { value: 3 });
    let cert: MatchingCert = serde_json::from_str(&std::fs::read_to_string(&cert_file).unwrap()).unwrap();
    cert.validate(&Graph::complete(6)).unwrap();
}

#[test]
fn seeded_reports_are_byte_identical() {
    let args = ["mult", "estimate", "--pattern", "k3", "--n", "12", "--trials", "300", "--seed", "9", "--json", "--stable"];
    let one = run(&[&args[..], &["--workers", "1"]].concat());
    let four = run(&[&args[..], &["--workers", "4"]].concat());
    assert_eq!(code(&one), 0);
    assert_eq!(one.stdout, four.stdout);
    assert_eq!(report(&one).seed, Some(9));
}

#[test]
fn counterexample_exits_one() {
    let out = run(&["ap", "tk", "--t", "2", "--m", "2", "--k", "3", "--json"]);
    assert_eq!(code(&out), 1);
    assert_eq!(report(&out).outcome, Outcome::Fails);
}

#[test]
fn budget_exhaustion_exits_three() {
    let out = run(&["ramsey", "exact", "--pattern", "k4", "--budget", "500", "--json"]);
    assert_eq!(code(&out), 3);
    let r = report(&out);
    assert!(r.budget_exhausted);
    let (lower, upper) = r.bounds().unwrap();
    assert!(upper.is_none_or(|u| lower <= u));
}

#[test]
fn usage_errors_leave_no_file() {
    let dir = tempfile::tempdir().unwrap();
    let target = dir.path().join("out.txt");
    assert_eq!(code(&run(&["frobnicate"])), 2);

    let bad = dir.path().join("bad.txt");
    std::fs::write(&bad, "4\n0 1\n2 9\n").unwrap();
    let out = run(&["match", "exact", "--graph", arg(&bad), "--s", "2", "--out", arg(&target)]);
    assert_eq!(code(&out), 2);
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 3"));
    assert!(!target.exists());
    assert_eq!(std::fs::read_dir(dir.path()).unwrap().count(), 1);

    let out = run(&["construct", "prism", "--n", "5", "--j", "1", "--out", arg(&target)]);
    assert_eq!(code(&out), 2);
    assert!(!target.exists());
}

#[test]
fn kst_stream_commands() {
    let dir = tempfile::tempdir().unwrap();
    let stream = dir.path().join("k4.txt");
    std::fs::write(&stream, "# complete graph\n\n0\n0 1\n0 1 2\n").unwrap();
    let out = run(&["kst", "blocks", "--stream", arg(&stream), "--n", "2", "--blocks", "2", "--json"]);
    assert_eq!(code(&out), 0);
    let details = report(&out).details.unwrap();
    assert_eq!(details["e"], serde_json::json!([2, 4]));
    let out = run(&["kst", "liminf", "--stream", arg(&stream), "--s", "2", "--nmax", "4", "--json"]);
    assert_eq!(code(&out), 0);
    let out = run(&["kst", "witness", "--stream", arg(&stream), "--s", "2", "--t", "2", "--n", "2", "--blocks", "2"]);
    assert_eq!(code(&out), 2);
    assert!(String::from_utf8_lossy(&out.stderr).contains("K_{2,2}"));
}

#[test]
fn verify_paper_prints_one_line_per_criterion() {
    let out = run(&["verify-paper", "--suite", "joints"]);
    assert_eq!(code(&out), 0);
    let text = String::from_utf8(out.stdout).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 2);
    assert!(lines.iter().all(|l| l.starts_with("[PASS]")));
}
