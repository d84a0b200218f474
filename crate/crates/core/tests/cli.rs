use std::fs;

use serde_json::Value;
use tempfile::TempDir;

use rdr::cli::{run, EXIT_FAILED_CHECK, EXIT_INPUT, EXIT_OK, EXIT_USAGE};

struct Run {
    code: i32,
    stdout: String,
    stderr: String,
}

impl Run {
    fn json(&self) -> Value {
        serde_json::from_str(&self.stdout).expect("stdout is JSON")
    }
}

fn rdr(args: &[&str]) -> Run {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = run(std::iter::once("rdr").chain(args.iter().copied()), &mut out, &mut err);
    Run {
        code,
        stdout: String::from_utf8(out).unwrap(),
        stderr: String::from_utf8(err).unwrap(),
    }
}

#[test]
fn compute_triangle_json() {
    let r = rdr(&["compute", "--inline", "0 1;1 2;2 0"]);
    assert_eq!(r.code, EXIT_OK);
    let report = &r.json()[0];
    assert_eq!(report["rdr"], "18");
    assert_eq!(report["wiener"], 3);
    assert_eq!(report["kirchhoff"], "2");
    assert_eq!(report["rdr_exact"], true);
}

#[test]
fn compute_edge_list_file() {
    let dir = TempDir::new().unwrap();
    let path = dir.path().join("c3.txt");
    fs::write(&path, "# triangle\n10 20\n20 30\n\n30 10\n").unwrap();
    let r = rdr(&["compute", "--input", path.to_str().unwrap()]);
    assert_eq!(r.code, EXIT_OK);
    assert_eq!(r.json()[0]["rdr"], "18");
}

#[test]
fn compute_graph6_file_to_csv() {
    let dir = TempDir::new().unwrap();
    let path = dir.path().join("g.g6");
    fs::write(&path, "Bw\nCl\nCx\n").unwrap();
    let r = rdr(&["compute", "--input", path.to_str().unwrap(), "--format", "graph6", "--emit", "csv"]);
    assert_eq!(r.code, EXIT_OK);
    let mut reader = csv::Reader::from_reader(r.stdout.as_bytes());
    let header = reader.headers().unwrap().clone();
    assert_eq!(&header[0], "wiener");
    let rows: Vec<_> = reader.records().map(Result::unwrap).collect();
    assert_eq!(rows.len(), 3);
    let rdr_col = header.iter().position(|h| h == "rdr").unwrap();
    assert_eq!(&rows[0][rdr_col], "18");
    assert_eq!(&rows[1][rdr_col], "88/3");
    assert_eq!(&rows[2][rdr_col], "143/5");
}

#[test]
fn compute_rejects_disconnected_input() {
    let r = rdr(&["compute", "--inline", "0 1;2 3"]);
    assert_eq!(r.code, EXIT_INPUT);
    assert!(r.stderr.contains("not connected"));
    assert_eq!(r.json(), Value::Array(vec![]));
}

#[test]
fn compute_keeps_good_records_around_a_bad_one() {
    let dir = TempDir::new().unwrap();
    let path = dir.path().join("mixed.g6");
    // C_3, two disjoint edges, K_{1,3}
    let disconnected = rdr::graph::to_graph6(&rdr::graph::Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap());
    fs::write(&path, format!("Bw\n{disconnected}\nCs\n")).unwrap();
    let r = rdr(&["compute", "--input", path.to_str().unwrap(), "--format", "graph6"]);
    assert_eq!(r.code, EXIT_INPUT);
    assert!(r.stderr.contains("record 2"));
    assert_eq!(r.json().as_array().unwrap().len(), 2);
}

#[test]
fn compute_reports_parse_errors_as_usage() {
    assert_eq!(rdr(&["compute", "--inline", "0 x"]).code, EXIT_USAGE);
    assert_eq!(rdr(&["compute", "--inline", "0 0"]).code, EXIT_USAGE);
    assert_eq!(rdr(&["compute"]).code, EXIT_USAGE);
    assert_eq!(rdr(&["compute", "--input", "/definitely/missing"]).code, EXIT_USAGE);
}

#[test]
fn compute_s_np_shortcut() {
    let r = rdr(&["compute", "--n", "5", "--p", "3"]);
    assert_eq!(r.code, EXIT_OK);
    assert_eq!(r.json()[0]["rdr"], "211/5");
    assert_eq!(rdr(&["compute", "--n", "5", "--p", "6"]).code, EXIT_USAGE);
}

#[test]
fn sweep_seven() {
    let r = rdr(&["sweep", "--n", "7", "--emit", "csv"]);
    assert_eq!(r.code, EXIT_OK);
    let lines: Vec<_> = r.stdout.lines().collect();
    assert_eq!(lines[0], "n,count,max_value,unique,matches_theorem,argmax_code");
    assert!(lines[1].starts_with("7,33,392/5,1,1,"));
}

#[test]
fn sweep_four_has_a_different_maximizer() {
    let r = rdr(&["sweep", "--n", "4"]);
    assert_eq!(r.code, EXIT_FAILED_CHECK);
    assert_eq!(r.json()["max_value"], "88/3");
    assert_eq!(r.json()["matches_theorem"], false);
}

#[test]
fn sweep_range_errors() {
    assert_eq!(rdr(&["sweep", "--n", "2"]).code, EXIT_USAGE);
    let r = rdr(&["sweep", "--n", "10"]);
    assert_eq!(r.code, EXIT_USAGE);
    assert!(r.stderr.contains("--allow-large-n"));
    assert_eq!(rdr(&["sweep", "--n", "12", "--allow-large-n"]).code, EXIT_USAGE);
    assert_eq!(rdr(&["sweep", "--n", "5", "--jobs", "0"]).code, EXIT_USAGE);
    assert_eq!(rdr(&["sweep", "--n", "5", "--index", "bogus"]).code, EXIT_USAGE);
}

#[test]
fn sweep_other_indices() {
    let r = rdr(&["sweep", "--n", "5", "--index", "wiener"]);
    assert_eq!(r.json()["index"], "wiener");
    assert_eq!(r.json()["count"], 5);
}

#[test]
fn output_is_independent_of_jobs() {
    for args in [["sweep", "--n", "8"], ["verify", "--n", "7"], ["enumerate", "--n", "7"]] {
        let one = rdr(&[args[0], args[1], args[2], "--jobs", "1"]);
        let many = rdr(&[args[0], args[1], args[2], "--jobs", "4"]);
        assert_eq!(one.stdout, many.stdout, "{args:?}");
        assert_eq!(one.code, many.code);
    }
}

#[test]
fn verify_three_is_vacuous() {
    let r = rdr(&["verify", "--n", "3"]);
    assert_eq!(r.code, EXIT_OK);
    assert_eq!(r.json()["passed"], true);
}

#[test]
fn verify_six_reports_the_four_cycle() {
    let r = rdr(&["verify", "--n", "6"]);
    assert_eq!(r.code, EXIT_FAILED_CHECK);
    let report = r.json();
    let counterexamples = report["counterexamples"].as_array().unwrap();
    assert_eq!(counterexamples.len(), 1);
    assert_eq!(counterexamples[0]["graph6"], "Cl");
    assert_eq!(counterexamples[0]["kind"], "cycle-shrink");
}

#[test]
fn transform_s75_is_one_shrink() {
    let r = rdr(&["transform", "--n", "7", "--p", "5"]);
    assert_eq!(r.code, EXIT_OK);
    let out = r.json();
    let steps = out["steps"].as_array().unwrap();
    assert_eq!(steps.len(), 1);
    assert_eq!(steps[0]["kind"], "cycle-shrink");
    assert_eq!(steps[0]["rdr_after"], "392/5");
    assert_eq!(out["strictly_increasing"], true);
}

#[test]
fn transform_fixed_point_and_errors() {
    let r = rdr(&["transform", "--n", "7", "--p", "3"]);
    assert_eq!(r.code, EXIT_OK);
    assert!(r.json()["steps"].as_array().unwrap().is_empty());
    let tree = rdr(&["transform", "--inline", "0 1;1 2;2 3"]);
    assert_eq!(tree.code, EXIT_INPUT);
    assert_eq!(rdr(&["transform", "--inline", "0 1;1 2;2 0;3 4;4 5;5 3"]).code, EXIT_INPUT);
}

#[test]
fn transform_csv_has_header_even_without_steps() {
    let r = rdr(&["transform", "--n", "4", "--p", "3", "--emit", "csv"]);
    assert_eq!(r.code, EXIT_OK);
    assert_eq!(r.stdout.lines().count(), 1);
    assert!(r.stdout.starts_with("kind,site,"));
}

#[test]
fn enumerate_writes_to_file() {
    let dir = TempDir::new().unwrap();
    let path = dir.path().join("u5.csv");
    let r = rdr(&["enumerate", "--n", "5", "--emit", "csv", "--out", path.to_str().unwrap()]);
    assert_eq!(r.code, EXIT_OK);
    assert!(r.stdout.is_empty());
    let text = fs::read_to_string(&path).unwrap();
    assert_eq!(text.lines().count(), 6);
    assert_eq!(text.lines().next(), Some("graph6,code"));
}

#[test]
fn unknown_arguments_are_usage_errors() {
    assert_eq!(rdr(&[]).code, EXIT_USAGE);
    assert_eq!(rdr(&["frob"]).code, EXIT_USAGE);
    assert_eq!(rdr(&["sweep"]).code, EXIT_USAGE);
    assert_eq!(rdr(&["--help"]).code, EXIT_OK);
}
