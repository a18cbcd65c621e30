use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn boxturan(args: &[&str], stdin: Option<&str>) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_boxturan"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    if let Some(text) = stdin {
        child.stdin.take().unwrap().write_all(text.as_bytes()).unwrap();
    }
    drop(child.stdin.take());
    child.wait_with_output().unwrap()
}

fn report(args: &[&str], stdin: Option<&str>) -> (i32, Value) {
    let out = boxturan(args, stdin);
    let doc = serde_json::from_slice(&out.stdout).unwrap_or_else(|e| {
        panic!("{e}: {}", String::from_utf8_lossy(&out.stdout));
    });
    (out.status.code().unwrap(), doc)
}

const DIAMOND: &str = r#"{"dim": 2, "boxes": [
    [[0, 10], [0, 10]],
    [[1, 2], [-1, 11]],
    [[5, 6], [-2, 12]],
    [[-3, 13], [3, 4]]
]}"#;

#[test]
fn formula_example() {
    let (code, doc) = report(&["formula", "--n", "6", "--k", "4", "--d", "2"], None);
    assert_eq!(code, 0);
    assert_eq!(doc["command"], "formula");
    assert_eq!(doc["results"]["T"], 13);
    assert_eq!(doc["results"]["branch"], "k>d");
    assert_eq!(doc["params"]["n"], 6);
    assert_eq!(doc["status"], "PASS");
}

#[test]
fn formula_low_k_branch() {
    let (_, doc) = report(&["formula", "--n", "6", "--k", "2", "--d", "2"], None);
    assert_eq!(doc["results"]["T"], 9);
    assert_eq!(doc["results"]["branch"], "k<=d");
    assert!(doc["results"]["psi"].is_null());
}

#[test]
fn verify_example() {
    let (code, doc) = report(&["verify", "--n", "6", "--k", "4", "--d", "2"], None);
    assert_eq!(code, 0);
    assert_eq!(doc["results"]["edges"], 13);
    assert_eq!(doc["results"]["depth"], 4);
}

#[test]
fn usage_and_domain_errors_exit_2() {
    assert_eq!(boxturan(&["formula", "--n", "6"], None).status.code(), Some(2));
    assert_eq!(boxturan(&["no-such-command"], None).status.code(), Some(2));
    assert_eq!(boxturan(&["formula", "--n", "2", "--k", "4", "--d", "2"], None).status.code(), Some(2));
    assert_eq!(boxturan(&["beta", "--alpha", "1/3", "--d", "2"], None).status.code(), Some(2));
    assert_eq!(boxturan(&["beta", "--alpha", "x", "--d", "2"], None).status.code(), Some(2));
    assert_eq!(boxturan(&["depth"], Some("{\"dim\": 1}")).status.code(), Some(2));
}

#[test]
fn family_commands_read_stdin() {
    let (code, doc) = report(&["depth"], Some(DIAMOND));
    assert_eq!(code, 0);
    assert_eq!(doc["results"]["depth"], 3);
    assert_eq!(doc["params"]["file"], "stdin");

    let out = boxturan(&["graph"], Some(DIAMOND));
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "n 4\n0 1\n0 2\n0 3\n1 3\n2 3\n");

    let (code, doc) = report(&["certify", "--k", "3"], Some(DIAMOND));
    assert_eq!(code, 0);
    assert_eq!(doc["results"]["holds"], true);
    assert_eq!(doc["results"]["formula"], 5);
}

#[test]
fn certify_rejects_a_too_deep_family() {
    let out = boxturan(&["certify", "--k", "2"], Some(DIAMOND));
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn k2m_accepts_edge_lists() {
    let octahedron = "n 6\n0 2\n0 3\n0 4\n0 5\n1 2\n1 3\n1 4\n1 5\n2 4\n2 5\n3 4\n3 5\n";
    let (code, doc) = report(&["k2m", "--m", "3"], Some(octahedron));
    assert_eq!(code, 0);
    assert_eq!(doc["results"]["verdict"], "FOUND");
    let (_, doc) = report(&["k2m", "--m", "2"], Some(DIAMOND));
    assert_eq!(doc["results"]["verdict"], "ABSENT");
}

#[test]
fn search_reports_and_is_deterministic() {
    let args = ["oracle-search", "--n", "6", "--k", "4", "--d", "2", "--budget", "2000", "--seed", "7"];
    let (code, a) = report(&args, None);
    assert_eq!(code, 0);
    assert_eq!(a["seed"], 7);
    assert_eq!(a["results"]["oracle"]["best_edges"], 13);
    let (_, b) = report(&args, None);
    assert_eq!(a["results"], b["results"]);
    let mut parallel = vec!["--workers", "4"];
    parallel.extend_from_slice(&args);
    let (_, c) = report(&parallel, None);
    assert_eq!(a["results"], c["results"]);
}

#[test]
fn oracle_exact_matches_formula() {
    let (code, doc) = report(&["oracle-exact", "--n", "5", "--k", "3"], None);
    assert_eq!(code, 0);
    assert_eq!(doc["results"]["oracle"]["best_edges"], 7);
    assert_eq!(doc["results"]["formula"], 7);
}

#[test]
fn helly_commands() {
    let (_, doc) = report(&["helly-guarantee", "--n", "6", "--d", "2", "--edges", "14"], None);
    assert_eq!(doc["results"]["guaranteed_depth"], 5);

    let (code, doc) = report(&["helly-witness", "--alpha", "1/2"], Some(DIAMOND));
    assert_eq!(code, 0);
    assert_eq!(doc["results"]["met_alpha"], true);
    assert_eq!(doc["results"]["alpha"], "1/2");

    let (_, doc) = report(&["beta", "--alpha", "3/4", "--d", "2", "--ns", "100,1000"], None);
    assert_eq!(doc["results"]["convergence"].as_array().unwrap().len(), 2);
    let beta = doc["results"]["beta"].as_f64().unwrap();
    assert!((beta - (1.0 - 0.5f64.sqrt())).abs() < 1e-12);

    let out = boxturan(&["beta", "--alpha", "3/4", "--d", "2", "--ns", "100", "--csv"], None);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("n,edges,guaranteed_depth,ratio,beta,error\n100,"));
}

#[test]
fn regularity_and_extraction() {
    let turan: String = {
        let mut s = String::from("n 9\n");
        for u in 0..9 {
            for v in u + 1..9 {
                if u % 3 != v % 3 {
                    s.push_str(&format!("{u} {v}\n"));
                }
            }
        }
        s
    };
    let (code, doc) = report(&["regularity", "--classes", "3", "--epsilon", "0", "--budget", "5000"], Some(&turan));
    assert_eq!(code, 0);
    assert_eq!(doc["results"]["success"], true);

    let (code, doc) = report(&["erdos-stone", "--d", "2", "--epsilon", "1/10", "--budget", "5000"], Some(&turan));
    assert_eq!(code, 0);
    assert_eq!(doc["results"]["witness"]["parts"].as_array().unwrap().len(), 3);

    let bipartite = "n 4\n0 2\n0 3\n1 2\n1 3\n";
    let (code, doc) = report(&["erdos-stone", "--d", "2", "--epsilon", "1/10", "--budget", "2000"], Some(bipartite));
    assert_eq!(code, 3);
    assert_eq!(doc["status"], "SEARCH-FAILED");
}

#[test]
fn sweep_csv() {
    let out = boxturan(&["sweep", "--max-n", "6", "--max-d", "2"], None);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("n,k,d,T,psi,construct_edges,depth,status"));
    assert!(text.contains("\n6,4,2,13,13,13,4,PASS\n"));
    assert!(text.contains("\n6,2,2,9,,9,2,PASS\n"));
    assert_eq!(lines.count(), 2 * 21);
}

#[test]
fn construct_output_round_trips_through_depth() {
    let (_, doc) = report(&["construct", "--n", "7", "--k", "5", "--d", "3"], None);
    assert_eq!(doc["results"]["edges"], 19);
    let family = doc["results"]["construction"]["family"].to_string();
    let (_, depth) = report(&["depth"], Some(&family));
    assert_eq!(depth["results"]["depth"], 5);
}
