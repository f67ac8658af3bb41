//! End-to-end checks of the binary: formats, determinism and exit codes.
//! Only the fast fixtures run here; the heavy p720 spectra are exercised by
//! the library's acceptance suite.

use std::process::{Command, Output};

fn polyspec(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_polyspec"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf8 stdout")
}

#[test]
fn graph_stats_and_edge_list() {
    let dir = std::env::temp_dir().join("polyspec-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let edge_path = dir.join("dodec.edges");
    let out = polyspec(&[
        "graph",
        "dodecahedron",
        "--format",
        "text",
        "--out",
        edge_path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("vertices 20"));
    assert!(text.contains("regular_degree 3"));
    let edges = std::fs::read_to_string(&edge_path).unwrap();
    assert!(edges.starts_with("# vertices=20\n"));
    assert_eq!(edges.lines().count(), 31);
    // lines are "u v" ascending
    let first = edges.lines().nth(1).unwrap();
    assert_eq!(first.split_whitespace().count(), 2);
}

#[test]
fn graph_json_is_deterministic() {
    let a = polyspec(&["graph", "icosidodecahedron"]);
    let b = polyspec(&["graph", "icosidodecahedron"]);
    assert!(a.status.success());
    assert_eq!(stdout(&a), stdout(&b));
    let text = stdout(&a);
    assert!(text.contains("\"vertices\": 30"));
    assert!(text.contains("\"regular_degree\": 4"));
    assert!(text.contains("\"adjacency\""));
}

#[test]
fn spectrum_both_on_the_a5_pipeline() {
    let out = polyspec(&[
        "spectrum",
        "--fixture",
        "icosidodecahedron",
        "--method",
        "both",
    ]);
    assert!(out.status.success(), "cross-validation must pass");
    let text = stdout(&out);
    assert!(text.contains("\"verdict\": \"pass\""));
    assert!(text.contains("\"zero_padding\": 30"));
    assert!(text.contains("\"per_irrep\""));
    // 5 irreducible blocks for A5
    assert_eq!(text.matches("\"class_count_index\"").count(), 5);
    // byte-identical on a second run, and for any --jobs value
    let again = polyspec(&[
        "spectrum",
        "--fixture",
        "icosidodecahedron",
        "--method",
        "both",
        "--jobs",
        "3",
    ]);
    assert_eq!(text, stdout(&again));
}

#[test]
fn spectrum_direct_csv() {
    let out = polyspec(&[
        "spectrum",
        "--fixture",
        "dodecahedron",
        "--method",
        "direct",
        "--format",
        "csv",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.starts_with("eigenvalue,multiplicity\n"));
    // dodecahedral graph: top eigenvalue 3, simple
    assert!(text.trim_end().ends_with("3.00000000000e0,1"));
}

#[test]
fn spectrum_text_top_eigenvalue_of_trunc() {
    let out = polyspec(&[
        "spectrum",
        "--fixture",
        "truncdodecahedron",
        "--method",
        "direct",
        "--format",
        "text",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.trim_end().ends_with("3.00000000000e0 x1"));
}

#[test]
fn spectrum_cell600_top_eigenvalue() {
    let out = polyspec(&[
        "spectrum",
        "--fixture",
        "cell600",
        "--method",
        "direct",
        "--format",
        "text",
    ]);
    assert!(out.status.success());
    // connected 12-regular: top eigenvalue 12, simple
    assert!(stdout(&out).trim_end().ends_with("1.20000000000e1 x1"));
}

#[test]
fn verify_identities_suite_passes() {
    let out = polyspec(&["verify", "--suite", "identities", "--format", "text"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("suite identities: PASS"));
    assert!(!text.contains("FAIL]"));
}

#[test]
fn chartable_a5_json() {
    let out = polyspec(&["chartable", "--group", "a5"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("\"group\": \"A5\""));
    assert!(text.contains("\"class_count\": 5"));
    // degrees 1,3,3,4,5 appear as irrep degrees
    assert_eq!(text.matches("\"degree\": 3").count(), 2);
    assert_eq!(text.matches("\"degree\": 5").count(), 1);
}

#[test]
fn usage_errors_exit_2() {
    let unknown_graph = polyspec(&["graph", "hypercube"]);
    assert_eq!(unknown_graph.status.code(), Some(2));

    let blocks_on_non_pipeline = polyspec(&[
        "spectrum",
        "--fixture",
        "cell600",
        "--method",
        "blocks",
    ]);
    assert_eq!(blocks_on_non_pipeline.status.code(), Some(2));

    let bad_tol = polyspec(&[
        "spectrum",
        "--fixture",
        "dodecahedron",
        "--tol",
        "-1.0",
    ]);
    assert_eq!(bad_tol.status.code(), Some(2));

    let bad_suite = polyspec(&["verify", "--suite", "everything"]);
    assert_eq!(bad_suite.status.code(), Some(2));
}

#[test]
fn seed_env_var_is_accepted_and_ignored() {
    let out = Command::new(env!("CARGO_BIN_EXE_polyspec"))
        .env("POLYSPEC_SEED", "12345")
        .args(["graph", "dodecahedron", "--format", "text"])
        .output()
        .expect("binary runs");
    assert!(out.status.success());
}
