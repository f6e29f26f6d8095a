//! End-to-end checks of the command-line surface: golden outputs, exit
//! codes, format handling and the work-bound override.

use std::io::Write;
use std::process::{Command, Output, Stdio};

fn factorlab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_factorlab"))
        .args(args)
        .env_remove("FACTORLAB_WORKBOUND")
        .output()
        .expect("binary runs")
}

fn factorlab_stdin(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_factorlab"))
        .args(args)
        .env_remove("FACTORLAB_WORKBOUND")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    child
        .stdin
        .as_mut()
        .unwrap()
        .write_all(stdin.as_bytes())
        .unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn props_q3_golden_json_is_byte_stable() {
    let golden = "{\"name\":\"Q3\",\"n\":8,\"m\":12,\"connected\":true,\"bipartite\":true,\
                  \"girth\":4,\"pmh\":true,\"2fh\":false,\"e2f\":true,\"malleable\":[]}\n";
    let first = factorlab(&["props", "--name", "Q3"]);
    assert!(first.status.success());
    assert_eq!(stdout(&first), golden);
    let second = factorlab(&["props", "--name", "Q3"]);
    assert_eq!(
        first.stdout, second.stdout,
        "output must be byte-identical across runs"
    );
}

#[test]
fn props_text_output_and_exhaustive_table() {
    let out = factorlab(&["props", "--name", "K4", "--output", "text"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("pmh=true"));
    assert!(text.contains("2fh=true"));
    let out = factorlab(&["props", "--name", "Q3", "--exhaustive"]);
    let text = stdout(&out);
    assert!(text.contains("\"extension_counts\""));
}

#[test]
fn props_disconnected_input_warns_and_errors_fields() {
    let out = factorlab_stdin(
        &["props", "-", "--format", "edgelist"],
        "6 6\n0 1\n1 2\n0 2\n3 4\n4 5\n3 5\n",
    );
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("\"connected\":false"));
    assert!(text.contains("\"pmh\":null"));
    assert!(text.contains("\"2fh\":null"));
    assert!(text.contains("\"errors\""));
    let warn = String::from_utf8(out.stderr.clone()).unwrap();
    assert!(warn.contains("disconnected"));
    // e2f and girth still computed
    assert!(text.contains("\"e2f\":false"));
    assert!(text.contains("\"girth\":3"));
}

#[test]
fn catalog_list_and_heawood_edge_list() {
    let out = factorlab(&["catalog", "--list"]);
    assert!(stdout(&out).contains("Heawood"));
    let out = factorlab(&["catalog", "--name", "Heawood", "--format", "edgelist"]);
    let text = stdout(&out);
    assert!(text.starts_with("14 21\n"));
    assert_eq!(text.lines().count(), 22);
}

#[test]
fn construct_star_script_from_the_docs() {
    let script = r#"{"base": "K3,3", "ops": [{"op":"star", "at": 0, "attach":"Q3", "attachAt": 0, "pairing":[0,1,2]}]}"#;
    let out = factorlab_stdin(&["construct", "-"], script);
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let text = stdout(&out);
    assert!(text.starts_with("12 18\n"));
    // result must still be cubic: feed it back through props
    let props = factorlab_stdin(&["props", "-", "--format", "edgelist"], &text);
    assert!(stdout(&props).contains("\"bipartite\":true"));
}

#[test]
fn construct_y_extension_script() {
    let script = r#"{"base": "K4", "ops": [{"op": "y", "at": 0}]}"#;
    let out = factorlab_stdin(&["construct", "-"], script);
    assert!(out.status.success());
    assert!(stdout(&out).starts_with("6 9\n"));
}

#[test]
fn construct_two_cut_script() {
    let script = r#"{"base": "C4", "ops": [{"op": "2cut", "atEdge": 0, "attach": "C4", "attachEdge": 0, "orientation": "straight"}]}"#;
    let out = factorlab_stdin(&["construct", "-"], script);
    assert!(out.status.success());
    assert!(stdout(&out).starts_with("8 8\n"));
}

#[test]
fn verify_paper_single_check_exits_zero() {
    let out = factorlab(&["verify-paper", "--id", "F-Q3"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("pass"));
    let out = factorlab(&["verify-paper", "--id", "F-Q3", "--output", "json"]);
    let line = stdout(&out);
    assert!(line.contains("\"verdict\":true"));
}

#[test]
fn scan_is_deterministic_across_jobs() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("graphs.g6");
    // K4 and the two-vertex one-edge graph
    std::fs::write(&path, "C~\nA_\n").unwrap();
    let p = path.to_str().unwrap();
    let one = factorlab(&["scan", p, "--filter", "connected", "--jobs", "1"]);
    let four = factorlab(&["scan", p, "--filter", "connected", "--jobs", "4"]);
    assert!(one.status.success());
    assert_eq!(one.stdout, four.stdout);
    let text = stdout(&one);
    assert_eq!(text.lines().count(), 2);
    assert!(text.contains("\"counterexample\":false"));
}

#[test]
fn scan_filters_and_text_output() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("graphs.edges");
    let theta = "2 3\n0 1\n0 1\n0 1\n";
    let k4 = "4 6\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n";
    std::fs::write(&path, format!("{}\n{}", theta, k4)).unwrap();
    let out = factorlab(&[
        "scan",
        path.to_str().unwrap(),
        "--format",
        "edgelist",
        "--filter",
        "cubic,girth>=3",
        "--output",
        "text",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    // the triple edge has girth 2 and is filtered out; K4 survives
    assert!(text.contains("survivor=no"));
    assert!(text
        .lines()
        .any(|l| l.contains("n=4") && l.contains("survivor=yes")));
}

#[test]
fn usage_errors_exit_2() {
    let out = factorlab(&["props", "--no-such-flag"]);
    assert_eq!(out.status.code(), Some(2));
    let out = factorlab(&["scan", "-", "--filter", "prime"]);
    assert_eq!(out.status.code(), Some(2));
    let out = factorlab(&["catalog", "--name", "nonsense"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn workbound_env_var_caps_the_search() {
    let out = Command::new(env!("CARGO_BIN_EXE_factorlab"))
        .args(["props", "--name", "Heawood"])
        .env("FACTORLAB_WORKBOUND", "3")
        .output()
        .unwrap();
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("work bound exceeded"), "{}", text);
    assert!(text.contains("\"pmh\":null"));
}
