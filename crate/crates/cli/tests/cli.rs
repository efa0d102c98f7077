use std::io::Write;
use std::process::{Command, Output, Stdio};

use tempfile::NamedTempFile;

const K3: &str = "c triangle\np edge 3 3\ne 1 2\ne 1 3\ne 2 3\n";
const P3: &str = "p edge 3 2\ne 1 2\ne 2 3\n";

fn graph_file(text: &str) -> NamedTempFile {
    let mut f = NamedTempFile::new().unwrap();
    f.write_all(text.as_bytes()).unwrap();
    f
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_spinclique")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn solve_spinor_on_triangle() {
    let f = graph_file(K3);
    let out = run(&["solve", f.path().to_str().unwrap(), "--method", "spinor"]);
    assert!(out.status.success());
    assert!(stdout(&out).starts_with("k = 3, witness = {1,2,3}"), "{}", stdout(&out));
}

#[test]
fn solve_json_all_methods_agree() {
    let f = graph_file(P3);
    let out = run(&["solve", f.path().to_str().unwrap(), "--method", "all", "--json"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["agree"], true);
    for m in ["oracle", "spinor", "binary", "motzkin"] {
        assert_eq!(v[m]["k"], 2, "{m}");
    }
    assert_eq!(v["spinor"]["components"], 2);
}

#[test]
fn spinor_dump_of_path() {
    let f = graph_file(P3);
    let out = run(&["spinor", f.path().to_str().unwrap()]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["n"], 3);
    let indices: Vec<u64> = v["components"].as_array().unwrap().iter().map(|c| c["index"].as_u64().unwrap()).collect();
    assert_eq!(indices, [1, 4]);
}

#[test]
fn verify_passes() {
    let f = graph_file(K3);
    let out = run(&["verify", f.path().to_str().unwrap()]);
    assert!(out.status.success(), "{}", stdout(&out));
    assert!(stdout(&out).contains(" 0 failed"));
}

#[test]
fn decompose_triangle_eigenvalues() {
    let f = graph_file(K3);
    let out = run(&["decompose", f.path().to_str().unwrap()]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let eig: Vec<f64> = v["eigenvalues"].as_array().unwrap().iter().map(|x| x.as_f64().unwrap()).collect();
    for (got, want) in eig.iter().zip([2.0, -1.0, -1.0]) {
        assert!((got - want).abs() < 1e-9, "{eig:?}");
    }
    assert!(v.get("b").is_none_or(|b| b.is_null()));
}

#[test]
fn same_seed_is_byte_identical() {
    let text = "p edge 8 12\ne 1 2\ne 1 3\ne 2 3\ne 3 4\ne 4 5\ne 5 6\ne 6 7\ne 7 8\ne 1 8\ne 2 6\ne 3 7\ne 4 8\n";
    let f = graph_file(text);
    let path = f.path().to_str().unwrap();
    let args = ["--seed", "11", "solve", path, "--method", "motzkin", "--json", "--plain"];
    let a = run(&args);
    let b = run(&args);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn reads_stdin() {
    let mut child = Command::new(env!("CARGO_BIN_EXE_spinclique"))
        .args(["solve", "-"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(K3.as_bytes()).unwrap();
    let out = child.wait_with_output().unwrap();
    assert!(out.status.success());
    assert!(stdout(&out).starts_with("k = 3"));
}

#[test]
fn bad_input_exits_two() {
    let f = graph_file("p edge 3 1\ne 1 4\n");
    let out = run(&["solve", f.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 2"), "{}", String::from_utf8_lossy(&out.stderr));

    let out = run(&["solve", "/nonexistent/graph.dimacs"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn dense_guard_is_an_input_error() {
    let f = graph_file(K3);
    let out = run(&["--max-n-dense", "2", "solve", f.path().to_str().unwrap(), "--method", "binary"]);
    assert_eq!(out.status.code(), Some(2));
}
