use serde_json::Value;
use std::io::Write;
use std::process::{Command, Stdio};

fn mdlab_env(args: &[&str], stdin: &str, env: &[(&str, &str)]) -> (i32, String, String) {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_mdlab"));
    cmd.args(args).env_remove("MDLAB_BUDGET_MS");
    for (k, v) in env {
        cmd.env(k, v);
    }
    let mut child = cmd
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    let out = child.wait_with_output().unwrap();
    (
        out.status.code().unwrap(),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn mdlab(args: &[&str], stdin: &str) -> (i32, String, String) {
    mdlab_env(args, stdin, &[])
}

fn json(text: &str) -> Value {
    serde_json::from_str(text).unwrap_or_else(|e| panic!("{e}: {text}"))
}

#[test]
fn md_triangle() {
    let (code, out, _) = mdlab(&["md", "Bw"], "");
    assert_eq!(code, 0);
    let v = json(&out);
    assert_eq!(v["value"], 1);
    assert_eq!(v["certificate"]["colors"], serde_json::json!([1, 1, 1]));
    assert!(v["stats"]["nodes"].is_u64());
}

#[test]
fn gen_pipes_into_md() {
    let (_, h7, _) = mdlab(&["gen", "H", "7"], "");
    let (code, out, _) = mdlab(&["md", "-"], &h7);
    assert_eq!(code, 0);
    let v = json(&out);
    assert_eq!(v["value"], 1);
    assert_eq!(v["m"], 9);
}

#[test]
fn gen_annotations() {
    let (code, out, _) = mdlab(&["gen", "H_nr", "9", "3"], "");
    assert_eq!(code, 0);
    let mut lines = out.lines();
    let g6 = lines.next().unwrap();
    let note = json(lines.next().unwrap());
    assert_eq!(note["n"], 9);
    assert!(note["labels"].as_object().unwrap().keys().any(|k| k.starts_with('q')));
    let (_, md, _) = mdlab(&["md", g6], "");
    assert_eq!(json(&md)["value"], 3);
}

#[test]
fn census_odd_branch() {
    let (code, out, _) = mdlab(&["census", "g", "--n", "7", "--r", "3"], "");
    assert_eq!(code, 0);
    let v = json(&out);
    let r = &v["reports"][0];
    assert_eq!(r["value"], 8);
    assert_eq!(r["verified"], true);
    assert_eq!(r["witness_edges"], 9);
    assert_eq!(r["witness_md"], 1);
}

#[test]
fn census_from_file() {
    let dir = std::env::temp_dir().join(format!("mdlab-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let file = dir.join("four.g6");
    // Every connected graph on four vertices.
    std::fs::write(&file, "# order 4\nCF\nCU\nCV\nC]\nC^\nC~\n").unwrap();
    let path = file.to_str().unwrap();
    let (code, out, err) = mdlab(&["census", "f", "--n", "4", "--graphs", path], "");
    assert_eq!(code, 0, "{err}");
    let v = json(&out);
    assert_eq!(v["graphs"], 6);
    assert_eq!(v["all_verified"], true);
    let (code, _, err) = mdlab(&["census", "f", "--n", "5", "--graphs", path], "");
    assert_eq!(code, 2);
    assert!(err.contains("error"));
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn long_run_gate() {
    let (code, _, err) = mdlab(&["census", "f", "--n", "8"], "");
    assert_eq!(code, 2);
    assert!(err.contains("--long-run"));
}

#[test]
fn distinct_error_messages() {
    let (c1, _, e1) = mdlab(&["md", "B"], "");
    let (c2, _, e2) = mdlab(&["gen", "wheel", "5"], "");
    let (c3, _, e3) = mdlab(&["check", "no-such-suite"], "");
    assert_eq!((c1, c2, c3), (2, 2, 2));
    assert!(e1.contains("graph6"));
    assert!(e2.contains("unknown family"));
    assert!(e3.contains("unknown check"));
}

#[test]
fn budget_exhaustion_exits_3() {
    // A 2-connected graph whose upper bound is not tight, so the search has
    // to run.
    let (_, g, _) = mdlab(&["gen", "H_nr", "11", "5"], "");
    let g6 = g.lines().next().unwrap();
    let (code, out, err) = mdlab(&["md", g6, "--node-budget", "1"], "");
    assert_eq!(code, 3, "{out}{err}");
    assert_eq!(json(&out)["status"], "unknown");
    let (code, _, _) = mdlab_env(&["md", g6], "", &[("MDLAB_BUDGET_MS", "oops")]);
    assert_eq!(code, 2);
    let (code, out, _) = mdlab_env(&["md", g6], "", &[("MDLAB_BUDGET_MS", "60000")]);
    assert_eq!(code, 0);
    assert_eq!(json(&out)["value"], 5);
}

#[test]
fn verify_coloring_reports_unseparated_pairs() {
    let (code, out, _) = mdlab(&["verify-coloring", "-"], r#"{"graph6": "Cl", "colors": [1, 2, 3, 3]}"#);
    assert_eq!(code, 1);
    let v = json(&out);
    assert_eq!(v["md_coloring"], false);
    assert!(!v["unseparated"].as_array().unwrap().is_empty());
    let (code, _, _) = mdlab(&["verify-coloring", "-"], r#"{"graph6": "Cl", "colors": [1, 2]}"#);
    assert_eq!(code, 2);
}

#[test]
fn product_and_dot() {
    let (code, out, _) = mdlab(&["product", "cartesian", "A_", "Bw"], "");
    assert_eq!(code, 0);
    let (_, md, _) = mdlab(&["md", out.trim()], "");
    assert_eq!(json(&md)["value"], 2);
    let (code, _, _) = mdlab(&["product", "box", "A_", "Bw"], "");
    assert_eq!(code, 2);
    let (code, dot, _) = mdlab(&["dot", "Bw"], "");
    assert_eq!(code, 0);
    assert!(dot.starts_with("graph"));
    assert_eq!(dot.matches("--").count(), 3);
}

#[test]
fn check_list_and_run() {
    let (code, out, _) = mdlab(&["check", "list"], "");
    assert_eq!(code, 0);
    assert!(out.lines().count() >= 20);
    let (code, out, _) = mdlab(&["check", "two-connected-cap", "--max-order", "6"], "");
    assert_eq!(code, 0);
    assert_eq!(json(&out)["passed"], true);
}
