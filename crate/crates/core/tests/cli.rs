use std::io::Write;
use std::process::{Command, Output, Stdio};

use tempfile::NamedTempFile;

fn pconn(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pconn")).args(args).output().unwrap()
}

fn file(text: &str) -> NamedTempFile {
    let mut f = NamedTempFile::new().unwrap();
    f.write_all(text.as_bytes()).unwrap();
    f
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn pc_of_a_star() {
    let f = file("n 4\n0 1\n0 2\n0 3\n");
    let o = pconn(&["pc", f.path().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("pc 3 "), "{}", stdout(&o));
}

#[test]
fn pc_json_from_graph6_on_stdin() {
    let mut child = Command::new(env!("CARGO_BIN_EXE_pconn"))
        .args(["--json", "pc", "-"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    // C5
    child.stdin.take().unwrap().write_all(b"Dhc\n").unwrap();
    let o = child.wait_with_output().unwrap();
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["value"], 2);
}

#[test]
fn color_interval_representation() {
    let f = file("0 0 1\n1 1 2\n2 2 3\n3 0 2\n4 1 3\n");
    let o = pconn(&["--rep", "interval", "color", "--method", "interval", f.path().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    assert!(stdout(&o).contains("verified true"));
}

#[test]
fn color_with_explicit_set() {
    // C5 with D = {0, 1, 2}
    let f = file("n 5\n0 1\n1 2\n2 3\n3 4\n4 0\n");
    let o = pconn(&["color", "--method", "dominating", "--set", "0,1,2", f.path().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let o = pconn(&["color", "--method", "dominating", "--set", "0,2", f.path().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn dominate_lists_sets() {
    let f = file("n 5\n0 1\n1 2\n2 3\n3 4\n");
    let o = pconn(&["dominate", "--kind", "two-way", f.path().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "[0, 1, 2, 3, 4]");
}

#[test]
fn verify_reports_pass_and_fail() {
    let o = pconn(&["verify", "L2.1"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("PASS L2.1"));

    // three triangles sharing a vertex: diameter 2, minimum degree 2, pc 3
    let f = file("F{eCG\n");
    let o = pconn(&["verify", "C3.1", "--corpus", f.path().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).starts_with("FAIL C3.1"));
}

#[test]
fn render_dot() {
    let g = file("n 3\n0 1\n1 2\n");
    let c = file("0 1 1\n1 2 2\n");
    let o = pconn(&[
        "render",
        g.path().to_str().unwrap(),
        "--coloring",
        c.path().to_str().unwrap(),
        "--highlight",
        "1",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("graph"));
}

#[test]
fn errors_exit_with_two() {
    let f = file("n 3\n0 1\n0 1\n");
    let o = pconn(&["pc", f.path().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("error"));
    let o = pconn(&["verify", "X9"]);
    assert_eq!(o.status.code(), Some(2));
}
