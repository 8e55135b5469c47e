use std::io::Write;
use std::process::{Command, Output, Stdio};

fn eta(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_eta"))
        .args(args)
        .env("ETA_THREADS", "1")
        .output()
        .unwrap()
}

fn eta_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_eta"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(input.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

#[test]
fn compute_outputs() {
    let o = eta(&["compute", "--k", "1", "--lambda", "1:t1"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(
        v,
        serde_json::json!({"terms":[{"coeff":"1","vars":{"b1":1}},{"coeff":"-1","vars":{"t1":1}}]})
    );
    let o = eta(&["compute", "--k", "1", "--lambda", "-", "--format", "text"]);
    assert_eq!(stdout(&o).trim(), "1");
    let o = eta(&[
        "compute", "--k", "1", "--lambda", "2,1:t1", "--single", "--format", "text",
    ]);
    assert_eq!(stdout(&o).trim(), "b1*b2 - b3");
    let o = eta(&["compute", "--k", "1", "--lambda", "1:t2", "--format", "latex"]);
    assert_eq!(stdout(&o).trim(), "\\wt{b}_{1}");
}

#[test]
fn compute_hat_and_expansions() {
    let o = eta(&[
        "compute", "--k", "1", "--lambda", "1", "--hat", "--format", "text",
    ]);
    assert_eq!(stdout(&o).trim(), "bt1 + b1 - t1");
    let o = eta(&[
        "compute", "--k", "1", "--lambda", "2,1:t2", "--expand", "eta", "--format", "text",
    ]);
    assert_eq!(stdout(&o).trim(), "2,1:t2: 1");
    let o = eta(&["compute", "--k", "1", "--lambda", "2,1:t2", "--expand", "b"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert!(v.as_array().unwrap().iter().any(|e| e["partition"] == "2,1:t2"));
}

#[test]
fn usage_errors_exit_two() {
    let o = eta(&["compute", "--k", "1", "--lambda", "2,x:t1"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("position 2"), "{}", stderr(&o));
    let o = eta(&["compute", "--k", "1", "--lambda", "2:t1"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("the type is positive exactly when some part equals k=1"));
    assert_eq!(eta(&["verify", "nonsense"]).status.code(), Some(2));
    assert_eq!(
        eta(&["verify", "covers", "--k", "2", "--n", "2"]).status.code(),
        Some(2)
    );
    assert_eq!(eta(&["compute", "--k", "1"]).status.code(), Some(2));
    let bad = Command::new(env!("CARGO_BIN_EXE_eta"))
        .args(["verify", "tables"])
        .env("ETA_THREADS", "zero")
        .output()
        .unwrap();
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn normal_form_and_basis_expand_read_json() {
    let square = r#"{"terms":[{"coeff":"1","vars":{"b2":2}}]}"#;
    let o = eta_stdin(&["normal-form", "--k", "1", "--format", "text"], square);
    assert!(o.status.success(), "{}", stderr(&o));
    assert_eq!(stdout(&o).trim(), "bt1*b3 + b1*b3 - b4");
    let btilde = r#"{"terms":[{"coeff":"1","vars":{"bt1":1}}]}"#;
    let o = eta_stdin(
        &["basis-expand", "--k", "1", "--basis", "eta", "--format", "text"],
        btilde,
    );
    assert_eq!(stdout(&o).trim(), "1:t2: 1");
    let o = eta_stdin(&["normal-form", "--k", "1"], "{\"terms\": 3}");
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn schubert_and_enumerate() {
    assert_eq!(stdout(&eta(&["schubert", "--perm", "3,1,2"])).trim(), "t1^2");
    assert_eq!(stdout(&eta(&["schubert", "--perm", "1,3,2"])).trim(), "t1 + t2");
    assert_eq!(eta(&["schubert", "--perm", "1,1"]).status.code(), Some(2));
    let o = eta(&[
        "enumerate",
        "--k",
        "1",
        "--rows",
        "2",
        "--cols",
        "3",
        "--format",
        "json",
    ]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v.as_array().unwrap().len(), 12);
    let o = eta(&["enumerate", "--k", "1", "--n", "3"]);
    assert!(stdout(&o).ends_with("12 typed partitions\n"));
}

#[test]
fn verify_tables_and_covers() {
    let o = eta(&["verify", "tables"]);
    assert!(o.status.success());
    assert!(stdout(&o).ends_with("30/30 passed\n"));
    let o = eta(&["verify", "covers", "--k", "1", "--n", "3"]);
    assert!(o.status.success(), "{}", stdout(&o));
    let out = stdout(&o);
    let flagged: Vec<&str> = out.lines().filter(|l| l.ends_with("(ideal-required)")).collect();
    assert_eq!(flagged.len(), 2, "{out}");
    assert!(flagged.iter().any(|l| l.contains("H[2,1:t2] = H[1,1:t2] (d1)")));
    assert!(flagged.iter().any(|l| l.contains("H[2,1:t1] = H[1,1:t1] (g)")));
}

#[test]
fn verify_is_deterministic() {
    let args = ["verify", "splitting", "--max-weight", "4"];
    let a = eta(&args);
    let b = Command::new(env!("CARGO_BIN_EXE_eta"))
        .args(args)
        .env("ETA_THREADS", "4")
        .output()
        .unwrap();
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
}
