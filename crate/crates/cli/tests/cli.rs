use std::path::PathBuf;
use std::process::{Command, Output};

fn fixture(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../fixtures")
        .join(format!("{name}.quiver"))
        .to_string_lossy()
        .into_owned()
}

fn hall(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hall"))
        .args(args)
        .env_remove("HALL_AUDIT_CAP")
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn write(dir: &tempfile::TempDir, name: &str, text: &str) -> String {
    let p = dir.path().join(name);
    std::fs::write(&p, text).unwrap();
    p.to_string_lossy().into_owned()
}

#[test]
fn classify_reports_shape_and_verdicts() {
    let o = hall(&["classify", &fixture("delta0")]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("Δ_0"), "{out}");
    assert!(
        out.contains("ideal_all_r=true") && out.contains("subring_all_r=true"),
        "{out}"
    );

    let o = hall(&["--format", "json", "classify", &fixture("kronecker")]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["subring_r1"], false);
}

#[test]
fn products_of_simples_on_a_point() {
    let dir = tempfile::tempdir().unwrap();
    let s = write(
        &dir,
        "s.json",
        r#"{"quiver": "L1", "p": 2, "dims": {"1": 1}, "maps": {}}"#,
    );
    let q = fixture("L1");
    let plain = hall(&["product", &q, &s, &s]);
    assert_eq!(plain.status.code(), Some(0));
    assert!(
        stdout(&plain).starts_with("3 [dim 2]"),
        "{}",
        stdout(&plain)
    );
    let twisted = hall(&["product", "--twisted", &q, &s, &s]);
    assert!(
        stdout(&twisted).starts_with("3v^1 [dim 2]"),
        "{}",
        stdout(&twisted)
    );
}

#[test]
fn audits_exit_with_their_verdict() {
    let pass = hall(&["check", &fixture("L3"), "--mode", "ideal", "--r", "2"]);
    assert_eq!(pass.status.code(), Some(0), "{}", stdout(&pass));
    let fail = hall(&[
        "check",
        &fixture("kronecker"),
        "--mode",
        "subring",
        "--r",
        "1",
        "--replay",
    ]);
    assert_eq!(fail.status.code(), Some(1));
    assert!(stdout(&fail).contains("FAIL"));
}

#[test]
fn audit_json_is_deterministic() {
    let args = [
        "--format",
        "json",
        "check",
        &fixture("zigzag"),
        "--mode",
        "ideal",
        "--max-dim",
        "4",
    ];
    let one = hall(&[&args[..], &["--threads", "1"]].concat());
    let four = hall(&[&args[..], &["--threads", "4"]].concat());
    assert_eq!(one.stdout, four.stdout);
    let v: serde_json::Value = serde_json::from_slice(&one.stdout).unwrap();
    assert_eq!(v["verdict"], "FAIL");
    assert!(v["certificate"]["hall_number"].as_u64().unwrap() >= 1);
}

#[test]
fn certify_all_constructions() {
    let o = hall(&["certify", "all", "--replay"]);
    assert_eq!(
        o.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&o.stderr)
    );
    let out = stdout(&o);
    assert!(
        out.contains("End dim = 4, local: yes") && out.contains("End dim = 6, local: yes"),
        "{out}"
    );
    assert_eq!(hall(&["certify", "no-such-thing"]).status.code(), Some(2));
}

#[test]
fn enumerate_and_decompose() {
    let o = hall(&[
        "--format",
        "json",
        "enumerate",
        &fixture("delta0"),
        "--dim",
        "2",
        "--nilpotent",
    ]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["count"], 2);

    let dir = tempfile::tempdir().unwrap();
    let m = write(
        &dir,
        "m.json",
        r#"{"quiver": "kronecker", "p": 2, "dims": {"1": 1, "2": 1}, "maps": {"a": [[0]], "b": [[0]]}}"#,
    );
    let o = hall(&["decompose", &fixture("kronecker"), &m]);
    assert_eq!(
        o.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&o.stderr)
    );
    assert!(stdout(&o).contains("s = 2"), "{}", stdout(&o));
}

#[test]
fn input_errors_and_capacity() {
    let dir = tempfile::tempdir().unwrap();
    let bad = write(&dir, "bad.quiver", "quiver x\narrow a: 1 -> 2\n");
    let o = hall(&["classify", &bad]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("2:"));
    assert_eq!(
        hall(&["classify", "/nonexistent/file.quiver"])
            .status
            .code(),
        Some(2)
    );
    let cap = hall(&[
        "--cap",
        "10",
        "check",
        &fixture("kronecker"),
        "--max-dim",
        "5",
    ]);
    assert_eq!(cap.status.code(), Some(3));
}

#[test]
fn output_file() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("report.txt");
    let o = hall(&["--out", out.to_str().unwrap(), "classify", &fixture("v42")]);
    assert_eq!(o.status.code(), Some(0));
    assert!(std::fs::read_to_string(out).unwrap().contains("V_"));
}
