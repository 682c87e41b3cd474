use std::process::Command;

fn verify(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_verify"))
        .args(args)
        .output()
        .expect("run verify");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

#[test]
fn json_report_for_cubic_surface() {
    let (code, stdout, _) = verify(&[
        "--n-min", "2", "--n-max", "2", "--suite", "fano", "--format", "json",
    ]);
    assert_eq!(code, 0);
    let rows: serde_json::Value = serde_json::from_str(&stdout).unwrap();
    let lines = rows
        .as_array()
        .unwrap()
        .iter()
        .find(|r| r["check_id"] == "fano.lines_count")
        .unwrap();
    assert_eq!(lines["n"], 2);
    assert_eq!(lines["status"], "pass");
    assert_eq!(lines["computed"], "27");
    assert_eq!(lines["expected"], "27");
    for key in [
        "check_id",
        "n",
        "status",
        "computed",
        "expected",
        "elapsed_ms",
    ] {
        assert!(lines.get(key).is_some(), "{key}");
    }
}

#[test]
fn text_report_and_several_suites() {
    let (code, stdout, _) = verify(&[
        "--n-min",
        "3",
        "--n-max",
        "3",
        "--suite",
        "hodge,diagonal",
        "--format",
        "text",
    ]);
    assert_eq!(code, 0);
    assert!(stdout.starts_with("check_id"));
    assert!(stdout.contains("hodge.b1_fano"));
    assert!(stdout.contains("diagonal.gamma3_coh"));
    assert!(!stdout.contains("fano.lines_count"));
}

#[test]
fn writes_to_out_path() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let (code, stdout, _) = verify(&[
        "--n-min",
        "1",
        "--n-max",
        "2",
        "--suite",
        "all",
        "--format",
        "json",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(code, 0);
    assert!(stdout.is_empty());
    let rows: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert!(!rows.as_array().unwrap().is_empty());
}

#[test]
fn usage_errors_exit_with_two() {
    let cases: [&[&str]; 5] = [
        &["--n-min", "3", "--n-max", "2", "--suite", "fano"],
        &["--n-min", "0", "--n-max", "2", "--suite", "fano"],
        &["--n-min", "1", "--n-max", "2", "--suite", "fano,lines"],
        &[
            "--n-min", "1", "--n-max", "2", "--suite", "fano", "--format", "yaml",
        ],
        &["--n-max", "2", "--suite", "fano"],
    ];
    for args in cases {
        let (code, _, stderr) = verify(args);
        assert_eq!(code, 2, "{args:?}");
        assert!(!stderr.is_empty());
    }
}

#[test]
fn unwritable_out_path_is_an_error() {
    let (code, _, stderr) = verify(&[
        "--n-min",
        "2",
        "--n-max",
        "2",
        "--suite",
        "fano",
        "--out",
        "/nonexistent-dir/report.txt",
    ]);
    assert_ne!(code, 0);
    assert!(stderr.contains("cannot write"));
}
