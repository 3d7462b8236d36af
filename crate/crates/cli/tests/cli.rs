use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_overpoly"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn counts_and_sums() {
    assert_eq!(
        stdout(&["enum", "--b", "2", "--lambda", "2", "--n", "4", "--count"]),
        "8\n"
    );
    assert_eq!(
        stdout(&[
            "qr",
            "--b",
            "2",
            "--n",
            "2",
            "--kind",
            "Q",
            "--eval-all-ones"
        ]),
        "13\n"
    );
}

#[test]
fn polynomial_output() {
    assert_eq!(stdout(&["poly", "--b", "2", "--n", "2"]), "xy+x+y+z\n");
    assert_eq!(
        stdout(&["poly", "--b", "2", "--n", "1", "--vars", "a,b,c"]),
        "a+b\n"
    );
    let json = stdout(&[
        "qr", "--b", "2", "--n", "1", "--kind", "R", "--format", "json",
    ]);
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(v["arity"], 3);
    assert_eq!(
        stdout(&["special", "--family", "qx", "--n", "2"]),
        "3x^2+7x+3\n"
    );
    assert_eq!(
        stdout(&[
            "special", "--family", "q1", "--n", "3", "--alpha", "1", "--beta", "1", "--factor"
        ]),
        "3z+1\n5z^2+4z+1\n"
    );
}

#[test]
fn zeros_csv_is_stable() {
    let args = ["zeros", "--family", "zz2", "--n", "6", "--out", "csv"];
    let a = stdout(&args);
    assert_eq!(a, stdout(&args));
    let mut lines = a.lines();
    assert_eq!(lines.next(), Some("re,im,residual"));
    assert_eq!(lines.count(), 12);
}

#[test]
fn writes_to_file() {
    let path = std::env::temp_dir().join(format!("overpoly-cli-{}.csv", std::process::id()));
    let p = path.to_str().unwrap();
    assert_eq!(
        stdout(&[
            "curve",
            "--alpha",
            "1",
            "--beta",
            "1",
            "--samples",
            "10",
            "--out",
            p
        ]),
        ""
    );
    let text = std::fs::read_to_string(&path).unwrap();
    std::fs::remove_file(&path).ok();
    assert!(text.starts_with("# f = 3x^2+3y^2+4x+1\nx,y\n"));
}

#[test]
fn curve_table_check() {
    assert!(stdout(&["curve", "--check-table"]).contains("15"));
    assert!(stdout(&["curve", "--check-table6"]).contains("15"));
}

#[test]
fn verify_quick() {
    let out = stdout(&[
        "verify",
        "--suite",
        "table,specializations,stats",
        "--format",
        "json",
    ]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["pass"], true);
    assert_eq!(v["suites"].as_array().unwrap().len(), 3);
}

#[test]
fn verify_all_small_range() {
    let out = stdout(&["verify", "--suite", "all", "--nmax", "6"]);
    assert!(out.ends_with("9/9 suites passed\n"), "{out}");
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["qr", "--b", "2", "--n", "2", "--kind", "X"][..],
        &["enum", "--b", "1", "--n", "3"],
        &["zeros", "--family", "nope", "--n", "3"],
        &["verify", "--suite", "nope"],
        &["special", "--family", "qx", "--n", "2", "--factor"],
        &["curve", "--alpha", "0", "--beta", "0"],
        &["poly", "--b", "2", "--n", "1", "--vars", "a,b"],
        &["frobnicate"],
    ] {
        assert_eq!(run(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn unattainable_tolerance_is_a_violation() {
    let out = run(&["zeros", "--family", "qx", "--n", "8", "--tol", "1e-300"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8(out.stdout)
        .unwrap()
        .ends_with("iterations\n"));
}
