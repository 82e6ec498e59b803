use std::process::{Command, Output};

use serde_json::Value;

fn knotlab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_knotlab"))
        .args(args)
        .env_remove("KNOTLAB_CROSSING_CAP")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn jones_of_trefoil() {
    let o = knotlab(&["jones", "--pd", "X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).trim(), "-t^-4 + t^-3 + t^-1");
}

#[test]
fn jones_from_file() {
    let dir = std::env::temp_dir().join(format!("knotlab-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("fig8.pd");
    std::fs::write(&path, "PD[X[4,2,5,1], X[8,6,1,5], X[6,3,7,4], X[2,7,3,8]]\n").unwrap();
    let p = path.to_str().unwrap();
    let positional = knotlab(&["jones", p]);
    let at = knotlab(&["jones", "--pd", &format!("@{p}")]);
    assert_eq!(stdout(&positional).trim(), "t^-2 - t^-1 + 1 - t + t^2");
    assert_eq!(stdout(&positional), stdout(&at));
}

#[test]
fn sequiv_positive() {
    let o = knotlab(&[
        "sequiv",
        "--seifert",
        "[[0,1],[2,0]]",
        "--ell",
        "3",
        "--band",
        "first",
    ]);
    assert!(o.status.success());
    let out = stdout(&o);
    assert!(out.contains("certificate: [[1,-1],[0,1]]"), "{out}");
}

#[test]
fn sequiv_negative_is_not_an_error() {
    for form in ["[[0,1],[2,1]]", "[[0,2],[1,-3]]"] {
        let o = knotlab(&["sequiv", "--seifert", form, "--ell", "3", "--band", "first"]);
        assert_eq!(o.status.code(), Some(0));
        assert!(stdout(&o).contains("not first-S-equivalent: a22 ≠ 0"));
    }
}

#[test]
fn sequiv_with_oracle() {
    let o = knotlab(&[
        "sequiv",
        "--seifert",
        "[[0,1],[2,0]]",
        "--ell",
        "-6",
        "--band",
        "first",
        "--oracle-bound",
        "3",
    ]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("consistent"));
}

#[test]
fn lambda_emits() {
    let s = knotlab(&["lambda", "--n", "0", "--m", "0", "--p", "3"]);
    assert_eq!(stdout(&s).trim(), "[[0,2],[1,0]]");
    let a = knotlab(&[
        "lambda",
        "--n",
        "0",
        "--m",
        "0",
        "--p",
        "3",
        "--emit",
        "alexander",
    ]);
    assert_eq!(stdout(&a).trim(), "2 - 5t + 2t^2");
    let j = knotlab(&["lambda", "--n", "6", "--m", "0", "--p", "3", "--emit", "jones"]);
    assert_eq!(stdout(&j).trim(), "2 - t + t^2 - 2t^3 + t^4 - t^5 + t^6");
}

#[test]
fn exit_codes() {
    // Domain errors.
    assert_eq!(
        knotlab(&["lambda", "--n", "1", "--m", "0", "--p", "3"])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(knotlab(&["jones", "--pd", "X[1,2,3]"]).status.code(), Some(1));
    assert_eq!(
        knotlab(&["alexander", "--seifert", "[[0,1],[1,0]]"])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(
        knotlab(&["lambda", "--n", "10", "--m", "10", "--p", "5", "--emit", "pd"])
            .status
            .code(),
        Some(1)
    );
    // Usage errors.
    assert_eq!(knotlab(&["report"]).status.code(), Some(2));
    assert_eq!(
        knotlab(&[
            "sequiv",
            "--seifert",
            "[[0,1],[2,0]]",
            "--ell",
            "3",
            "--band",
            "third"
        ])
        .status
        .code(),
        Some(2)
    );
    assert_eq!(knotlab(&["frobnicate"]).status.code(), Some(2));
    let o = knotlab(&["jones", "--pd", "X[1,2,3]"]);
    assert!(String::from_utf8_lossy(&o.stderr).starts_with("error:"));
}

#[test]
fn crossing_cap_from_env() {
    let args = ["lambda", "--n", "10", "--m", "10", "--p", "5", "--emit", "pd"];
    let o = Command::new(env!("CARGO_BIN_EXE_knotlab"))
        .args(args)
        .env("KNOTLAB_CROSSING_CAP", "40")
        .output()
        .unwrap();
    assert!(o.status.success());
    let o = Command::new(env!("CARGO_BIN_EXE_knotlab"))
        .args(args)
        .env("KNOTLAB_CROSSING_CAP", "lots")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn output_is_deterministic() {
    let args = [
        "--json", "lambda", "--n", "0", "--m", "-6", "--p", "3", "--emit", "jones",
    ];
    let a = knotlab(&args);
    let b = knotlab(&args);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn json_round_trips() {
    for args in [
        vec!["--json", "jones", "--pd", "X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]"],
        vec![
            "--json",
            "sequiv",
            "--seifert",
            "[[0,1],[2,0]]",
            "--ell",
            "3",
            "--band",
            "second",
        ],
        vec!["--json", "signature", "--seifert", "[[-1,1],[0,-1]]"],
        vec!["lambda", "--n", "0", "--m", "-6", "--p", "3", "--json"],
    ] {
        let o = knotlab(&args);
        assert!(o.status.success(), "{args:?}");
        let text = stdout(&o);
        let v: Value = serde_json::from_str(&text).unwrap();
        assert_eq!(serde_json::to_string_pretty(&v).unwrap(), text.trim_end());
        for key in ["command", "input", "result", "paper_check"] {
            assert!(v.get(key).is_some(), "{key} missing for {args:?}");
        }
    }
}

#[test]
fn json_flags_known_discrepancy() {
    let o = knotlab(&["--json", "lambda", "--n", "0", "--m", "-6", "--p", "3"]);
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["result"]["seifert"], "[[0,2],[1,3]]");
    assert_eq!(v["paper_check"], "MISMATCH (known discrepancy)");
    let o = knotlab(&[
        "--json", "lambda", "--n", "6", "--m", "0", "--p", "3", "--emit", "jones",
    ]);
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["paper_check"], "MATCH");
}

#[test]
fn report_passes() {
    let o = knotlab(&["report", "--paper"]);
    assert!(o.status.success());
    let out = stdout(&o);
    assert_eq!(out.matches("[MISMATCH]").count(), 1, "{out}");
    assert!(out.trim_end().ends_with("0 unexpected mismatches"));
}
