use std::path::Path;
use std::process::Command;

const BIN: &str = env!("CARGO_BIN_EXE_fuzzjack");

fn run(args: &[&str]) -> std::process::Output {
    Command::new(BIN).args(args).output().unwrap()
}

fn stdout(out: &std::process::Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

#[test]
fn approximate_emits_reports_and_skips_failed_hypotheses() {
    let dir = tempfile::tempdir().unwrap();
    let out_path = dir.path().join("run");
    let out = run(&[
        "approximate",
        "--function",
        "scaled_exp",
        "--u=-1,0,1",
        "--n",
        "4,8",
        "--samples",
        "257",
        "--out",
        out_path.to_str().unwrap(),
    ]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));

    let report: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(out_path.join("report.json")).unwrap())
            .unwrap();
    // gh_dec, g_diff, trapezoid, interval_gh_dec all run for both n; the
    // increasing variants are skipped on this decreasing-width function.
    assert_eq!(report["reports"].as_array().unwrap().len(), 8);
    let skipped = report["skipped"].as_array().unwrap();
    assert_eq!(skipped.len(), 4);
    assert!(skipped
        .iter()
        .any(|s| s["reason"] == "nesting hypothesis failed"));

    let conv = std::fs::read_to_string(out_path.join("convergence.csv")).unwrap();
    assert_eq!(conv.lines().next().unwrap(), "method,n,sup_distance,modulus,bound,pass");
    assert_eq!(conv.lines().count(), 9);
    assert!(conv.lines().skip(1).all(|l| l.ends_with(",true")));
    assert!(out_path.join("errors_gh_dec_4.csv").exists());

    // CSV floats carry enough digits to round-trip against the JSON value.
    let json_sup = report["reports"][0]["sup_distance"].as_f64().unwrap();
    let csv_sup: f64 = conv.lines().nth(1).unwrap().split(',').nth(2).unwrap().parse().unwrap();
    assert_eq!(json_sup.to_bits(), csv_sup.to_bits());
}

#[test]
fn env_var_overrides_out_flag() {
    let dir = tempfile::tempdir().unwrap();
    let env_path = dir.path().join("from_env");
    let out = Command::new(BIN)
        .args([
            "approximate",
            "--function",
            "crisp_ident",
            "--n",
            "4",
            "--methods",
            "trapezoid",
            "--samples",
            "65",
            "--out",
            dir.path().join("ignored").to_str().unwrap(),
        ])
        .env("FUZZJACK_OUT", &env_path)
        .output()
        .unwrap();
    assert!(out.status.success());
    assert!(env_path.join("report.json").exists());
    assert!(!dir.path().join("ignored").exists());
}

#[test]
fn strict_mode_propagates_hypothesis_errors() {
    let dir = tempfile::tempdir().unwrap();
    let out = run(&[
        "approximate",
        "--function",
        "bump_width",
        "--methods",
        "gh_dec",
        "--n",
        "4",
        "--strict",
        "--out",
        dir.path().join("o").to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("nesting hypothesis failed"));
}

fn write_file(path: &Path, text: &str) {
    std::fs::write(path, text).unwrap();
}

#[test]
fn approximate_accepts_sampled_function_files() {
    let dir = tempfile::tempdir().unwrap();
    let f = dir.path().join("f.json");
    write_file(
        &f,
        r#"{"levels":[0.0,0.5,1.0],
            "samples":[{"x":0.0,"cuts":[[-2,2],[-1,1],[0,0]]},
                       {"x":0.5,"cuts":[[-1.5,1.5],[-0.75,0.75],[0,0]]},
                       {"x":1.0,"cuts":[[-1,1],[-0.5,0.5],[0,0]]}]}"#,
    );
    let out_path = dir.path().join("run");
    let out = run(&[
        "approximate",
        "--file",
        f.to_str().unwrap(),
        "--methods",
        "trapezoid,gh_dec",
        "--n",
        "4",
        "--samples",
        "129",
        "--out",
        out_path.to_str().unwrap(),
    ]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let report: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(out_path.join("report.json")).unwrap())
            .unwrap();
    assert_eq!(report["reports"].as_array().unwrap().len(), 2);
}

#[test]
fn malformed_function_file_is_rejected_with_location() {
    let dir = tempfile::tempdir().unwrap();
    let f = dir.path().join("bad.json");
    write_file(
        &f,
        r#"{"levels":[0.0,1.0],
            "samples":[{"x":0.0,"cuts":[[2,1],[0,0]]},
                       {"x":1.0,"cuts":[[0,1],[0.4,0.6]]}]}"#,
    );
    let out = run(&["check", "--file", f.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("lo > hi at sample 0 level 0"));
}

#[test]
fn diff_prints_gh_and_g_differences() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.json");
    let b = dir.path().join("b.json");
    write_file(&a, r#"{"levels":[0.0,0.5,1.0],"cuts":[[12,19],[13.5,17],[15,15]]}"#);
    write_file(&b, r#"{"levels":[0.0,0.5,1.0],"cuts":[[5,11],[7,10],[9,9]]}"#);
    let out = run(&["diff", a.to_str().unwrap(), b.to_str().unwrap()]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("gh_difference: does not exist"));
    assert!(text.contains(r#""cuts":[[6.0,8.0],[6.0,7.0],[6.0,6.0]]"#));
}

#[test]
fn selftest_passes_and_is_deterministic() {
    let a = run(&["selftest", "--seed", "42"]);
    let b = run(&["selftest", "--seed", "42"]);
    assert!(a.status.success());
    assert_eq!(stdout(&a), stdout(&b));
    assert_eq!(stdout(&a).matches("[PASS]").count(), 5);
}
