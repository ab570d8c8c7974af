use std::process::{Command, Output};

fn hyperdet(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hyperdet"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn gosper_factorial_example() {
    let out = hyperdet(&["gosper", "--ratio", "(k+1)^2/k", "--var", "k", "--anchor", "1", "--value", "1", "--from", "1", "--to", "5"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.lines().any(|l| l == "s 1"), "{text}");
    assert!(text.lines().any(|l| l == "sum k=1..5 719"), "{text}");
    assert!(text.contains("direct sum agrees"));
}

#[test]
fn gosper_harmonic_is_not_summable() {
    let out = hyperdet(&["gosper", "--ratio", "k/(k+1)", "--anchor", "1", "--value", "1"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("not summable"));
}

#[test]
fn gosper_parse_error_is_usage_error() {
    let out = hyperdet(&["gosper", "--ratio", "garbage((", "--anchor", "1", "--value", "1"]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("position"), "{err}");
}

#[test]
fn gosper_other_variable_and_negative_anchor() {
    // t(n) = n + 3 from n = -2: sum over -2..=1 is 1 + 2 + 3 + 4
    let out = hyperdet(&["gosper", "--ratio", "(n+4)/(n+3)", "--var", "n", "--anchor", "-2", "--value", "1", "--from", "-2", "--to", "1"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("sum n=-2..1 10"));
}

#[test]
fn verify_theorem1_small_range() {
    let out = hyperdet(&["verify", "theorem1", "--n-max", "2", "--x-max", "1", "--y-max", "1"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("det=product [n=2 x=1 y=1] lhs=9 rhs=9 pass"));
    assert!(text.contains("totals passed=8 failed=0 skipped=0"));
    assert!(text.trim_end().ends_with("result PASS"));
}

#[test]
fn structured_report_is_consistent() {
    let out = hyperdet(&["verify", "classical", "--format", "structured"]);
    assert_eq!(out.status.code(), Some(0));
    let doc: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let cases = doc["cases"].as_array().unwrap();
    let count = |status: &str| cases.iter().filter(|c| c["status"] == status).count() as u64;
    let totals = &doc["totals"];
    assert_eq!(totals["passed"].as_u64(), Some(count("pass")));
    assert_eq!(totals["failed"].as_u64(), Some(count("fail")));
    assert_eq!(totals["skipped"].as_u64(), Some(count("skip")));
    assert_eq!(count("fail"), 0);
    assert_eq!(cases.len() as u64, count("pass") + count("skip"));
    assert!(cases.iter().filter(|c| c["status"] == "skip").all(|c| c["reason"].is_string()));
}

#[test]
fn reports_are_byte_identical_across_runs_and_jobs() {
    for suite in ["classical", "claims"] {
        let a = hyperdet(&["verify", suite, "--seed", "7", "--jobs", "1"]);
        let b = hyperdet(&["verify", suite, "--seed", "7", "--jobs", "4"]);
        assert_eq!(a.stdout, b.stdout, "{suite}");
        assert!(stdout(&a).contains("seed 7"));
    }
    let c = hyperdet(&["verify", "classical", "--seed", "8"]);
    let a = hyperdet(&["verify", "classical", "--seed", "7"]);
    assert_ne!(a.stdout, c.stdout);
}

#[test]
fn timing_is_opt_in() {
    let plain = stdout(&hyperdet(&["verify", "degree"]));
    let timed = stdout(&hyperdet(&["verify", "degree", "--timing"]));
    assert!(!plain.contains("wall-time"));
    assert!(timed.contains("wall-time"));
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        &["verify", "theorem1", "--n-max", "0"][..],
        &["verify", "nonsense"],
        &["verify", "theorem1", "--x-max", "-1"],
        &["verify", "claims", "--l-max", "0"],
        &["det", "--n", "0", "--x", "1", "--y", "1"],
        &["det", "--n", "2", "--x", "-1", "--y", "1"],
        &["gosper", "--ratio", "k", "--anchor", "1", "--value", "1", "--from", "3"],
        &["frobnicate"],
    ] {
        assert_eq!(hyperdet(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn det_and_counts() {
    let out = hyperdet(&["det", "--n", "2", "--x", "1", "--y", "1"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "determinant 9\nproduct 9\nequal true\n");

    let out = hyperdet(&["count-tilings", "--n", "3", "--x", "2", "--y", "3", "--brute-force", "--format", "structured"]);
    assert_eq!(out.status.code(), Some(0));
    let doc: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(doc["tilings"], doc["path_families"]);
    assert_eq!(doc["equal"], true);
}

#[test]
fn oversized_brute_force_is_refused() {
    let out = hyperdet(&["count-tilings", "--n", "6", "--x", "6", "--y", "6", "--brute-force"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8(out.stderr).unwrap().contains("too large"));
}
