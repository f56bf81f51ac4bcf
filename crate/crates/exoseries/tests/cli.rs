//! End-to-end checks of the `exoseries` binary: exit codes, exact table
//! output, report formats, and argument validation.

use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_exoseries"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

#[test]
fn numbers_bernoulli_exact() {
    let out = run(&["numbers", "bernoulli", "--n", "4", "--exact"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text, "1\n-1/2\n1/6\n0\n-1/30\n");
}

#[test]
fn numbers_exact_output_is_parseable_fractions() {
    for family in ["bernoulli", "harmonic", "derangement", "catalan", "bell"] {
        let out = run(&["numbers", family, "--n", "12", "--exact"]);
        assert!(out.status.success(), "{family}");
        let text = String::from_utf8(out.stdout).unwrap();
        for line in text.lines() {
            let ok = match line.split_once('/') {
                Some((num, den)) => {
                    num.parse::<i128>().is_ok() && den.parse::<u128>().is_ok_and(|d| d > 0)
                }
                None => line.parse::<i128>().is_ok(),
            };
            assert!(ok, "{family}: `{line}` is not a fraction");
        }
    }
    // stirling2 needs --k
    let out = run(&["numbers", "stirling2", "--n", "5", "--exact"]);
    assert_eq!(out.status.code(), Some(2));
    let out = run(&["numbers", "stirling2", "--n", "5", "--k", "2", "--exact"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text, "0\n0\n1\n3\n7\n15\n");
    // --k rejected elsewhere
    let out = run(&["numbers", "bernoulli", "--n", "3", "--k", "1"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn numbers_float_output_has_fifteen_digits() {
    let out = run(&["numbers", "harmonic", "--n", "2"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text, "0.00000000000000e0\n1.00000000000000e0\n1.50000000000000e0\n");
}

#[test]
fn eval_geometric_at_one() {
    let out = run(&["eval", "--identity", "id-geom-x1", "--y", "1"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("series"));
    assert!(text.contains("quadrature"));
    assert!(text.contains("closed form"));
    // all three routes print e to full precision
    assert_eq!(text.matches("2.7182818284590").count(), 3, "{text}");
}

#[test]
fn eval_rejects_unknown_identity_and_bad_input() {
    let out = run(&["eval", "--identity", "id-nope", "--y", "1"]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("unknown identity"));
    // missing x for an unpinned identity
    let out = run(&["eval", "--identity", "id-geom", "--y", "1"]);
    assert_eq!(out.status.code(), Some(2));
    // out-of-domain point
    let out = run(&["eval", "--identity", "id-factorial", "--x", "2", "--y", "1"]);
    assert_eq!(out.status.code(), Some(2));
    // parameterized evaluation works
    let out = run(&[
        "eval",
        "--identity",
        "id-binom-x1",
        "--y",
        "1",
        "--param",
        "p=1",
    ]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.matches("1.3591409142295").count(), 3, "{text}");
}

#[test]
fn verify_single_identity_json() {
    let out = run(&["verify", "--identity", "id-geom", "--format", "json"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["identity"], "id-geom");
    assert_eq!(v["verdict"], "pass");
    assert!(v["points"].as_array().unwrap().len() >= 16);
}

#[test]
fn verify_flagged_identity_exits_zero_with_rejection() {
    let out = run(&["verify", "--identity", "id-bern-x1", "--format", "json"]);
    assert!(out.status.success(), "rejection is a successful adjudication");
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["verdict"], "printed_form_rejected");
}

#[test]
fn verify_grid_override_csv() {
    let out = run(&[
        "verify",
        "--identity",
        "id-geom",
        "--grid",
        "y=0.5,1",
        "--format",
        "csv",
    ]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let rows: Vec<&str> = text.lines().collect();
    // header + standard 4 xs times 2 overridden ys
    assert_eq!(rows.len(), 1 + 8, "{text}");
    assert!(rows[0].starts_with("identity,verdict,tolerance,"));
    // empty or malformed grids are usage errors
    for bad in ["", "x=", "z=1", "y=1:0:1"] {
        let out = run(&["verify", "--identity", "id-geom", "--grid", bad]);
        assert_eq!(out.status.code(), Some(2), "grid `{bad}`");
    }
}

#[test]
fn verify_requires_target_and_rejects_unknown() {
    let out = run(&["verify"]);
    assert_eq!(out.status.code(), Some(2));
    let out = run(&["verify", "--identity", "id-nope"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_out_writes_file() {
    let path = std::env::temp_dir().join(format!("exoseries-report-{}.json", std::process::id()));
    let out = run(&[
        "verify",
        "--identity",
        "id-harmonic-x1",
        "--format",
        "json",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    let bytes = std::fs::read(&path).unwrap();
    let v: serde_json::Value = serde_json::from_slice(&bytes).unwrap();
    assert_eq!(v["identity"], "id-harmonic-x1");
    std::fs::remove_file(&path).ok();
}

#[test]
fn verify_failure_exits_one() {
    // legal point, but |xy| = 0.998 converges far too slowly for the term
    // cap: the per-point error is recorded and the verdict is fail
    let out = run(&[
        "verify",
        "--identity",
        "id-factorial",
        "--grid",
        "x=0.999;y=0.999",
    ]);
    assert_eq!(out.status.code(), Some(1));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("fail"), "{text}");
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("id-factorial"), "{err}");
}

#[test]
fn verify_all_text_lists_every_identity() {
    let out = run(&["verify", "--all"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.lines().count(), 17);
    assert!(text.contains("id-bern-x1: printed form rejected"));
    assert!(text.contains("id-geom: pass"));
}
