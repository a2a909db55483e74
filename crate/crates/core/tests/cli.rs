use std::process::{Command, Output};

fn fcalc(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fcalc")).args(args).output().unwrap()
}

#[test]
fn staircase_matches_golden_file() {
    let out = fcalc(&["staircase", "--n", "10"]);
    assert!(out.status.success());
    let golden = include_str!("data/staircase_n10.csv");
    assert_eq!(String::from_utf8(out.stdout).unwrap(), golden);
}

#[test]
fn exit_codes() {
    assert_eq!(fcalc(&["--help"]).status.code(), Some(0));
    assert_eq!(fcalc(&["staircase", "--n", "nope"]).status.code(), Some(1));
    assert_eq!(fcalc(&["frobnicate"]).status.code(), Some(1));
    assert_eq!(fcalc(&["staircase", "--alpha", "1.5"]).status.code(), Some(1));
    assert_eq!(fcalc(&["blair", "--beta", "0.7"]).status.code(), Some(1));
    let missing = fcalc(&["laplace", "--fixtures", "/no/such/file.csv"]);
    assert_eq!(missing.status.code(), Some(2));
    assert!(!missing.stderr.is_empty());
}

#[test]
fn out_flag_writes_the_same_bytes() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("blair.csv");
    let args = ["blair", "--beta", "0.25,0.5", "--n", "32"];
    let direct = fcalc(&args);
    let mut with_out = args.to_vec();
    with_out.extend(["--out", path.to_str().unwrap()]);
    let written = fcalc(&with_out);
    assert!(written.status.success() && written.stdout.is_empty());
    assert_eq!(std::fs::read(&path).unwrap(), direct.stdout);
}

#[test]
fn blair_wide_format_header() {
    let out = String::from_utf8(fcalc(&["blair", "--beta", "0.25,0.5", "--n", "16"]).stdout).unwrap();
    let header = out.lines().find(|l| !l.starts_with('#')).unwrap();
    assert_eq!(header, "t,s,strain,in_set,beta_0.25,beta_0.5");
}

#[test]
fn laplace_report_reads_the_fixture_file() {
    let path = concat!(env!("CARGO_MANIFEST_DIR"), "/tests/data/laplace_fixtures.csv");
    let out = fcalc(&["laplace", "--fixtures", path]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("shape,zeta,mu,xi,a,b,n,s,expected,computed\n"));
    assert_eq!(text.lines().count(), 38);
}

#[test]
fn json_is_parseable_and_deterministic() {
    let args = [
        "ode", "--kind", "compare", "--beta", "0.33", "--n", "64", "--format", "json",
    ];
    let a = fcalc(&args);
    let b = fcalc(&args);
    assert_eq!(a.stdout, b.stdout);
    let v: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(v["y_local"].as_array().unwrap().len(), 64);
}

#[test]
fn selfcheck_passes() {
    let out = fcalc(&["selfcheck"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8(out.stdout)
        .unwrap()
        .ends_with("11 checks, 0 failed\n"));
}
