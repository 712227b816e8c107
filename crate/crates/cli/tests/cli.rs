use std::process::{Command, Output};

use sperp::output::ComputationResult;
use sperp::symfunc::rational;
use sperp::{partition, Basis, SymFunc};

fn sperp(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sperp"))
        .args(args)
        .env_remove("SPERP_CACHE_DIR")
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn expand_plethysm_text() {
    let out = sperp(&["expand", "s[2][s[2]]"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "s[4] + s[2,2]");
}

#[test]
fn json_output_reparses() {
    let out = sperp(&["plethysm", "s[2,1]", "s[2]", "--format", "json"]);
    assert!(out.status.success());
    let r: ComputationResult = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(r.basis, "s");
    let f = r.to_symfunc().unwrap();
    assert_eq!(f.len(), 3);
    assert_eq!(f.coefficient(&partition![4, 2]), rational(1));

    let out = sperp(&["expand", "1/3*p[2] - s[1,1]", "--basis", "p", "--format", "json"]);
    let r: ComputationResult = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(r.to_symfunc().unwrap().basis(), Basis::PowerSum);
    assert!(r.terms.iter().all(|t| t.coeff.contains('/')));
}

#[test]
fn methods_agree_on_output() {
    let a = sperp(&["expand", "s[3][s[1,1]]", "--method", "sperp"]);
    let b = sperp(&["expand", "s[3][s[1,1]]", "--method", "powersum"]);
    assert_eq!(stdout(&a), stdout(&b));
}

#[test]
fn not_a_partition_is_a_usage_error() {
    let out = sperp(&["expand", "s[1,2]"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("[1, 2]"));
}

#[test]
fn exit_codes() {
    assert_eq!(sperp(&["expand", "s[2"]).status.code(), Some(2));
    assert_eq!(sperp(&["expand", "s[2,2][s[2]]", "--method", "closed"]).status.code(), Some(2));
    assert_eq!(sperp(&["verify", "nope"]).status.code(), Some(2));
    assert_eq!(sperp(&["verify", "rowcol", "--bound", "4"]).status.code(), Some(0));
    assert_eq!(sperp(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn perp_sequence_round_trip() {
    let out = sperp(&["perp", "s[2][s[2]]"]);
    assert!(out.status.success());
    let entries: Vec<String> = stdout(&out)
        .lines()
        .map(|l| l.split_once(": ").unwrap().1.to_string())
        .collect();
    assert_eq!(entries.len(), 4);
    let back = sperp(&["expand", "--perp-sequence", &entries.join(";")]);
    assert_eq!(stdout(&back).trim(), "s[4] + s[2,2]");
}

#[test]
fn monomials_in_two_variables() {
    let out = sperp(&["monomials", "s[2]", "--vars", "2"]);
    assert_eq!(stdout(&out).trim(), "x1^2 + x1*x2 + x2^2");
}

#[test]
fn tableaux_counts_csv() {
    let out = sperp(&["tableaux", "--k", "2", "--format", "csv"]);
    let text = stdout(&out);
    assert!(text.starts_with("shape,[123],[12/3],[13/2],[1/2/3]\n"));
    assert!(text.contains("\"[4,2]\",1,1,1,0"));
}

#[test]
fn bench_reports_matching_checksums() {
    let out = sperp(&["bench", "s[2][s[1,1]]", "--reps", "1", "--format", "csv"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let sums: Vec<&str> = text.lines().skip(1).map(|l| l.rsplit(',').next().unwrap()).collect();
    assert_eq!(sums.len(), 2);
    assert_eq!(sums[0], sums[1]);
}

#[test]
fn cache_directory_is_used() {
    let dir = std::env::temp_dir().join(format!("sperp-cli-test-{}", std::process::id()));
    let run = || {
        Command::new(env!("CARGO_BIN_EXE_sperp"))
            .args(["expand", "s[2][s[3]]"])
            .env("SPERP_CACHE_DIR", &dir)
            .output()
            .unwrap()
    };
    let first = run();
    assert_eq!(std::fs::read_dir(&dir).unwrap().count(), 1);
    let second = run();
    assert_eq!(first.stdout, second.stdout);
    std::fs::remove_dir_all(&dir).unwrap();
    let expected = &SymFunc::s(partition![6]) + &SymFunc::s(partition![4, 2]);
    assert_eq!(String::from_utf8(first.stdout).unwrap().trim(), expected.to_string());
}
