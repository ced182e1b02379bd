//! End-to-end runs of the `semicat` binary against golden outputs.
//!
//! Set `SEMICAT_BLESS=1` to rewrite the golden files.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn dir(sub: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests").join(sub)
}

fn semicat(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_semicat"))
        .current_dir(dir("data"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn golden(name: &str, args: &[&str]) {
    let out = semicat(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    let path = dir("golden").join(name);
    if std::env::var_os("SEMICAT_BLESS").is_some() {
        std::fs::write(&path, &out.stdout).unwrap();
    }
    let expected = std::fs::read(&path).unwrap_or_else(|_| panic!("missing golden file {name}"));
    assert_eq!(
        String::from_utf8_lossy(&out.stdout),
        String::from_utf8_lossy(&expected),
        "output of {args:?} differs from {name}"
    );
}

fn json(args: &[&str]) -> serde_json::Value {
    let out = semicat(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn construct_brandt() {
    golden("construct_b22.json", &["construct", "--recipe", "b22.json"]);
}

#[test]
fn construct_writes_file_that_loads_back() {
    let tmp = tempfile::tempdir().unwrap();
    let table = tmp.path().join("b22.json");
    let out = semicat(&["construct", "--recipe", "b22.json", "--out", table.to_str().unwrap()]);
    assert!(out.status.success());
    let from_table = json(&["aut", table.to_str().unwrap()]);
    let from_recipe = json(&["aut", "b22.json"]);
    assert_eq!(from_table, from_recipe);
}

#[test]
fn analyze_example_c() {
    golden("analyze_example_c3.json", &["analyze", "example_c3.json", "--green"]);
    let v = json(&["analyze", "example_c3.json"]);
    assert_eq!(v["nil_degree"], 2);
    assert_eq!(v["nilpotency_degree"], 3);
    assert_eq!(v["commutative"], true);
}

#[test]
fn analyze_literal_table() {
    let v = json(&["analyze", "z3_table.json"]);
    assert_eq!(v["group"], true);
    assert_eq!(v["identity"], 0);
    assert!(v.get("nil_degree").is_none());
}

#[test]
fn aut_brandt() {
    golden("aut_b22.json", &["aut", "b22.json"]);
    let v = json(&["aut", "b22.json"]);
    assert_eq!(v["order"], 4);
    assert_eq!(v["tau"], 4);
}

#[test]
fn orbits_null() {
    golden("orbits_n2_pairs.json", &["orbits", "n2.json", "-n", "2"]);
    // pairs over {0, a, b} up to swapping a and b
    assert_eq!(json(&["orbits", "n2.json", "-n", "2"])["orbit_count"], 5);
    assert_eq!(json(&["orbits", "n2.json", "-n", "2", "--fix", "1"])["orbit_count"], 9);
    assert_eq!(json(&["orbits", "n2.json", "-n", "1", "--setwise", "n2_sets.json"])["orbit_count"], 3);
}

#[test]
fn orbit_strategies_agree() {
    let count = |s| json(&["orbits", "b22.json", "-n", "2", "--strategy", s, "--no-representatives"])["orbit_count"].clone();
    assert_eq!(count("union-find"), count("canonical-form"));
}

#[test]
fn class_orbits_brandt() {
    golden("orbits_b22_h.json", &["orbits", "b22.json", "-n", "1", "--classes", "b22_h.json"]);
}

#[test]
fn congruences() {
    golden("congruence_p_z2_mu.json", &["congruence", "p_z2.json", "--mu"]);
    golden("congruence_p_z2_sigma.json", &["congruence", "p_z2.json", "--sigma"]);
    let v = json(&["congruence", "n2.json", "--generated", "pairs.json"]);
    assert_eq!(v["blocks"], serde_json::json!([[0], [1, 2]]));
}

#[test]
fn decompose_null() {
    golden("decompose_n2.json", &["decompose", "n2.json"]);
}

#[test]
fn family_profiles() {
    golden(
        "family_brandt_tau.json",
        &["family", "--family", "brandt", "--from", "1", "--to", "3", "--statistic", "tau"],
    );
    golden(
        "family_null_table.txt",
        &["family", "--family", "null", "--from", "1", "--to", "5", "--table"],
    );
    let v = json(&["family", "--family", "chain_semilattice", "--from", "1", "--to", "4", "--statistic", "aut_order"]);
    assert_eq!(v["label"], "bounded over range");
}

#[test]
fn verify_exit_codes() {
    for suite in ["p-semigroup", "zero-direct", "semidirect", "congruences", "counting"] {
        let out = semicat(&["verify", suite]);
        assert_eq!(out.status.code(), Some(0), "{suite}");
    }
    // the literal |Aut(G)|·m! count fails on the grid
    let out = semicat(&["verify", "brandt-aut"]);
    assert_eq!(out.status.code(), Some(1));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let failing: std::collections::BTreeSet<&str> =
        v["failures"].as_array().unwrap().iter().map(|f| f["property"].as_str().unwrap()).collect();
    assert!(!failing.contains("|Aut| = |Aut(G)|·m!·|G|^(m-1)"));
}

#[test]
fn verify_is_deterministic() {
    let a = semicat(&["verify", "counting", "--seed", "7"]).stdout;
    let b = semicat(&["verify", "counting", "--seed", "7"]).stdout;
    assert_eq!(a, b);
}

#[test]
fn input_errors_exit_2() {
    for args in [
        vec!["analyze", "missing.json"],
        vec!["orbits", "n2.json", "-n", "1", "--fix", "1", "--setwise", "n2_sets.json"],
        vec!["orbits", "n2.json", "-n", "1", "--fix", "9"],
        vec!["congruence", "n2.json", "--sigma"],
        vec!["family", "--family", "null", "--from", "3", "--to", "2"],
        vec!["no-such-command"],
    ] {
        assert_eq!(semicat(&args).status.code(), Some(2), "{args:?}");
    }
}
