//! End-to-end CLI tests over the shipped fixture documents.

use std::path::PathBuf;
use std::process::{Command, Output};

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../docs/fixtures")
        .join(name)
}

fn excross<I, S>(args: I) -> Output
where
    I: IntoIterator<Item = S>,
    S: AsRef<std::ffi::OsStr>,
{
    Command::new(env!("CARGO_BIN_EXE_excross"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

#[test]
fn sg_enumerate_cyclic_two_lists_three_elements() {
    let out = excross(["sg", "enumerate", "--group", "cyclic 2"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("3 elements"), "{text}");
    assert!(text.contains("[a]"));
    assert!(text.contains("e_{a}[e]"));
}

#[test]
fn sg_table_export_has_eight_elements_for_z3() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("t.json");
    let out = excross([
        "sg",
        "table",
        "--group",
        "cyclic 3",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let doc: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(doc["elements"].as_array().unwrap().len(), 8);
    assert_eq!(doc["table"].as_array().unwrap().len(), 8);
    assert_eq!(doc["table"][0].as_array().unwrap().len(), 8);
}

#[test]
fn sg_oracle_check_sym3_with_bound_reports_full_agreement() {
    let out = excross([
        "sg",
        "oracle-check",
        "--group",
        "sym3",
        "--max-word-len",
        "6",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("agreement 100%"), "{text}");
    assert!(text.contains("skipped by bound"), "{text}");
}

#[test]
fn action_validate_passes_on_p1_and_fails_on_broken_z4() {
    let ok = excross([
        "action",
        "validate",
        "--action",
        fixture("p1.json").to_str().unwrap(),
    ]);
    assert!(ok.status.success());

    let bad = excross([
        "action",
        "validate",
        "--action",
        fixture("z4_broken.json").to_str().unwrap(),
    ]);
    assert_eq!(bad.status.code(), Some(1));
    let text = stdout(&bad);
    assert!(text.contains("axiom (ii)"), "{text}");
    assert!(text.contains("(a,a)"), "witness names the pair: {text}");
}

#[test]
fn action_induce_prints_dimensions() {
    let out = excross([
        "action",
        "induce",
        "--action",
        fixture("p1.json").to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("dim S(G) = 3"), "{text}");
    assert!(text.contains("E_[e]: dim 2"), "{text}");
    assert!(text.contains("E_[a]: dim 1"), "{text}");
}

#[test]
fn check_iso_on_p1_reports_dimensions_and_passes() {
    let out = excross([
        "check",
        "iso",
        "--group",
        "cyclic 2",
        "--action",
        fixture("p1.json").to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("dim A⋊G = 3"), "{text}");
    assert!(text.contains("dim L = 4"), "{text}");
    assert!(text.contains("dim N = 1"), "{text}");
    assert!(text.contains("RESULT: pass"), "{text}");
}

#[test]
fn check_assoc_flags_zero_product_fixture_with_witness() {
    let out = excross([
        "check",
        "assoc",
        "--algebra",
        fixture("zero_product_fixture.json").to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(1));
    let text = stdout(&out);
    assert!(text.contains("witness triple"), "{text}");
}

#[test]
fn cp_semigroup_aborts_with_witness_on_non_associative_l() {
    let out = excross([
        "cp",
        "semigroup",
        "--algebra",
        fixture("zero_product_fixture.json").to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(1));
    let text = stdout(&out);
    assert!(text.contains("witness triple"), "{text}");
}

#[test]
fn cp_semigroup_reports_quotient_dimensions_for_p1() {
    let out = excross(["cp", "semigroup", "--action", fixture("p1.json").to_str().unwrap()]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("dim = 3"), "{text}");
    assert!(text.contains("dim L = 4, dim N = 1"), "{text}");
}

#[test]
fn check_covariant_passes_on_p1() {
    let out = excross([
        "check",
        "covariant",
        "--action",
        fixture("p1.json").to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("covariance"), "{text}");
    assert!(text.contains("RESULT: pass"), "{text}");
}

#[test]
fn check_all_passes_on_every_valid_set_fixture() {
    for name in [
        "p1.json",
        "z2_swap.json",
        "z2_global.json",
        "z2_empty.json",
        "z3_rotation.json",
        "sym3_partial.json",
    ] {
        let out = excross(["check", "all", "--action", fixture(name).to_str().unwrap()]);
        assert!(out.status.success(), "{name}: {}", stdout(&out));
    }
}

#[test]
fn env_var_overrides_enumeration_bound() {
    let out = Command::new(env!("CARGO_BIN_EXE_excross"))
        .args(["sg", "enumerate", "--group", "cyclic 3"])
        .env("EXCROSS_MAX_GROUP_ORDER", "2")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("exceeds the enumeration bound"), "{err}");
}

#[test]
fn unknown_group_spec_is_a_usage_error() {
    let out = excross(["sg", "enumerate", "--group", "nonsense 99"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn cp_group_csv_export() {
    let out = excross([
        "cp",
        "group",
        "--action",
        fixture("p1.json").to_str().unwrap(),
        "--format",
        "csv",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.starts_with("left,right,product"), "{text}");
    assert!(text.contains("\"(0,e)\",\"(0,e)\",\"(0,e)\""), "{text}");
}
