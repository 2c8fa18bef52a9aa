//! CLI acceptance: determinism of `check all` reports.

use std::path::PathBuf;
use std::process::Command;

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../docs/fixtures")
        .join(name)
}

fn run_check_all(out: &std::path::Path, fixture_name: &str) {
    let status = Command::new(env!("CARGO_BIN_EXE_excross"))
        .args(["check", "all", "--action"])
        .arg(fixture(fixture_name))
        .args(["--format", "json", "--out"])
        .arg(out)
        .status()
        .expect("binary runs");
    assert!(status.success(), "check all failed on {fixture_name}");
}

#[test]
fn criterion_10_check_all_reports_are_byte_identical() {
    let dir = tempfile::tempdir().unwrap();
    for fixture_name in ["p1.json", "z3_rotation.json"] {
        let first = dir.path().join("first.json");
        let second = dir.path().join("second.json");
        run_check_all(&first, fixture_name);
        run_check_all(&second, fixture_name);
        let a = std::fs::read(&first).unwrap();
        let b = std::fs::read(&second).unwrap();
        assert!(!a.is_empty());
        assert_eq!(a, b, "{fixture_name}: consecutive reports differ");
    }
    println!("PASS criterion 10: consecutive `check all` runs produce byte-identical JSON");
}
