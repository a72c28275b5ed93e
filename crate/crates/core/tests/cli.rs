//! End-to-end runs of the `rindler` binary.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use rindler_entanglement::cli::Table;

fn config(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../configs").join(name)
}

fn rindler(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_rindler")).args(args).output().expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exited normally")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn stderr(out: &Output) -> String {
    String::from_utf8_lossy(&out.stderr).into_owned()
}

fn path_str(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn column(table: &Table, name: &str) -> Vec<f64> {
    table.column(name).unwrap_or_else(|| panic!("no column {name}"))
}

#[test]
fn validate_reports_the_threshold_case_and_fails_beyond_it() {
    let paper = config("paper.toml");
    let ok = rindler(&["validate", path_str(&paper), "--accel", "3e16"]);
    assert_eq!(code(&ok), 0, "{}", stderr(&ok));
    let text = stdout(&ok);
    assert!(text.contains("6.283185e-2") && text.contains("PASS (near threshold)"), "{text}");

    let bad = rindler(&["validate", path_str(&paper), "--accel", "3e16", "--accel", "3e15"]);
    assert_eq!(code(&bad), 2);
    assert!(stdout(&bad).contains("FAIL"));
}

#[test]
fn zero_width_detector_passes_with_a_warning() {
    let dir = tempfile::tempdir().unwrap();
    let text = std::fs::read_to_string(config("paper.toml")).unwrap().replace("width_per_s = 2e6", "width_per_s = 0");
    let path = dir.path().join("zero.toml");
    std::fs::write(&path, text).unwrap();
    let out = rindler(&["validate", path_str(&path), "--accel", "3e16"]);
    assert_eq!(code(&out), 0);
    assert!(stderr(&out).contains("width is zero"));
}

#[test]
fn malformed_config_names_the_offending_key() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.toml");
    std::fs::write(&path, "[state]\np_re = 1.0\nmystery_knob = 2\n").unwrap();
    let out = rindler(&["validate", path_str(&path)]);
    assert_eq!(code(&out), 1);
    assert!(stderr(&out).contains("mystery_knob"), "{}", stderr(&out));

    let missing = rindler(&["validate", "/nonexistent/config.toml"]);
    assert_eq!(code(&missing), 1);
}

#[test]
fn seedless_flag_is_refused() {
    let out = rindler(&["--seedless", "validate", path_str(&config("paper.toml"))]);
    assert_eq!(code(&out), 1);
}

#[test]
fn spread_tables_are_mirror_symmetric_and_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let out = rindler(&["spread", path_str(&config("paper.toml")), "--out", path_str(dir.path()), "--points", "4"]);
    assert_eq!(code(&out), 0, "{}", stderr(&out));
    for name in ["spread_samples.csv", "spread_profile_00.csv"] {
        let text = std::fs::read_to_string(dir.path().join(name)).unwrap();
        let table = Table::parse(&text).unwrap();
        assert_eq!(table.render(), text, "{name} does not re-render identically");
        // the photon carries no chirp, so X_L = conj(X_R)
        let (r, l) = (column(&table, "abs_x_r"), column(&table, "abs_x_l"));
        assert!(r.iter().zip(&l).all(|(a, b)| a == b));
    }
    let samples = Table::parse(&std::fs::read_to_string(dir.path().join("spread_samples.csv")).unwrap()).unwrap();
    assert_eq!(samples.rows.len(), 4);
    assert!(dir.path().join("spread.manifest.json").exists());
}

#[test]
fn disjoint_spectra_give_zero_negativity_and_identical_reruns() {
    let dirs = [tempfile::tempdir().unwrap(), tempfile::tempdir().unwrap()];
    for d in &dirs {
        let out = rindler(&["sweep", path_str(&config("disjoint.toml")), "--out", path_str(d.path())]);
        assert_eq!(code(&out), 0, "{}", stderr(&out));
    }
    let read = |d: &tempfile::TempDir, f: &str| std::fs::read(d.path().join(f)).unwrap();
    assert_eq!(read(&dirs[0], "sweep.csv"), read(&dirs[1], "sweep.csv"));
    assert_eq!(read(&dirs[0], "sweep.manifest.json"), read(&dirs[1], "sweep.manifest.json"));

    let table = Table::parse(std::str::from_utf8(&read(&dirs[0], "sweep.csv")).unwrap()).unwrap();
    assert_eq!(table.rows.len(), 8);
    assert!(column(&table, "negativity").iter().all(|&n| n == 0.0));
    assert!(column(&table, "w_env").iter().all(|&w| (w - 1.0).abs() < 1e-12));

    let manifest: serde_json::Value = serde_json::from_slice(&read(&dirs[0], "sweep.manifest.json")).unwrap();
    assert!(table.comments[0].ends_with(manifest["hash"].as_str().unwrap()));
    let timing: serde_json::Value = serde_json::from_slice(&read(&dirs[0], "timing.json")).unwrap();
    assert!(timing.is_object());
}

#[test]
fn brute_sweep_reproduces_the_peaked_sweep() {
    let cfg = config("oracle.toml");
    let (a, b) = (tempfile::tempdir().unwrap(), tempfile::tempdir().unwrap());
    let peaked = rindler(&["sweep", path_str(&cfg), "--out", path_str(a.path()), "--engine", "peaked"]);
    let brute = rindler(&[
        "sweep",
        path_str(&cfg),
        "--out",
        path_str(b.path()),
        "--engine",
        "brute",
        "--bins",
        "2",
        "--constant-r",
    ]);
    assert_eq!(code(&peaked), 0, "{}", stderr(&peaked));
    assert_eq!(code(&brute), 0, "{}", stderr(&brute));
    let load =
        |d: &tempfile::TempDir| Table::parse(&std::fs::read_to_string(d.path().join("sweep.csv")).unwrap()).unwrap();
    let (ta, tb) = (load(&a), load(&b));
    let (na, nb) = (column(&ta, "negativity"), column(&tb, "negativity"));
    assert!(na[0] > 1e-3);
    assert!((na[0] - nb[0]).abs() < 1e-10, "{} vs {}", na[0], nb[0]);
}

#[test]
fn oracle_check_passes_and_catches_a_tampered_engine() {
    let cfg = config("oracle.toml");
    let dir = tempfile::tempdir().unwrap();
    let ok = rindler(&["oracle-check", path_str(&cfg), "--out", path_str(dir.path())]);
    assert_eq!(code(&ok), 0, "{}{}", stdout(&ok), stderr(&ok));
    assert!(dir.path().join("oracle.json").exists());

    let tampered = rindler(&["oracle-check", path_str(&cfg), "--tamper-l"]);
    assert_eq!(code(&tampered), 3, "{}", stdout(&tampered));
}
