use std::path::PathBuf;
use std::process::{Command, Output};

use liegen::cli::{emit_scene, parse_scene};

fn fixture(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/fixtures")
        .join(name)
        .to_string_lossy()
        .into_owned()
}

fn liegen(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_liegen")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

#[test]
fn validate_exit_codes() {
    let ok = liegen(&["validate", &fixture("figure_eight_double.json")]);
    assert_eq!(ok.status.code(), Some(0));
    assert!(stdout(&ok).contains("validation passed"));

    let det = liegen(&["validate", &fixture("det_plus_one.json")]);
    assert_eq!(det.status.code(), Some(1));
    assert!(stdout(&det).contains("FAIL edge/e0/orientation"));
    assert!(stdout(&det).contains("orientation convention"));

    let unmatched = liegen(&["validate", &fixture("unmatched_cusp.json")]);
    assert_eq!(unmatched.status.code(), Some(1));
    assert!(stdout(&unmatched).contains("unmatched cusp"));

    for bad in ["malformed_number.json", "unknown_key.json", "does_not_exist.json"] {
        let o = liegen(&["validate", &fixture(bad)]);
        assert_eq!(o.status.code(), Some(64), "{bad}: {}", stderr(&o));
    }
}

#[test]
fn build_verify_exit_codes() {
    for ok in ["figure_eight_double.json", "figure_eight_klein.json", "closed_piece.json", "mixed_chain.json"] {
        let o = liegen(&["build-verify", &fixture(ok)]);
        assert_eq!(o.status.code(), Some(0), "{ok}: {}", stderr(&o));
        let doc: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
        assert_eq!(doc["status"], "pass");
        assert_eq!(doc["seed"], 0);
        assert_eq!(doc["samples"], 100);
        assert_eq!(doc["eps"], 1e-9);
    }
    let fault = liegen(&["build-verify", &fixture("fault_injected.json")]);
    assert_eq!(fault.status.code(), Some(2));
    assert!(stderr(&fault).contains("FAIL reduction/w3/t0"));
    assert_eq!(liegen(&["build-verify", &fixture("det_plus_one.json")]).status.code(), Some(1));
    let zero = liegen(&["build-verify", &fixture("figure_eight_double.json"), "--eps", "0"]);
    assert_eq!(zero.status.code(), Some(2));
}

#[test]
fn build_verify_writes_report_file() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("report.json");
    let o = liegen(&[
        "build-verify",
        &fixture("figure_eight_klein.json"),
        "--samples",
        "20",
        "--seed",
        "3",
        "--out",
        out.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).is_empty());
    let text = std::fs::read_to_string(&out).unwrap();
    let doc: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(doc["statistics"]["regions"], 6);
    assert_eq!(doc["statistics"]["intersections"], 5);
    assert_eq!(doc["statistics"]["moduli_dimension"], 3);
    assert_eq!(doc["samples"], 20);
    let at = |k: &str| text.find(&format!("\n  \"{k}\":")).unwrap();
    let order = ["status", "eps", "samples", "seed", "statistics", "checks", "notes"].map(at);
    assert!(order.windows(2).all(|w| w[0] < w[1]));
}

#[test]
fn develop_outputs() {
    let scene = fixture("figure_eight_double.json");
    let trivial = liegen(&["develop", &scene, "--loop", ""]);
    assert_eq!(trivial.status.code(), Some(0));
    assert!(stdout(&trivial).contains("holonomy: 0 letters"));
    assert!(stdout(&trivial).contains("image: 0 0 1"));

    // meridian then longitude of the base cusp
    let o = liegen(&["develop", &scene, "--loop", "w0,+t0,w0", "--point", "0.25,-1,2"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert!(stdout(&o).contains("image: 1.25 -1 2"), "{}", stdout(&o));
    let o = liegen(&["develop", &scene, "--loop", "w0,-t1,w0", "--point", "0,0,1"]);
    assert!(stdout(&o).contains("image: 0 -3.46410161513775 1"), "{}", stdout(&o));

    for bad in ["w99", "w0,q", "+t0", "w0"] {
        let o = liegen(&["develop", &scene, "--loop", bad]);
        assert_eq!(o.status.code(), Some(65), "{bad}");
        assert!(stderr(&o).contains("loop grammar"));
    }
    assert_eq!(liegen(&["develop", &scene, "--point", "0,0,-1"]).status.code(), Some(64));
}

#[test]
fn moduli_outputs() {
    let zero = liegen(&["moduli", &fixture("closed_piece.json")]);
    assert_eq!(stdout(&zero).lines().next(), Some("0"));
    let one = liegen(&["moduli", &fixture("figure_eight_double.json")]);
    let text = stdout(&one);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "3");
    assert_eq!(lines[1], "e0 (v1.c0 -- v2.c0): slide 0, offset [0, 0]");
    let two = liegen(&["moduli", &fixture("mixed_chain.json")]);
    assert_eq!(stdout(&two).lines().next(), Some("6"));
    assert_eq!(liegen(&["moduli", &fixture("unmatched_cusp.json")]).status.code(), Some(1));
}

#[test]
fn scene_files_round_trip() {
    let dir = std::fs::read_dir(PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures")).unwrap();
    let mut seen = 0;
    for entry in dir {
        let path = entry.unwrap().path();
        let Ok(scene) = parse_scene(&std::fs::read_to_string(&path).unwrap()) else { continue };
        let once = emit_scene(&scene);
        let again = parse_scene(&once).unwrap();
        assert_eq!(again, scene, "{}", path.display());
        assert_eq!(emit_scene(&again), once, "{}", path.display());
        seen += 1;
    }
    assert!(seen >= 7);
}

#[test]
fn bad_flags_are_usage_errors() {
    assert_eq!(liegen(&["build-verify"]).status.code(), Some(64));
    assert_eq!(liegen(&["frobnicate"]).status.code(), Some(64));
    assert_eq!(liegen(&["--help"]).status.code(), Some(0));
}
