//! End-to-end tests of the `lgk` binary: canonical JSON output, exit
//! codes, and file round-trips.

use std::process::{Command, Output};

fn lgk(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lgk"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn brd_new_emits_canonical_json() {
    let out = lgk(&["brd", "new", "--preset", "SL", "2"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.starts_with("{\"brd_schema\":1,"));
    assert!(text.contains("\"rank\":1"));
    // canonical: parse and re-serialize leaves it unchanged
    let parsed: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(parsed["brd_schema"], 1);
}

#[test]
fn brd_show_round_trips_byte_identically() {
    let dir = std::env::temp_dir().join("lgk_cli_roundtrip");
    std::fs::create_dir_all(&dir).unwrap();
    for preset in ["SL3", "GL2", "PGL4", "Sp4", "SO5", "SU3", "Torus2"] {
        let fresh = stdout(&lgk(&["brd", "new", "--preset", preset]));
        let path = dir.join(format!("{preset}.json"));
        std::fs::write(&path, &fresh).unwrap();
        let shown = stdout(&lgk(&["brd", "show", "--input", path.to_str().unwrap()]));
        assert_eq!(fresh, shown, "{preset} round trip not byte-identical");
    }
}

#[test]
fn brd_dual_of_sl2_matches_pgl2() {
    let dual = stdout(&lgk(&["brd", "dual", "--preset", "SL2"]));
    let pgl2 = stdout(&lgk(&["brd", "new", "--preset", "PGL2"]));
    assert_eq!(dual, pgl2);
}

#[test]
fn cohomology_counts() {
    let out = lgk(&["cohomology", "alpha", "--preset", "PGL3", "--count", "--nonarch"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "3 classes");

    let out = lgk(&["cohomology", "alpha", "--preset", "SL5", "--count", "--nonarch"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "1 class");

    let out = lgk(&[
        "cohomology", "rigid", "--preset", "SL2", "--sublattice", "full-center",
        "--count", "--nonarch",
    ]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "2 classes");

    let out = lgk(&["cohomology", "iso", "--preset", "GL3", "--count", "--nonarch"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "infinitely many classes");
}

#[test]
fn archimedean_count_is_a_validation_failure() {
    let out = lgk(&["cohomology", "alpha", "--preset", "PGL3", "--count", "--arch"]);
    assert_eq!(out.status.code(), Some(1));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("target only"), "stderr: {err}");
}

#[test]
fn usage_and_parse_errors_exit_2() {
    // unknown preset
    let out = lgk(&["brd", "new", "--preset", "E8"]);
    assert_eq!(out.status.code(), Some(2));

    // malformed JSON input
    let dir = std::env::temp_dir().join("lgk_cli_bad");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("bad.json");
    std::fs::write(&path, "{not json").unwrap();
    let out = lgk(&["brd", "show", "--input", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));

    // missing required argument (clap usage error)
    let out = lgk(&["brd", "new"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn validate_sets_exit_code() {
    let out = lgk(&["brd", "validate", "--preset", "SU3"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("PASS"));

    // break the pairing: swap the two coroots of SL3 so <a_i, a_i^> != 2
    let text = stdout(&lgk(&["brd", "new", "--preset", "SL3"]));
    let mut v: serde_json::Value = serde_json::from_str(&text).unwrap();
    let coroots = v["coroots"].as_array().unwrap().clone();
    let mut swapped = coroots.clone();
    swapped.swap(0, 1);
    v["coroots"] = serde_json::Value::Array(swapped);
    let dir = std::env::temp_dir().join("lgk_cli_invalid");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("swapped.json");
    std::fs::write(&path, serde_json::to_string(&v).unwrap()).unwrap();
    let out = lgk(&["brd", "validate", "--input", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn levi_output_is_a_valid_datum() {
    let levi = stdout(&lgk(&["brd", "levi", "--preset", "Sp4", "--subset", "0"]));
    let dir = std::env::temp_dir().join("lgk_cli_levi");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("levi.json");
    std::fs::write(&path, &levi).unwrap();
    let out = lgk(&["brd", "validate", "--input", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn b_torus_su3_newton_point() {
    let out = lgk(&["cohomology", "b-torus", "--preset", "SU3", "--newton", "1,0"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v[0], "1/2");
    assert_eq!(v[1], "1/2");
}

#[test]
fn endoscopy_sl2_elliptic() {
    let out = lgk(&[
        "param", "endoscopy", "--group", "SL2", "--s", "1/2", "--twist", "frobenius-weyl",
    ]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["h_brd"]["roots"].as_array().unwrap().len(), 0);
    assert_eq!(v["h_brd"]["galois"]["action"][1][0][0], -1);
}

#[test]
fn table_format_is_human_readable() {
    let out = lgk(&["brd", "show", "--preset", "SL2", "--format", "table"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(!text.starts_with('{'));
    assert!(text.contains("rank"));
}
