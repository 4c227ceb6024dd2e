//! End-to-end checks of the command-line surface: determinism, formats,
//! and exit codes.

use std::path::PathBuf;
use std::process::Command;

fn bin() -> PathBuf {
    let mut p = PathBuf::from(env!("CARGO_BIN_EXE_strataforge"));
    assert!(p.exists(), "{p:?}");
    p = p.canonicalize().unwrap();
    p
}

fn config(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../configs").join(name)
}

fn run(args: &[&str]) -> (String, String, Option<i32>) {
    let out = Command::new(bin()).args(args).output().unwrap();
    (
        String::from_utf8_lossy(&out.stdout).into_owned(),
        String::from_utf8_lossy(&out.stderr).into_owned(),
        out.status.code(),
    )
}

#[test]
fn deterministic_output() {
    let cfg = config("su21_ball.toml");
    let cfg = cfg.to_str().unwrap();
    let (a, _, code) = run(&["classify", "--config", cfg]);
    assert_eq!(code, Some(0));
    let (b, _, _) = run(&["classify", "--config", cfg]);
    assert_eq!(a, b, "identical config must yield byte-identical output");
}

#[test]
fn hasse_dot_is_wellformed() {
    let cfg = config("pgl2.toml");
    let (out, _, code) = run(&["hasse", "--config", cfg.to_str().unwrap(), "--format", "dot"]);
    assert_eq!(code, Some(0));
    assert!(out.starts_with("digraph"));
    assert!(out.trim_end().ends_with('}'));
    assert_eq!(out.matches("shape=circle").count(), 3);
}

#[test]
fn mhd_grid() {
    let cfg = config("su21_carayol.toml");
    let (out, _, code) = run(&["mhd", "o0^{e}", "--config", cfg.to_str().unwrap()]);
    assert_eq!(code, Some(0));
    assert!(out.contains("(2)"), "origin marked: {out}");
}

#[test]
fn config_errors_exit_2() {
    let dir = std::env::temp_dir().join("strataforge-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let bad = dir.join("bad.toml");
    std::fs::write(&bad, "type = \"A2\"\ngrading = [1]\n").unwrap();
    let (_, err, code) = run(&["orbits", "--config", bad.to_str().unwrap()]);
    assert_eq!(code, Some(2), "{err}");
    assert!(err.contains("grading length"));

    let bad2 = dir.join("bad2.toml");
    std::fs::write(&bad2, "type = \"E8\"\ngrading = [1]\n").unwrap();
    let (_, _, code) = run(&["orbits", "--config", bad2.to_str().unwrap()]);
    assert_eq!(code, Some(2));
}

#[test]
fn limit_subcommand_sp6() {
    let cfg = config("sp6_siegel.toml");
    let (out, err, code) = run(&[
        "limit",
        "--config",
        cfg.to_str().unwrap(),
        "--j",
        "4",
        "--w",
        "3",
        "--n",
        "-1,-1,0;0,-1,0;-1,-2,-1",
    ]);
    assert_eq!(code, Some(0), "{err}");
    assert!(out.contains("is_split"), "{out}");
    assert!(out.contains("dim_orbit"));
}

#[test]
fn g2_fixture_config_runs() {
    let cfg = config("g2_complete.toml");
    let (out, _, code) = run(&["orbits", "--config", cfg.to_str().unwrap()]);
    assert_eq!(code, Some(0));
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["orbits"].as_array().unwrap().len(), 10);
    assert!(v["real_weyl"].as_array().unwrap().iter().all(|rw| rw["complete"].as_bool().unwrap()));
}
