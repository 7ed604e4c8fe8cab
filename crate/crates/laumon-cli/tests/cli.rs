use laumon_core::exactalg::parse_scalar;
use serde_json::Value;
use std::path::PathBuf;
use std::process::{Command, Output};

fn laumon(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_laumon"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).expect("stdout is JSON")
}

fn file(name: &str, body: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("laumon-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let p = dir.join(name);
    std::fs::write(&p, body).unwrap();
    p
}

#[test]
fn enumerate_single_box() {
    let o = laumon(&[
        "enumerate",
        "--kind",
        "affine",
        "-n",
        "3",
        "--degree",
        "1,0,0",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    let list = v.as_array().unwrap();
    assert_eq!(list.len(), 1);
    assert_eq!(list[0]["lambdas"], serde_json::json!([[1], [], []]));
}

#[test]
fn enumerate_finite_counts() {
    let o = laumon(&[
        "enumerate",
        "--kind",
        "finite",
        "-n",
        "3",
        "--degree",
        "1,1",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(!json(&o).as_array().unwrap().is_empty());
}

#[test]
fn apply_e_to_vacuum() {
    let vac = file("vacuum.json", r#"{"lambdas": [[], [], []]}"#);
    let o = laumon(&[
        "apply",
        "--gen",
        "e",
        "-i",
        "1",
        "--state",
        vac.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    let terms = v["terms"].as_array().unwrap();
    assert_eq!(terms.len(), 1);
    let c = parse_scalar(terms[0]["coeff"].as_str().unwrap()).unwrap();
    assert_eq!(c, parse_scalar("-1/h").unwrap());
}

#[test]
fn verify_suites_exit_codes() {
    assert_eq!(
        laumon(&["verify", "xvi", "-n", "3", "--max-degree", "2"])
            .status
            .code(),
        Some(0)
    );
    assert_eq!(
        laumon(&["verify", "k-identity", "-n", "3", "--max-degree", "1"])
            .status
            .code(),
        Some(0)
    );
    assert_eq!(
        laumon(&[
            "verify",
            "truncation",
            "-n",
            "3",
            "--max-degree",
            "2",
            "--mu",
            "0,0,0",
            "--level",
            "1"
        ])
        .status
        .code(),
        Some(0)
    );
    let bad = laumon(&[
        "verify",
        "localization",
        "-n",
        "3",
        "--max-degree",
        "1",
        "--mutate",
        "flip-e-sign",
    ]);
    assert_eq!(bad.status.code(), Some(1));
    let v = json(&bad);
    assert_eq!(v["ok"], Value::Bool(false));
    assert!(v["failed"].as_u64().unwrap() > 0);
}

#[test]
fn character_table() {
    let o = laumon(&[
        "character",
        "--mu",
        "0,0,0",
        "--level",
        "1",
        "--cutoff",
        "3",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json(&o)["ok"], Value::Bool(true));
}

#[test]
fn localize_edge_and_tangent() {
    let vac = file("vac2.json", r#"[[], [], []]"#);
    let one = file(
        "one.json",
        r#"{"kind": "affine", "lambdas": [[1], [], []]}"#,
    );
    let o = laumon(&[
        "localize",
        "edge",
        "--pattern",
        vac.to_str().unwrap(),
        "-i",
        "1",
        "-j",
        "1",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        parse_scalar(json(&o)["e"].as_str().unwrap()).unwrap(),
        parse_scalar("-1/h").unwrap()
    );
    let o = laumon(&["localize", "tangent", "--pattern", one.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json(&o)["weights"].as_array().unwrap().len(), 2);
}

#[test]
fn series_uses_config_order() {
    let vac = file("vac3.json", r#"[[], [], []]"#);
    let cfg = file("laumon.conf", "# test\nseries_order = 3\n");
    let o = laumon(&[
        "--config",
        cfg.to_str().unwrap(),
        "series",
        "phi",
        "--pattern",
        vac.to_str().unwrap(),
    ]);
    assert_eq!(
        o.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&o.stderr)
    );
    assert_eq!(json(&o)["value"]["series"].as_array().unwrap().len(), 4);
}

#[test]
fn malformed_input_exits_two() {
    let bad = file("bad.json", "[[1, 2]]");
    assert_eq!(
        laumon(&[
            "apply",
            "--gen",
            "e",
            "-i",
            "1",
            "--state",
            bad.to_str().unwrap()
        ])
        .status
        .code(),
        Some(2)
    );
    assert_eq!(
        laumon(&[
            "apply",
            "--gen",
            "zz",
            "-i",
            "1",
            "--state",
            bad.to_str().unwrap()
        ])
        .status
        .code(),
        Some(2)
    );
    let cfg = file("bad.conf", "colour = red\n");
    assert_eq!(
        laumon(&["--config", cfg.to_str().unwrap(), "verify", "xvi"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        laumon(&["character", "--mu", "1,0", "--level", "1", "--cutoff", "2"])
            .status
            .code(),
        Some(2)
    );
    let allow = file("allow.conf", "enforce_n_gt_2 = false\n");
    assert_eq!(
        laumon(&[
            "--config",
            allow.to_str().unwrap(),
            "enumerate",
            "--kind",
            "affine",
            "-n",
            "2",
            "--max-degree",
            "1"
        ])
        .status
        .code(),
        Some(0)
    );
}
