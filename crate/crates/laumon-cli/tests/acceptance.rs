//! One pass/fail line per acceptance criterion, printed on every run of
//! `cargo test -p laumon-cli --test acceptance`.

use laumon_cli::suites::{criterion, Criterion, Runner};
use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output};

fn laumon(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_laumon"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn scratch(name: &str, body: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("laumon-acceptance-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let p = dir.join(name);
    std::fs::write(&p, body).unwrap();
    p
}

/// Determinism and exit codes of the binary.
fn cli_criterion() -> Criterion {
    let mut notes = Vec::new();
    let vacuum = scratch("vacuum.json", r#"{"lambdas": [[], [], []]}"#);
    let bad = scratch("bad.json", "{not json");
    let vac = vacuum.to_str().unwrap();

    let runs: Vec<Vec<&str>> = vec![
        vec![
            "verify",
            "localization",
            "-n",
            "3",
            "--max-degree",
            "2",
            "--threads",
            "2",
        ],
        vec!["verify", "xvi", "-n", "3", "--max-degree", "2"],
        vec!["apply", "--gen", "e", "-i", "1", "--state", vac],
        vec![
            "enumerate",
            "--kind",
            "affine",
            "-n",
            "3",
            "--degree",
            "1,0,0",
        ],
    ];
    let mut deterministic = true;
    for args in &runs {
        let (a, b) = (laumon(args), laumon(args));
        if a.stdout != b.stdout || a.status.code() != b.status.code() {
            deterministic = false;
            notes.push(format!("output of {:?} differs between runs", args));
        }
    }
    let one = laumon(&[
        "verify",
        "localization",
        "-n",
        "3",
        "--max-degree",
        "2",
        "--threads",
        "1",
    ]);
    let two = laumon(&runs[0]);
    if one.stdout != two.stdout {
        deterministic = false;
        notes.push("output depends on the thread count".into());
    }

    let mut codes = true;
    let mut expect = |args: &[&str], code: i32| {
        let got = laumon(args).status.code();
        if got != Some(code) {
            codes = false;
            notes.push(format!("{:?} exited {:?}, expected {}", args, got, code));
        }
    };
    expect(
        &["verify", "localization", "-n", "3", "--max-degree", "2"],
        0,
    );
    expect(
        &[
            "verify",
            "localization",
            "-n",
            "3",
            "--max-degree",
            "2",
            "--mutate",
            "flip-e-sign",
        ],
        1,
    );
    expect(&["verify", "xvi", "-n", "3", "--max-degree", "2"], 0);
    expect(
        &[
            "apply",
            "--gen",
            "e",
            "-i",
            "1",
            "--state",
            bad.to_str().unwrap(),
        ],
        2,
    );
    expect(
        &[
            "enumerate",
            "--kind",
            "affine",
            "-n",
            "3",
            "--degree",
            "1,0",
        ],
        2,
    );
    expect(&["verify", "xvi", "-n", "2"], 2);

    let passed = deterministic && codes;
    let detail = if notes.is_empty() {
        "repeated runs identical; exit codes 0/1/2 as expected".to_string()
    } else {
        notes.join("; ")
    };
    Criterion {
        id: 12,
        title: "CLI determinism and exit codes",
        passed,
        detail,
    }
}

#[test]
fn acceptance() {
    let runner = Runner::new(1).unwrap();
    let mut all = Vec::new();
    for id in 1..=11 {
        all.push(criterion(&runner, id));
    }
    all.push(cli_criterion());
    // Written to the raw handle so the lines show up without `--nocapture`.
    let mut out = std::io::stdout().lock();
    for c in &all {
        let _ = writeln!(
            out,
            "criterion {:>2}: {}: {} ({})",
            c.id,
            c.title,
            if c.passed { "PASS" } else { "FAIL" },
            c.detail
        );
    }
    let failed: Vec<u32> = all.iter().filter(|c| !c.passed).map(|c| c.id).collect();
    assert!(failed.is_empty(), "failing criteria: {:?}", failed);
}
