//! Determinism gate: two runs with the same inputs and seed must produce
//! byte-identical artifacts.

use std::collections::BTreeMap;
use std::fs;
use std::path::Path;
use std::process::Command;

fn run_into(dir: &Path) {
    let out = Command::new(env!("CARGO_BIN_EXE_normtop"))
        .args([
            "verify",
            "--catalog",
            "S4",
            "--catalog",
            "Z12",
            "--catalog",
            "Q8",
            "--catalog",
            "V4 x V4",
            "--seed",
            "42",
            "--emit",
            "report-json,report-text,dot-hasse,dot-specialization",
            "--out",
        ])
        .arg(dir)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
}

fn snapshot(dir: &Path) -> BTreeMap<String, Vec<u8>> {
    fs::read_dir(dir)
        .unwrap()
        .map(|e| {
            let e = e.unwrap();
            (e.file_name().into_string().unwrap(), fs::read(e.path()).unwrap())
        })
        .collect()
}

#[test]
fn identical_runs_are_byte_identical() {
    let a = tempfile::tempdir().unwrap();
    let b = tempfile::tempdir().unwrap();
    run_into(a.path());
    run_into(b.path());
    let sa = snapshot(a.path());
    let sb = snapshot(b.path());
    assert_eq!(
        sa.keys().collect::<Vec<_>>(),
        sb.keys().collect::<Vec<_>>(),
        "file sets differ"
    );
    assert!(sa.contains_key("report.json"));
    assert!(sa.contains_key("S4.hasse.dot"));
    assert!(sa.contains_key("V4_x_V4.specialization.dot"));
    let mut pass = true;
    for (name, bytes) in &sa {
        if sb[name] != *bytes {
            eprintln!("artifact {} differs between runs", name);
            pass = false;
        }
    }
    println!(
        "criterion 8 (seeded reruns byte-identical): {}",
        if pass { "PASS" } else { "FAIL" }
    );
    assert!(pass);
}
