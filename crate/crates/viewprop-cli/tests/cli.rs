//! Exit-code and output-format contract of the benchmark binary.

use std::process::Command;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_viewprop-cli"))
}

#[test]
fn json_record_has_the_contract_keys() {
    let out = bin()
        .args(["--model", "queens", "--size", "6", "--all", "--stats", "json"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let stdout = String::from_utf8(out.stdout).unwrap();
    let lines: Vec<&str> = stdout.trim().lines().collect();
    assert_eq!(lines.len(), 1, "exactly one record line");
    let rec: serde_json::Value = serde_json::from_str(lines[0]).unwrap();
    for key in ["model", "size", "mode", "solutions", "failures", "propagations", "nodes", "wall_ms"] {
        assert!(rec.get(key).is_some(), "missing key {key}");
    }
    assert_eq!(rec["model"], "queens");
    assert_eq!(rec["size"], 6);
    assert_eq!(rec["mode"], "views");
    assert_eq!(rec["solutions"], 4);
}

#[test]
fn modes_agree_on_solution_counts() {
    let count = |mode: &str| -> serde_json::Value {
        let out = bin()
            .args(["--model", "steiner", "--size", "7", "--mode", mode, "--all", "--stats", "json"])
            .output()
            .unwrap();
        assert!(out.status.success());
        serde_json::from_slice(&out.stdout).unwrap()
    };
    let v = count("views");
    let d = count("decomposed");
    assert_eq!(v["solutions"], d["solutions"]);
    assert_eq!(v["failures"], d["failures"]);
}

#[test]
fn unknown_model_exits_one() {
    let out = bin().args(["--model", "nonesuch", "--first"]).output().unwrap();
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn bad_flag_exits_one() {
    let out = bin().args(["--model", "queens", "--stats", "xml"]).output().unwrap();
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn optimize_reports_best() {
    let out = bin()
        .args(["--model", "golomb", "--size", "6", "--optimize", "--stats", "json"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let rec: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(rec["best"], 17);
}

#[test]
fn seed_check_passes() {
    let out = bin().arg("--seed-check").output().unwrap();
    assert!(out.status.success(), "seed-check exited nonzero");
}
