//! End-to-end tests of the `xnd` binary: golden output, JSON/table
//! agreement, and the exit-code contract (0 ok, 1 inconsistency/refusal,
//! 2 usage).

use std::process::{Command, Output};

fn xnd(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_xnd"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

#[test]
fn golden_table_x54() {
    let out = xnd(&["cohomology", "--n", "5", "--d", "4"]);
    assert!(out.status.success());
    let text = stdout(&out);
    for line in [
        "5       q^0         (1^5)",
        "6       q^2         (2^2,1)",
        "7       q^3         (3,2)",
        "10      q^5         (5)",
    ] {
        assert!(text.contains(line), "missing {line:?} in:\n{text}");
    }
}

#[test]
fn table_and_json_agree() {
    let table = stdout(&xnd(&["cohomology", "--n", "6", "--d", "4"]));
    let json = stdout(&xnd(&["cohomology", "--n", "6", "--d", "4", "--format", "json"]));
    let v: serde_json::Value = serde_json::from_str(&json).expect("valid json");
    assert_eq!(v["n"], 6);
    assert_eq!(v["d"], 4);
    assert_eq!(v["ring_tag"], "char-zero");
    assert_eq!(v["normalization"], "X-degrees");
    for entry in v["entries"].as_array().unwrap() {
        let deg = entry["degree"].as_i64().unwrap();
        let exp = entry["eigen_exp"].as_i64().unwrap();
        assert!(
            table.contains(&format!("{deg:<8}q^{exp}")),
            "row degree {deg} exp {exp} not in table output:\n{table}"
        );
        for key in entry["labels"].as_object().unwrap().keys() {
            // "3+2" renders as (3,2)
            let parts: Vec<&str> = key.split('+').collect();
            assert!(!parts.is_empty());
        }
    }
}

#[test]
fn nontrivial_coefficient() {
    let out = xnd(&["cohomology", "--n", "7", "--d", "4", "--mu", "2+1"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("mu=(2,1)"));
}

#[test]
fn modular_gate_exit_codes() {
    // refused without the override
    let out = xnd(&["cohomology", "--n", "20", "--d", "5", "--mod-m", "7"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("torsion-free"));
    // accepted with the override, marked unverified
    let out = xnd(&[
        "cohomology",
        "--n",
        "20",
        "--d",
        "5",
        "--mod-m",
        "7",
        "--assume-torsion-free",
    ]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("unverified"));
    // the remark exception is accepted without the override
    let out = xnd(&["cohomology", "--n", "5", "--d", "4", "--mod-m", "5"]);
    assert!(out.status.success());
    assert!(!stdout(&out).contains("unverified"));
}

#[test]
fn usage_errors_exit_2() {
    let out = xnd(&["cohomology", "--n", "5"]);
    assert_eq!(out.status.code(), Some(2));
    let out = xnd(&["cohomology", "--n", "5", "--d", "4", "--bogus-flag"]);
    assert_eq!(out.status.code(), Some(2));
    let out = xnd(&["no-such-subcommand"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn tilting_verdict() {
    let out = xnd(&["tilting", "--m", "5", "--r", "1", "--j", "5"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("partial-tilting: true"));
    // p is accepted as a global flag
    let out = xnd(&["tilting", "--m", "4", "--r", "2", "--j", "3", "--p", "3"]);
    assert!(out.status.success());
}

#[test]
fn dl_complex_report() {
    let out = xnd(&["dl-complex", "--n", "5", "--d", "4", "--mod-m", "5", "--r", "1"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("partial-tilting: true"));
    assert!(text.contains("D in degrees 5..10"));
    // gate applies here too
    let out = xnd(&["dl-complex", "--n", "9", "--d", "4", "--mod-m", "4", "--r", "1"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn brauer_and_blocks() {
    let out = xnd(&["brauer", "--m", "4", "--r", "2", "--labels", "4"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("S_4 = S(1^4)"));
    assert!(text.contains("P_4: 0 0 1 3"));
    let out = xnd(&["blocks", "--n", "5", "--d", "4", "--format", "json"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["blocks"].as_array().unwrap().len(), 4);
}

#[test]
fn check_les_small() {
    let out = xnd(&["check-les", "--max-n", "6"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("0 imbalanced"));
}

#[test]
fn seed_flag_accepted_and_ignored() {
    let a = stdout(&xnd(&["cohomology", "--n", "5", "--d", "4", "--seed", "7"]));
    let b = stdout(&xnd(&["cohomology", "--n", "5", "--d", "4", "--seed", "8"]));
    assert_eq!(a, b);
}
