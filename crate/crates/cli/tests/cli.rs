//! End-to-end tests of the `hsop` binary: output formats, exit codes,
//! shard plumbing, JSON/text agreement and the persistent cache.

use std::path::PathBuf;
use std::process::{Command, Output};

fn hsop(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hsop"))
        .args(args)
        .env_remove("HSOP_CACHE_DIR")
        .output()
        .expect("failed to launch hsop")
}

fn stdout(args: &[&str]) -> String {
    let out = hsop(args);
    assert!(
        out.status.success(),
        "hsop {args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).expect("utf8 output")
}

fn exit_code(args: &[&str]) -> i32 {
    hsop(args).status.code().expect("exit code")
}

#[test]
fn dims_and_table() {
    assert_eq!(stdout(&["dims", "--n", "8", "--m", "14"]).trim(), "31");
    assert_eq!(
        stdout(&["dims", "--n", "7", "--m", "2", "--order", "2"]).trim(),
        "1"
    );
    let table = stdout(&["table", "--n-max", "4", "--m-max", "3"]);
    assert_eq!(table, ".\t.\t.\t.\n.\t1\t.\t1\n.\t.\t.\t1\n");
}

#[test]
fn poincare_text_and_machine() {
    let out = stdout(&["poincare", "--n", "3", "--order", "12", "--machine"]);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines[0], "1 + t^4 + t^8 + t^12");
    assert_eq!(lines[1], "0:1,4:1,8:1,12:1");
}

#[test]
fn numerator_golden_and_assert() {
    let out = stdout(&["numerator", "--n", "8", "--degrees", "2,3,4,5,6,7"]);
    assert!(out.starts_with("1 + t^8 + t^9 + t^10 + t^18\n"));
    assert!(out.contains("palindromic: true"));

    // negative numerator: verdict false under --assert
    let code = exit_code(&[
        "numerator",
        "--n",
        "8",
        "--degrees",
        "2,2,5,6,7,12",
        "--assert",
    ]);
    assert_eq!(code, 3);

    // divisibility failure is a usage error
    let out = hsop(&["numerator", "--n", "6", "--degrees", "7,7,7,7"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(!out.stderr.is_empty());
}

#[test]
fn check_report_and_exit_codes() {
    let out = stdout(&["check", "--n", "5", "--degrees", "4,8,12"]);
    assert!(out.ends_with("PASS\n"));
    assert!(out.contains("mod 8: need 1, have 1, OK"));

    assert_eq!(exit_code(&["check", "--n", "5", "--degrees", "4,4,6"]), 0);
    assert_eq!(
        exit_code(&["check", "--n", "5", "--degrees", "4,4,6", "--assert"]),
        3
    );
    assert_eq!(exit_code(&["check", "--n", "5", "--degrees", "4,x"]), 2);
    assert_eq!(exit_code(&["check", "--n", "2", "--degrees", "4"]), 2);
    assert_eq!(exit_code(&["no-such-command"]), 2);
}

#[test]
fn admissible_and_minimal_text() {
    let out = stdout(&["admissible", "--n", "6", "--degrees", "6,6,6,20"]);
    assert!(out.starts_with("not admissible"));
    assert!(out.contains("n6.no_three_in_2_6_17_21"));

    let out = stdout(&["minimal", "--n", "5", "--degrees", "4,8,30"]);
    assert!(out.contains("admissible: true"));
    assert!(out.contains("minimal: false"));
    assert!(out.contains("reduction: 30 = 12 + 18 -> [4, 8, 12] and [4, 8, 18]"));

    assert_eq!(
        exit_code(&["minimal", "--n", "5", "--degrees", "4,8,30", "--assert"]),
        3
    );
    assert_eq!(
        exit_code(&["minimal", "--n", "5", "--degrees", "4,8,12", "--assert"]),
        0
    );
}

#[test]
fn enumerate_round_trip() {
    for n in ["4", "5", "6"] {
        let out = stdout(&["enumerate", "--n", n]);
        assert!(!out.trim().is_empty());
        for line in out.lines() {
            assert_eq!(
                exit_code(&["admissible", "--n", n, "--degrees", line, "--assert"]),
                0,
                "enumerated sequence rejected: n={n} {line}"
            );
            assert_eq!(
                exit_code(&["minimal", "--n", n, "--degrees", line, "--assert"]),
                0,
                "enumerated sequence not minimal: n={n} {line}"
            );
        }
    }
}

#[test]
fn enumerate_septimic_prints_23_lines() {
    let out = stdout(&["enumerate", "--n", "7"]);
    assert_eq!(out.lines().count(), 23);
    assert!(out.starts_with("4,8,8,12,30\n"));
    assert!(out.ends_with("12,14,14,20,24\n"));
}

#[test]
fn enumerate_workers_do_not_change_bytes() {
    let reference = stdout(&["enumerate", "--n", "6", "--workers", "1"]);
    for workers in ["2", "4", "16"] {
        assert_eq!(
            stdout(&["enumerate", "--n", "6", "--workers", workers]),
            reference
        );
    }
}

#[test]
fn enumerate_shards_and_merge() {
    let dir = std::env::temp_dir().join(format!("hsop-shards-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let mut files: Vec<PathBuf> = Vec::new();
    for shard in 0..3 {
        let out = stdout(&[
            "enumerate",
            "--n",
            "6",
            "--shards",
            "3",
            "--shard",
            &shard.to_string(),
        ]);
        let path = dir.join(format!("shard-{shard}.txt"));
        std::fs::write(&path, out).unwrap();
        files.push(path);
    }
    let mut args = vec!["enumerate", "--n", "6", "--merge"];
    let file_args: Vec<String> = files.iter().map(|p| p.display().to_string()).collect();
    args.extend(file_args.iter().map(String::as_str));
    let merged = stdout(&args);
    assert_eq!(merged, stdout(&["enumerate", "--n", "6"]));
    let _ = std::fs::remove_dir_all(&dir);
}

#[test]
fn scan_output() {
    let out = stdout(&["scan", "--n", "3", "--lower", "4", "--upper", "4"]);
    assert_eq!(out, "passing: 1\nobstructions: 0\n");
    assert_eq!(
        exit_code(&["scan", "--n", "3", "--lower", "4", "--upper", "4", "--assert"]),
        0
    );
    // {2,2} obstruction within range: verdict false
    assert_eq!(
        exit_code(&["scan", "--n", "8", "--lower", "2", "--upper", "12", "--assert"]),
        3
    );
}

#[test]
fn transvect_and_nullform() {
    let out = stdout(&["transvect", "--lhs", "2: 1,3,1", "--k", "2"]);
    assert_eq!(out.lines().next().unwrap(), "(-5/2)");

    // product at k = 0
    let out = stdout(&[
        "transvect",
        "--lhs",
        "1: 1,0",
        "--rhs",
        "1: 0,1",
        "--k",
        "0",
    ]);
    assert_eq!(out.lines().nth(1).unwrap(), "2: 0,1,0");

    let out = stdout(&["nullform", "--form", "4: 0,1,0,0,0"]);
    assert!(out.contains("max multiplicity: 3"));
    assert!(out.contains("nullform: true"));
    assert_eq!(
        exit_code(&["nullform", "--form", "4: 0,0,1,0,0", "--assert"]),
        3
    );
    assert_eq!(exit_code(&["nullform", "--form", "4: 0,0,0,0,0"]), 2);
    assert_eq!(
        exit_code(&["transvect", "--lhs", "2: 1,1,1", "--k", "5"]),
        2
    );
}

#[test]
fn eval_invariant_listing_and_value() {
    let listing = stdout(&["eval-invariant", "--list", "7"]);
    assert!(listing.contains("n7.psi"));
    assert!(listing.contains("n7.i18_chain"));

    // discriminant-type invariant of the quadratic
    let out = stdout(&["eval-invariant", "--chain", "n2.i2", "--form", "2: 1,3,1"]);
    assert_eq!(out.trim(), "-5/2");

    assert_eq!(
        exit_code(&["eval-invariant", "--chain", "nope", "--form", "2: 1,0,1"]),
        2
    );
    assert_eq!(
        exit_code(&["eval-invariant", "--chain", "n7.psi", "--form", "2: 1,0,1"]),
        2
    );
}

#[test]
fn json_matches_text_values() {
    // dims
    let j: serde_json::Value =
        serde_json::from_str(stdout(&["dims", "--n", "12", "--m", "12", "--json"]).trim()).unwrap();
    assert_eq!(j["dimension"], "127");

    // numerator terms agree with the machine line
    let text = stdout(&[
        "numerator",
        "--n",
        "6",
        "--degrees",
        "6,6,6,20",
        "--machine",
    ]);
    let machine_line = text.lines().nth(1).unwrap();
    let j: serde_json::Value = serde_json::from_str(
        stdout(&["numerator", "--n", "6", "--degrees", "6,6,6,20", "--json"]).trim(),
    )
    .unwrap();
    let from_json: Vec<String> = j["terms"]
        .as_array()
        .unwrap()
        .iter()
        .map(|t| format!("{}:{}", t[0].as_str().unwrap(), t[1].as_str().unwrap()))
        .collect();
    assert_eq!(from_json.join(","), machine_line);
    assert_eq!(j["palindromic"], true);
    assert_eq!(j["first_negative"], serde_json::Value::Null);

    // check
    let j: serde_json::Value =
        serde_json::from_str(stdout(&["check", "--n", "5", "--degrees", "4,4,6", "--json"]).trim())
            .unwrap();
    assert_eq!(j["pass"], false);
    assert!(j["requirements"]
        .as_array()
        .unwrap()
        .iter()
        .any(|r| r["modulus"] == "8" && r["have"] == "0" && r["ok"] == false));

    // enumerate emits one object per line
    let out = stdout(&["enumerate", "--n", "5", "--json"]);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines.len(), 2);
    let j: serde_json::Value = serde_json::from_str(lines[0]).unwrap();
    assert_eq!(j["degrees"], serde_json::json!(["4", "8", "12"]));

    // scan
    let j: serde_json::Value = serde_json::from_str(
        stdout(&["scan", "--n", "3", "--lower", "4", "--upper", "8", "--json"]).trim(),
    )
    .unwrap();
    assert_eq!(j["passing"], "2");

    // eval-invariant scalar
    let j: serde_json::Value = serde_json::from_str(
        stdout(&[
            "eval-invariant",
            "--chain",
            "n2.i2",
            "--form",
            "2: 1,3,1",
            "--json",
        ])
        .trim(),
    )
    .unwrap();
    assert_eq!(j["value"], "-5/2");

    // nullform
    let j: serde_json::Value =
        serde_json::from_str(stdout(&["nullform", "--form", "6: 1,0,3,0,3,0,1", "--json"]).trim())
            .unwrap();
    assert_eq!(j["max_multiplicity"], "3");
    assert_eq!(j["nullform"], false);
}

#[test]
fn cache_dir_roundtrip_and_corruption() {
    let dir = std::env::temp_dir().join(format!("hsop-cli-cache-{}", std::process::id()));
    let _ = std::fs::remove_dir_all(&dir);
    let run = |args: &[&str]| {
        let out = Command::new(env!("CARGO_BIN_EXE_hsop"))
            .args(args)
            .env("HSOP_CACHE_DIR", &dir)
            .output()
            .expect("failed to launch hsop");
        assert!(out.status.success());
        String::from_utf8(out.stdout).unwrap()
    };
    let reference = run(&["numerator", "--n", "6", "--degrees", "6,6,6,20"]);
    let cache_files: Vec<_> = std::fs::read_dir(&dir).unwrap().collect();
    assert!(!cache_files.is_empty(), "cache files were not written");

    // warm run gives identical bytes
    assert_eq!(
        run(&["numerator", "--n", "6", "--degrees", "6,6,6,20"]),
        reference
    );

    // corrupt every cache file: results must still be correct
    for entry in std::fs::read_dir(&dir).unwrap() {
        let path = entry.unwrap().path();
        std::fs::write(&path, "garbage").unwrap();
    }
    assert_eq!(
        run(&["numerator", "--n", "6", "--degrees", "6,6,6,20"]),
        reference
    );
    let _ = std::fs::remove_dir_all(&dir);
}

#[test]
fn usage_errors_are_one_line_on_stderr() {
    let out = hsop(&["admissible", "--n", "9", "--degrees", "2,3,4,5,6,7,8"]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert_eq!(err.lines().count(), 1);
    assert!(err.starts_with("error: "));
    assert!(out.stdout.is_empty());
}
