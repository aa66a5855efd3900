//! End-to-end checks of the command-line surface: exit codes, the file
//! format on stdin/stdout piping, and the pseudo-path loader.

use std::process::Command;

fn matkit(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_matkit"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8_lossy(&out.stdout).into_owned(),
        String::from_utf8_lossy(&out.stderr).into_owned(),
    )
}

#[test]
fn check_exit_codes() {
    let (code, stdout, _) = matkit(&["check", "catalog:P6", "--class", "Z"]);
    assert_eq!(code, 1, "negative verdicts exit 1");
    assert!(stdout.starts_with("NO"));

    let (code, stdout, _) = matkit(&["check", "catalog:W3", "--class", "R"]);
    assert_eq!(code, 0);
    assert!(stdout.starts_with("YES"));

    let (code, _, stderr) = matkit(&["check", "catalog:doesnotexist", "--class", "Z"]);
    assert_eq!(code, 2, "errors exit 2");
    assert!(stderr.contains("error"));
}

#[test]
fn classify_w3_reports_the_relaxation_case() {
    let (code, stdout, _) = matkit(&["classify", "catalog:W3"]);
    assert_eq!(code, 0);
    assert!(stdout.contains("relaxation-of-binary"));
    assert!(stdout.contains("witness verified: true"));
}

#[test]
fn emitted_files_parse_back() {
    let dir = std::env::temp_dir().join("matkit-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("mk4.matroid");
    let (code, stdout, _) = matkit(&["catalog", "MK4"]);
    assert_eq!(code, 0);
    std::fs::write(&path, &stdout).unwrap();
    let (code, relaxed, _) = matkit(&["relax", path.to_str().unwrap(), "--set", "abd"]);
    assert_eq!(code, 0);
    let w3 = dir.join("w3.matroid");
    std::fs::write(&w3, &relaxed).unwrap();
    let (code, back, _) = matkit(&["tighten", w3.to_str().unwrap(), "--basis", "abd"]);
    assert_eq!(code, 0);
    assert!(back.contains("bases"));
    // tightening inverts the relaxation: same basis words as the input file
    let original_bases = stdout.lines().find(|l| l.starts_with("bases")).unwrap();
    let recovered_bases = back.lines().find(|l| l.starts_with("bases")).unwrap();
    assert_eq!(original_bases, recovered_bases);
}

#[test]
fn lazy_catalog_round_trip() {
    let (code, stdout, _) = matkit(&["catalog", "pgspike_3"]);
    assert_eq!(code, 0);
    assert!(stdout.contains("gf2 12 24"));
    assert_eq!(stdout.matches("relax ").count(), 2);
    let dir = std::env::temp_dir().join("matkit-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("pg.matroid");
    std::fs::write(&path, &stdout).unwrap();
    let (code, verdict, _) = matkit(&["check", path.to_str().unwrap(), "--class", "D"]);
    assert_eq!(code, 0);
    assert!(verdict.starts_with("YES"));
}

#[test]
fn minor_subcommand_prints_witness_or_none() {
    let (code, stdout, _) = matkit(&["minor", "catalog:W3", "--target", "U_2_4", "--using", "a"]);
    assert_eq!(code, 0);
    assert!(stdout.contains("contract"));
    assert!(stdout.contains("map a ->"));
    let (code, stdout, _) = matkit(&["minor", "catalog:F7", "--target", "U_2_4"]);
    assert_eq!(code, 1);
    assert!(stdout.trim().ends_with("none"));
}

#[test]
fn verify_axioms_suite_passes() {
    let (code, stdout, _) = matkit(&["verify", "--suite", "axioms"]);
    assert_eq!(code, 0);
    assert!(stdout.lines().all(|l| !l.starts_with("FAIL")));
    assert!(stdout.lines().any(|l| l.starts_with("PASS")));
}

#[test]
fn treedec_renders_an_indented_tree() {
    let (code, stdout, _) = matkit(&["treedec", "catalog:R6"]);
    assert_eq!(code, 0);
    assert_eq!(stdout.matches("U_2_4").count(), 2);
}

#[test]
fn verify_suites_are_deterministic() {
    let args = [
        "verify",
        "--suite",
        "cross-check",
        "--seed",
        "7",
        "--max-elements",
        "8",
    ];
    let (code1, out1, _) = matkit(&args);
    let (code2, out2, _) = matkit(&args);
    assert_eq!(code1, code2);
    assert_eq!(out1, out2, "same seed and budget must reproduce the report");
}
