//! End-to-end checks of the command line interface: exit codes,
//! reproducible reports, and the file formats.

use std::process::Command;

fn kit() -> Command {
    Command::new(env!("CARGO_BIN_EXE_compalg-kit"))
}

#[test]
fn verify_passes_and_exits_zero() {
    let out = kit()
        .args(["verify", "compalg", "--field", "fp", "--p", "5", "--trials", "200", "--seed", "1"])
        .output()
        .unwrap();
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stdout));
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("ALL CHECKS PASSED"));
    assert!(!text.contains("FAIL "));
}

#[test]
fn same_seed_gives_byte_identical_reports() {
    let run = || {
        kit()
            .args(["verify", "classical", "--field", "fp", "--p", "5", "--trials", "50", "--seed", "7"])
            .output()
            .unwrap()
            .stdout
    };
    assert_eq!(run(), run());
}

#[test]
fn usage_errors_exit_two() {
    // p = 0 is not a prime
    let out = kit()
        .args(["verify", "all", "--field", "fp", "--p", "0"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));

    // unknown suite
    let out = kit().args(["verify", "nonsense"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));

    // --field fp without --p
    let out = kit().args(["verify", "compalg", "--field", "fp"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));

    // unreadable classify input
    let out = kit().args(["classify", "/nonexistent.json"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn classify_shipped_witness_and_identity() {
    let witness = concat!(env!("CARGO_MANIFEST_DIR"), "/../../data/x0_witness.json");
    let out = kit().args(["classify", witness]).output().unwrap();
    assert!(out.status.success());
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("rank one: true"));
    assert!(text.contains("class X0"));

    // the identity matrix is not rank one; reported, exit 0
    let dir = std::env::temp_dir().join("compalg-kit-test");
    std::fs::create_dir_all(&dir).unwrap();
    let id_path = dir.join("identity.json");
    std::fs::write(
        &id_path,
        r#"{"n": 3, "alg": "o", "field": "q", "diag": ["1", "1", "1"], "upper": []}"#,
    )
    .unwrap();
    let out = kit().args(["classify", id_path.to_str().unwrap()]).output().unwrap();
    assert!(out.status.success());
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("not rank one"));
    assert!(text.contains("first nonzero quadric residual"));
}

#[test]
fn enumerate_submodules_census() {
    let out = kit()
        .args(["enumerate-submodules", "--alg", "c", "--n", "2", "--dim", "2", "--p", "2"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let json: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(json["total"], 11);
    assert_eq!(json["free_count"], 9);
    assert_eq!(json["groups"].as_array().unwrap().len(), 3);
}

#[test]
fn export_incidence_has_45_planes() {
    let out = kit().args(["export-incidence"]).output().unwrap();
    assert!(out.status.success());
    let json: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(json["points"].as_array().unwrap().len(), 27);
    let planes = json["planes"].as_array().unwrap();
    assert_eq!(planes.len(), 45);
    for plane in planes {
        let sign = plane["sign"].as_i64().unwrap();
        assert!(sign == 1 || sign == -1);
        assert_eq!(plane["points"].as_array().unwrap().len(), 3);
    }
}

#[test]
fn automorphism_census_command() {
    let out = kit().args(["automorphisms", "--budget", "300"]).output().unwrap();
    assert!(out.status.success());
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("automorphisms: 51840"), "{text}");

    // an exhausted budget is a failed check, not a usage error: exit 1
    let out = kit().args(["automorphisms", "--budget", "0"]).output().unwrap();
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stdout).contains("partial"));
}

#[test]
fn bare_p_implies_prime_field() {
    let out = kit()
        .args(["verify", "cubic27", "--p", "7", "--trials", "50", "--seed", "3"])
        .output()
        .unwrap();
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    assert!(String::from_utf8_lossy(&out.stdout).contains("ALL CHECKS PASSED"));
}
