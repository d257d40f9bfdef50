//! Shell-level tests of the binary: exit codes, report stability, and the
//! document round-trip on every shipped fixture.

use std::path::PathBuf;
use std::process::{Command, Output};

fn fixtures_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures")
}

fn lsab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lsab"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn fixture(name: &str) -> String {
    fixtures_dir().join(name).display().to_string()
}

#[test]
fn check_identity_passes_on_a2() {
    let out = lsab(&["check", "--identity", "left-symmetric", &fixture("a2.lsab")]);
    assert_eq!(out.status.code(), Some(0), "{out:?}");
}

#[test]
fn check_all_reports_in_name_sorted_order() {
    let out = lsab(&["--json", "check", "--all", &fixture("fixtures.lsab")]);
    assert_eq!(out.status.code(), Some(0));
    let value: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let names: Vec<&str> = value["reports"]
        .as_array()
        .unwrap()
        .iter()
        .map(|r| r["object"].as_str().unwrap())
        .collect();
    let mut sorted = names.clone();
    sorted.sort();
    assert_eq!(names, sorted);
}

#[test]
fn machine_reports_are_byte_stable() {
    let args = ["--json", "check", "--all", &fixture("e1.lsab")];
    let first = lsab(&args);
    let second = lsab(&args);
    assert_eq!(first.stdout, second.stdout);
    assert_eq!(first.status.code(), Some(0));
}

#[test]
fn s_equation_on_the_field_algebra() {
    let out = lsab(&[
        "s-equation",
        "--algebra",
        "e1",
        "--r",
        "rEE",
        &fixture("e1.lsab"),
    ]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn double_rejects_a_non_bialgebra_pair_with_located_indices() {
    let out = lsab(&["--json", "double", "--pair", "P", &fixture("bad.lsab")]);
    assert_eq!(out.status.code(), Some(1));
    let value: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let report = &value["reports"][0];
    assert_eq!(report["verdict"], "fail");
    // the failing 1-cocycle indices are listed
    let violations = report["violations"].as_array().unwrap();
    assert!(!violations.is_empty());
    assert!(violations
        .iter()
        .any(|v| v["note"].as_str().unwrap_or("").contains("cocycle")));
}

#[test]
fn double_builds_and_verifies_on_a_verified_pair() {
    let out = lsab(&["double", "--pair", "P", &fixture("e1.lsab")]);
    assert_eq!(out.status.code(), Some(0), "{out:?}");
    // the emitted document parses and contains the double pair and tensor
    let doc = lsab_cli::parse_document(&String::from_utf8_lossy(&out.stdout), false).unwrap();
    assert!(doc.pair("P.double.pair").is_ok());
    assert!(doc.tensor2("P.double.r").is_ok());
}

#[test]
fn strict_mode_rejects_and_lenient_mode_normalizes() {
    let out = lsab(&["check", "--all", &fixture("malformed.lsab")]);
    assert_eq!(out.status.code(), Some(2));
    let msg = String::from_utf8_lossy(&out.stderr);
    assert!(msg.contains("lowest terms"), "{msg}");

    let out = lsab(&["--lenient", "check", "--all", &fixture("malformed.lsab")]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn usage_errors_exit_2() {
    let out = lsab(&["check", &fixture("a2.lsab")]);
    assert_eq!(out.status.code(), Some(2));
    let out = lsab(&["no-such-command"]);
    assert_eq!(out.status.code(), Some(2));
    let out = lsab(&["check", "--identity", "left-symmetric", "/nonexistent.lsab"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn construct_symplectic_recovers_s2() {
    let out = lsab(&[
        "construct",
        "symplectic",
        "--lie",
        "aff1",
        "--form",
        "omega",
        "--name",
        "s2",
        &fixture("aff1.lsab"),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let doc = lsab_cli::parse_document(&String::from_utf8_lossy(&out.stdout), false).unwrap();
    let s2 = doc.algebra("s2").unwrap();
    assert_eq!(s2.c(0, 0, 0), &lsab_core::scalar::Scalar::from_int(-1));
    assert_eq!(s2.c(1, 0, 1), &lsab_core::scalar::Scalar::from_int(-1));
}

#[test]
fn construct_dotvec_without_a_file() {
    let out = lsab(&["construct", "dotvec", "--dim", "3", "--vector", "1,0,1/2"]);
    assert_eq!(out.status.code(), Some(0), "{out:?}");
}

#[test]
fn o_operator_pipeline() {
    let file = fixture("ooperator.lsab");
    assert_eq!(lsab(&["o-operator", "--data", "od", &file]).status.code(), Some(0));
    for build in ["symmetric", "skew", "lsa"] {
        let out = lsab(&["from-o-operator", "--data", "od", "--build", build, &file]);
        assert_eq!(out.status.code(), Some(0), "build {build}: {out:?}");
        let doc = lsab_cli::parse_document(&String::from_utf8_lossy(&out.stdout), false).unwrap();
        assert!(!doc.objects.is_empty());
    }
}

#[test]
fn matched_pair_checks_the_double_frame() {
    // the (ad*, -R*) frame of the verified pair P in e1.lsab, spelled out
    // as explicit representation objects
    let a = lsab_core::fixtures::e1();
    let mut doc = lsab_cli::Document::default();
    doc.push("a", lsab_cli::ObjectValue::Algebra(a.clone().rename("a")));
    doc.push("b", lsab_cli::ObjectValue::Algebra(a.clone().rename("b")));
    for (name, rep) in [
        ("la", a.ad_rep().dual()),
        ("ra", a.right_rep().dual().neg()),
        ("lb", a.ad_rep().dual()),
        ("rb", a.right_rep().dual().neg()),
    ] {
        doc.push(
            name,
            lsab_cli::ObjectValue::Rep {
                algebra: "a".to_owned(),
                rep,
            },
        );
    }
    let dir = std::env::temp_dir().join("lsab-matched-pair-test.lsab");
    std::fs::write(&dir, lsab_cli::emit_document(&doc)).unwrap();
    let out = lsab(&[
        "matched-pair",
        "--a",
        "a",
        "--b",
        "b",
        "--la",
        "la",
        "--ra",
        "ra",
        "--lb",
        "lb",
        "--rb",
        "rb",
        "--build",
        &dir.display().to_string(),
    ]);
    assert_eq!(out.status.code(), Some(0), "{out:?}");
}

#[test]
fn manin_triple_on_the_double_of_e1() {
    // build the double document, then check the Manin axioms fail for
    // omega_p-style isotropic spans with the symmetric form of a pair that
    // is not invariant -- and pass on an abelian example
    let mut doc = lsab_cli::Document::default();
    doc.push(
        "p",
        lsab_cli::ObjectValue::Algebra(lsab_core::algebra::Algebra::zero(
            "p",
            lsab_core::algebra::AlgebraKind::Lie,
            2,
        )),
    );
    doc.push(
        "b",
        lsab_cli::ObjectValue::Form(lsab_core::bialgebra::standard_symmetric_form(1)),
    );
    let path = std::env::temp_dir().join("lsab-manin-test.lsab");
    std::fs::write(&path, lsab_cli::emit_document(&doc)).unwrap();
    let out = lsab(&[
        "manin",
        "--lie",
        "p",
        "--plus",
        "0",
        "--minus",
        "1",
        "--form",
        "b",
        &path.display().to_string(),
    ]);
    assert_eq!(out.status.code(), Some(0), "{out:?}");
    // non-isotropic span: same index twice fails complementarity
    let out = lsab(&[
        "manin",
        "--lie",
        "p",
        "--plus",
        "0",
        "--minus",
        "0",
        "--form",
        "b",
        &path.display().to_string(),
    ]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn round_trip_of_every_fixture() {
    for entry in std::fs::read_dir(fixtures_dir()).unwrap() {
        let path = entry.unwrap().path();
        if path.extension().and_then(|e| e.to_str()) != Some("lsab") {
            continue;
        }
        let name = path.file_name().unwrap().to_string_lossy().to_string();
        let lenient = name == "malformed.lsab";
        let text = std::fs::read_to_string(&path).unwrap();
        let doc = lsab_cli::parse_document(&text, lenient).unwrap();
        let emitted = lsab_cli::emit_document(&doc);
        let reparsed = lsab_cli::parse_document(&emitted, false).unwrap();
        assert_eq!(doc, reparsed, "{name}");
        assert_eq!(emitted, lsab_cli::emit_document(&reparsed), "{name}");
    }
}
