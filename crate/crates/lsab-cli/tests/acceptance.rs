//! Acceptance criterion 10: round-trip parsing of every shipped fixture
//! and the shell-level exit-code contract, driven through the binary.

use std::path::PathBuf;
use std::process::Command;

fn fixtures_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures")
}

fn run(args: &[&str]) -> i32 {
    Command::new(env!("CARGO_BIN_EXE_lsab"))
        .args(args)
        .output()
        .expect("binary runs")
        .status
        .code()
        .expect("exit code")
}

#[test]
fn criterion_10_cli_round_trip_and_exit_codes() {
    let mut ok = true;

    // round-trip parsing of all fixtures
    for entry in std::fs::read_dir(fixtures_dir()).unwrap() {
        let path = entry.unwrap().path();
        if path.extension().and_then(|e| e.to_str()) != Some("lsab") {
            continue;
        }
        let name = path.file_name().unwrap().to_string_lossy().to_string();
        let lenient = name == "malformed.lsab";
        let text = std::fs::read_to_string(&path).unwrap();
        match lsab_cli::parse_document(&text, lenient) {
            Ok(doc) => {
                let emitted = lsab_cli::emit_document(&doc);
                match lsab_cli::parse_document(&emitted, false) {
                    Ok(reparsed) if reparsed == doc => {}
                    _ => {
                        eprintln!("  round-trip failed for {name}");
                        ok = false;
                    }
                }
            }
            Err(e) => {
                eprintln!("  {name} does not parse: {e}");
                ok = false;
            }
        }
    }

    // exit-code contract on the criterion-1 command and corrupted variants
    let e1 = fixtures_dir().join("e1.lsab").display().to_string();
    let bad = fixtures_dir().join("bad.lsab").display().to_string();
    let malformed = fixtures_dir().join("malformed.lsab").display().to_string();

    let cases: [(&[&str], i32); 5] = [
        (&["s-equation", "--algebra", "e1", "--r", "rEE", &e1], 0),
        (&["check", "--identity", "lsa-2cocycle", "--algebra", "e1", "--form", "trace", &e1], 0),
        (&["double", "--pair", "P", &bad], 1),
        (&["check", "--all", &malformed], 2),
        (&["s-equation", "--algebra", "ghost", "--r", "rEE", &e1], 2),
    ];
    for (args, expected) in cases {
        let got = run(args);
        if got != expected {
            eprintln!("  exit code {got}, expected {expected} for {args:?}");
            ok = false;
        }
    }

    println!(
        "ACCEPTANCE 10 [CLI round-trip and exit-code contract]: {}",
        if ok { "PASS" } else { "FAIL" }
    );
    assert!(ok, "acceptance criterion 10 failed");
}
