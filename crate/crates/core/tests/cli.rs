//! Exit-code matrix and determinism of the `epiverify` binary.

use std::process::{Command, Output};

fn epiverify(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_epiverify"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn code(args: &[&str]) -> i32 {
    epiverify(args).status.code().expect("exit code")
}

#[test]
fn passing_subcommands_exit_zero() {
    for args in [
        &["verify-table1"][..],
        &["verify-lemma2"],
        &["verify-lemma1", "--trials", "5"],
        &["probe", "--trials", "3"],
        &["verify-repdim"],
        &[
            "weyl-dim",
            "--type",
            "D",
            "--rank",
            "7",
            "--weight",
            "0,0,0,0,0,0,1",
        ],
        &["invariants", "--degree", "2", "--oracle", "--seed", "3"],
    ] {
        assert_eq!(code(args), 0, "{args:?}");
    }
}

#[test]
fn bad_input_exits_two() {
    for args in [
        &[][..],
        &["no-such-command"],
        &["verify-table1", "--no-such-flag"],
        &["probe", "--trials", "0"],
        &["verify-lemma1", "--trials", "0"],
        &["probe", "--trials", "many"],
        &["invariants", "--degree", "6"],
        &["invariants", "--degree", "2", "--oracle", "--trials", "3"],
        &[
            "weyl-dim", "--type", "H", "--rank", "3", "--weight", "1,0,0",
        ],
        &["weyl-dim", "--type", "A", "--rank", "3", "--weight", "1,0"],
    ] {
        let out = epiverify(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(!out.stderr.is_empty(), "{args:?}");
    }
}

#[test]
fn probe_reads_a_matrix_file() {
    let dir = std::env::temp_dir().join(format!("epiverify-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let identity = epiverify::linalg::text::format_matrix(&epiverify::RationalMatrix::identity(19));
    let good = dir.join("identity.txt");
    std::fs::write(&good, identity).unwrap();
    let out = epiverify(&["probe", "--g0", good.to_str().unwrap(), "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["status"], "PASS");

    let small = dir.join("small.txt");
    std::fs::write(&small, "2 2\n1 0\n0 1\n").unwrap();
    assert_eq!(code(&["probe", "--g0", small.to_str().unwrap()]), 2);
    let singular = dir.join("singular.txt");
    std::fs::write(
        &singular,
        epiverify::linalg::text::format_matrix(&epiverify::RationalMatrix::zeros(19, 19)),
    )
    .unwrap();
    assert_eq!(code(&["probe", "--g0", singular.to_str().unwrap()]), 2);
    let garbage = dir.join("garbage.txt");
    std::fs::write(&garbage, "19 19\n1/0\n").unwrap();
    assert_eq!(code(&["probe", "--g0", garbage.to_str().unwrap()]), 2);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn json_is_deterministic_apart_from_elapsed() {
    let run = || {
        let out = epiverify(&["verify-lemma1", "--trials", "10", "--seed", "11", "--json"]);
        assert_eq!(out.status.code(), Some(0));
        let mut v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
        v.as_object_mut().unwrap().remove("elapsed");
        v
    };
    assert_eq!(run(), run());
    let text = String::from_utf8(epiverify(&["verify-table1", "--json"]).stdout).unwrap();
    assert!(text.trim_start().starts_with("{\n  \"schema\": 1"));
}
