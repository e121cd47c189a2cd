use std::process::Command;

use veronese::cli::{run, EXIT_CONFIG, EXIT_MISMATCH, EXIT_OK, EXIT_RESOURCE};
use veronese::schema::{ExtDoc, TableDoc};

fn call(args: &[&str]) -> (i32, String, String) {
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let mut full = vec!["veronese"];
    full.extend_from_slice(args);
    let code = run(full, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn ok(args: &[&str]) -> String {
    let (code, out, err) = call(args);
    assert_eq!(code, EXIT_OK, "{args:?}: {err}");
    out
}

#[test]
fn bott_examples() {
    assert_eq!(ok(&["bott", "--n", "3", "--mu", "2,0", "--r", "-3"]), "{\"l\":2,\"lambda\":[1,-1,-1]}\n");
    assert_eq!(ok(&["bott", "--n", "3", "--mu", "2,0", "--r", "m3"]), "{\"l\":2,\"lambda\":[1,-1,-1]}\n");
    assert_eq!(ok(&["bott", "--n", "2", "--mu", "0", "--r", "-1"]), "{\"vanishing\":true}\n");
}

#[test]
fn scalar_commands() {
    assert_eq!(ok(&["nu", "--n", "2", "--d", "3", "--mu", "6"]), "2\n");
    assert_eq!(ok(&["m", "--n", "2", "--d", "2", "--lambda", "3,3"]), "-1\n");
    let (code, _, err) = call(&["nu", "--n", "3", "--d", "3", "--mu", "6"]);
    assert_eq!(code, EXIT_CONFIG);
    assert!(err.starts_with("error:"));
}

#[test]
fn d0_character_for_d2() {
    let out = ok(&["character", "--target", "D0", "--n", "2", "--d", "2", "--l1max", "4", "--lnmin", "0"]);
    let doc: TableDoc = serde_json::from_str(&out).unwrap();
    assert_eq!(doc.j, Some(0));
    let lambdas: Vec<Vec<i64>> = doc.entries.iter().map(|e| e.lambda.clone()).collect();
    assert_eq!(lambdas, vec![vec![4, 4], vec![4, 2], vec![4, 0], vec![2, 2], vec![2, 0]]);
    assert!(doc.entries.iter().all(|e| e.mult == 1));
    let spectral = ok(&[
        "character", "--target", "D0", "--n", "2", "--d", "2", "--l1max", "4", "--lnmin", "0", "--route", "spectral",
    ]);
    assert_eq!(spectral, out);
}

#[test]
fn residue_table() {
    let out = ok(&[
        "table", "--kind", "a-j", "--j", "1", "--n", "2", "--d", "2", "--l1max", "3", "--lnmin", "0", "--format", "csv",
    ]);
    assert_eq!(out, "lambda_1,lambda_2,mult\n2,1,1\n");
    assert_eq!(call(&["table", "--kind", "a-j", "--n", "2", "--d", "2", "--l1max", "3", "--lnmin", "0"]).0, EXIT_CONFIG);
}

#[test]
fn empty_window_is_not_an_error() {
    let out = ok(&["character", "--target", "E", "--n", "3", "--d", "2", "--l1max", "2", "--lnmin", "5"]);
    let doc: TableDoc = serde_json::from_str(&out).unwrap();
    assert!(doc.entries.is_empty());
    assert_eq!((doc.window.lambda1_max, doc.window.lambdan_min), (2, 5));
}

#[test]
fn ext_document() {
    let out = ok(&["ext", "--n", "2", "--d", "2", "--mu", "2,2", "--l1max", "6", "--lnmin", "-2"]);
    let doc: ExtDoc = serde_json::from_str(&out).unwrap();
    assert_eq!(doc.n_d, 1);
    assert!(doc.entries.iter().all(|e| e.j == 0 && e.index == 1));
    let closed = ok(&[
        "ext", "--n", "2", "--d", "2", "--mu", "2,2", "--l1max", "6", "--lnmin", "-2", "--route", "closed",
    ]);
    assert_eq!(closed, out);
}

#[test]
fn exit_codes() {
    assert_eq!(call(&["--bogus"]).0, EXIT_CONFIG);
    assert_eq!(call(&["character", "--target", "D2", "--n", "2", "--d", "2", "--l1max", "4", "--lnmin", "0"]).0, EXIT_CONFIG);
    assert_eq!(call(&["character", "--target", "D0", "--n", "11", "--d", "2", "--l1max", "4", "--lnmin", "0"]).0, EXIT_CONFIG);
    assert_eq!(call(&["m", "--n", "2", "--d", "7", "--lambda", "3,3"]).0, EXIT_CONFIG);
    assert_eq!(call(&["--allow-large", "m", "--n", "2", "--d", "7", "--lambda", "8,6"]).0, EXIT_OK);
    let capped = call(&[
        "--cache-cap", "100", "character", "--target", "D0", "--n", "2", "--d", "2", "--l1max", "400", "--lnmin", "-400",
    ]);
    assert_eq!(capped.0, EXIT_RESOURCE, "{}", capped.2);
    assert_eq!(call(&["--help"]).0, EXIT_OK);
    assert_ne!(EXIT_MISMATCH, EXIT_OK);
}

#[test]
fn verify_suites_pass() {
    let out = ok(&["verify", "hooks", "--d", "3", "--sizemax", "8"]);
    assert_eq!(out.lines().count(), 3);
    assert!(out.lines().all(|l| l.starts_with("pass  hooks")));
    ok(&["verify", "d2-table", "--n", "3", "--l1max", "6", "--lnmin", "m4"]);
    ok(&["verify", "bott-roundtrip", "--n", "2", "--range", "3"]);
    assert_eq!(call(&["verify", "d2-table", "--d", "3"]).0, EXIT_CONFIG);
}

#[test]
fn output_is_independent_of_thread_count() {
    for args in [
        ["table", "--kind", "m", "--n", "3", "--d", "2", "--l1max", "7", "--lnmin", "-3"],
        ["character", "--target", "D1", "--n", "3", "--d", "3", "--l1max", "9", "--lnmin", "-3"],
    ] {
        let outs: Vec<String> = ["1", "2", "8"]
            .iter()
            .map(|t| {
                let mut a = vec!["--threads", t];
                a.extend_from_slice(&args);
                ok(&a)
            })
            .collect();
        assert!(outs.windows(2).all(|w| w[0] == w[1]));
    }
}

#[test]
fn binary_writes_files() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("d1.csv");
    let status = Command::new(env!("CARGO_BIN_EXE_veronese"))
        .args(["character", "--target", "D1", "--n", "2", "--d", "2", "--l1max", "4", "--lnmin", "0", "--format", "csv"])
        .arg("--output")
        .arg(&path)
        .status()
        .unwrap();
    assert!(status.success());
    assert_eq!(std::fs::read_to_string(&path).unwrap(), "lambda_1,lambda_2,mult\n4,1,1\n2,1,1\n");

    let out = Command::new(env!("CARGO_BIN_EXE_veronese"))
        .args(["m", "--n", "2", "--d", "2", "--lambda", "3,4"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(EXIT_CONFIG));
    assert!(out.stdout.is_empty());
    assert!(!out.stderr.is_empty());
}
