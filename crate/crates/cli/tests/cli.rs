use std::process::Command;

use fcblob_cli::{run, verify_tables, verify_tables_with, Suite, TableFormulas};
use num_bigint::BigUint;
use serde_json::Value;

fn call(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("fcblob").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn ok(args: &[&str]) -> String {
    let (code, out, err) = call(args);
    assert_eq!(code, 0, "{args:?}: {err}");
    out
}

#[test]
fn documented_examples() {
    assert_eq!(ok(&["count", "--n", "9", "--s", "4", "--which", "d"]), "221004\n");
    assert_eq!(ok(&["dim", "--n", "2"]), "19\n[6, 10, 3]\n");
    assert_eq!(ok(&["reduce", "--n", "2", "--level", "sb", "--word", "1,0,2,1"]), "k * [1]\n");
    assert_eq!(ok(&["count", "--n", "3", "--s", "1", "--which", "b"]), "41\n");
    assert_eq!(ok(&["reduce", "--n", "3", "--level", "2btl", "--word", "2,3,2,1,0,1,2,3"]), "kL*kR * [2,3]\n");
}

#[test]
fn malformed_input_exits_with_two() {
    for args in [
        vec!["count", "--n", "x", "--s", "1", "--which", "d"],
        vec!["count", "--n", "1", "--s", "1", "--which", "q"],
        vec!["reduce", "--n", "2", "--level", "tl", "--word", "1,7"],
        vec!["reduce", "--n", "0", "--level", "tl", "--word", "1"],
        vec!["grid", "--n", "2", "--word", "1,0,1"],
        vec!["grid", "--n", "2"],
        vec!["grid", "--n", "2", "--blocks", "0:2", "--render", "png"],
        vec!["enumerate", "--n", "2", "--s", "1", "--blobbed", "--positive"],
        vec!["verify", "--suite", "everything"],
        vec!["verify", "--max-n", "0"],
        vec!["frobnicate"],
    ] {
        let (code, out, err) = call(&args);
        assert_eq!(code, 2, "{args:?}");
        assert!(out.is_empty() && !err.is_empty(), "{args:?}");
    }
    let (code, out, _) = call(&["--help"]);
    assert_eq!(code, 0);
    assert!(out.contains("verify"));
}

#[test]
fn output_is_deterministic() {
    let runs = [
        vec!["enumerate", "--n", "3", "--s", "2", "--blobbed"],
        vec!["grid", "--n", "8", "--blocks", "7:8,4:8,3:7,1:4,0:1,0:0", "--render", "svg"],
        vec!["triangle", "--kind", "blobbed", "--rows", "12", "--cols", "12", "--format", "json"],
        vec!["count", "--n", "1..9", "--s", "0..9", "--which", "d", "--format", "csv"],
    ];
    for args in runs {
        assert_eq!(ok(&args), ok(&args));
    }
}

#[test]
fn count_records_follow_the_schema() {
    let out = ok(&["count", "--n", "1..9", "--s", "0..9", "--which", "b", "--format", "json"]);
    let records: Vec<Value> = serde_json::from_str(&out).unwrap();
    assert_eq!(records.len(), 90);
    for r in &records {
        let obj = r.as_object().unwrap();
        assert_eq!(obj.len(), 4);
        assert_eq!(obj["kind"], "b");
        let (n, s) = (obj["n"].as_u64().unwrap() as usize, obj["s"].as_u64().unwrap() as usize);
        let value: BigUint = obj["value"].as_str().unwrap().parse().unwrap();
        assert_eq!(value, BigUint::from(fcblob_cli::golden::B[n - 1][s]));
    }
    let csv = ok(&["count", "--n", "4", "--s", "2", "--which", "d", "--format", "csv"]);
    assert_eq!(csv, "kind,n,s,value\nd,4,2,148\n");
}

#[test]
fn enumerate_lists_elements() {
    let doc: Value = serde_json::from_str(&ok(&["enumerate", "--n", "2", "--s", "1", "--blobbed"])).unwrap();
    assert_eq!(doc["count"], 10);
    assert_eq!(doc["elements"].as_array().unwrap().len(), 10);
    let doc: Value = serde_json::from_str(&ok(&["enumerate", "--n", "3", "--s", "2", "--limit", "5"])).unwrap();
    assert_eq!(doc["count"], 62);
    assert_eq!(doc["filter"], "positive");
    let elements = doc["elements"].as_array().unwrap();
    assert_eq!(elements.len(), 5);
    for e in elements {
        assert!(e["blocks"].is_string() && e["word"].is_string());
    }
}

#[test]
fn grids_and_triangles() {
    let ascii = ok(&["grid", "--n", "2", "--blocks", "1:2,0:2,0:1"]);
    assert_eq!(ascii.matches('*').count(), 7);
    let from_word = ok(&["grid", "--n", "2", "--word", "1,2,0,1,2,0,1"]);
    assert_eq!(ascii, from_word);
    let svg = ok(&["grid", "--n", "2", "--blocks", "1:2,0:2,0:1", "--render", "svg"]);
    assert!(svg.starts_with("<svg") && svg.matches("<circle").count() == 7);
    let csv = ok(&["triangle", "--kind", "classical", "--rows", "3", "--cols", "3"]);
    assert_eq!(csv, "1,0,0\n0,1,0\n1,0,1\n");
    let doc: Value =
        serde_json::from_str(&ok(&["triangle", "--kind", "blobbed", "--rows", "5", "--cols", "3", "--format", "json"]))
            .unwrap();
    assert_eq!(doc["rows"][4][0], "6");
}

#[test]
fn verify_reports_every_suite() {
    let out = ok(&["verify", "--max-n", "3"]);
    for name in ["tables", "oracle", "triangle", "algebra"] {
        assert!(out.contains(&format!("{name}: ")), "{out}");
    }
    assert!(!out.contains("mismatch:"));
    assert!(ok(&["verify", "--suite", "tables", "--max-n", "3"]).starts_with("tables: 63 checks, 0 mismatches"));
}

#[test]
fn table_checker_catches_injected_faults() {
    let full = verify_tables(9);
    assert_eq!(full.suite, Suite::Tables);
    assert_eq!(full.checks, 189);
    assert!(full.passed());

    fn off_by_one(n: usize, s: usize) -> fcblob::Result<BigUint> {
        fcblob::enumeration::d_count(n, s).map(|v| v + 1u32)
    }
    let broken = verify_tables_with(TableFormulas { d: off_by_one, ..TableFormulas::default() }, 9);
    assert_eq!(broken.mismatches.len(), 90);
    assert!(broken.mismatches[0].starts_with("d(1,0): expected 0, got 1"));

    let small = verify_tables_with(TableFormulas::default(), 3);
    assert_eq!(small.checks, 63);
    assert!(small.passed());
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_fcblob");
    let good = Command::new(bin).args(["count", "--n", "5", "--s", "5", "--which", "b"]).output().unwrap();
    assert_eq!(good.status.code(), Some(0));
    assert_eq!(String::from_utf8_lossy(&good.stdout), "3\n");
    let bad = Command::new(bin).args(["dim", "--n", "nope"]).output().unwrap();
    assert_eq!(bad.status.code(), Some(2));
    assert!(bad.stdout.is_empty());
}
