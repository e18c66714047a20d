use std::process::Command;

use orderpoly::exactpoly::Polynomial;
use serde_json::Value;

struct Run {
    code: i32,
    stdout: String,
    stderr: String,
}

fn orderpoly(args: &[&str]) -> Run {
    let out = Command::new(env!("CARGO_BIN_EXE_orderpoly")).args(args).output().expect("binary runs");
    Run {
        code: out.status.code().expect("exited"),
        stdout: String::from_utf8(out.stdout).unwrap(),
        stderr: String::from_utf8(out.stderr).unwrap(),
    }
}

#[test]
fn figure_shape_as_json() {
    let r = orderpoly(&["omega", "--shape", "6533/21", "--format", "json"]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    let p = Polynomial::from_json(r.stdout.trim()).unwrap();
    assert_eq!(p.degree(), Some(14));
    assert_eq!(p.eval_int(1), orderpoly::exactpoly::rat(1, 1));
    assert!(r.stderr.is_empty());
}

#[test]
fn normalized_zigzag() {
    let r = orderpoly(&["omega", "--poset", "zigzag:6", "--normalize"]);
    assert_eq!(r.code, 0);
    assert_eq!(r.stdout, "61t^6 + 183t^5 + 235t^4 + 165t^3 + 64t^2 + 12t\n");
}

#[test]
fn every_subcommand_accepts_each_format() {
    let cases: &[&[&str]] = &[
        &["omega", "--shape", "32/1"],
        &["kreweras", "--shape", "32/1"],
        &["kreweras", "--shape", "32/1", "--at", "3"],
        &["cylindric", "--ribbon", "2"],
        &["cylindric", "--shape", "21/0/2"],
        &["shifted", "--shape", "31"],
        &["width2", "--shape", "21/1", "--m", "2", "--n", "3"],
        &["schubert", "--perm", "4231", "--words"],
        &["schubert", "--shape", "311", "--expand", "4"],
        &["hook", "--a", "2", "--b", "2"],
        &["hstar", "--poset", "zigzag:4"],
        &["shard", "--arc", "1,4;2;3"],
        &["stretched", "--shape", "21", "--t", "2"],
        &["scan", "--family", "ribbon", "--max-size", "4"],
        &["cross-validate", "--max-size", "3"],
    ];
    for args in cases {
        for format in ["plain", "json", "latex"] {
            let mut full = args.to_vec();
            full.extend(["--format", format]);
            let r = orderpoly(&full);
            assert_eq!(r.code, 0, "{full:?}: {}", r.stderr);
            assert!(!r.stdout.is_empty(), "{full:?}");
            if format == "json" {
                serde_json::from_str::<Value>(&r.stdout).unwrap_or_else(|e| panic!("{full:?}: {e}"));
            }
        }
    }
}

#[test]
fn polynomial_json_round_trips() {
    for args in [
        &["omega", "--shape", "442/2/2"][..],
        &["cylindric", "--ribbon", "22/1"],
        &["shifted", "--shape", "42/1"],
        &["hook", "--a", "3", "--b", "1"],
    ] {
        let mut full = args.to_vec();
        full.extend(["--format", "json"]);
        let r = orderpoly(&full);
        assert_eq!(r.code, 0, "{args:?}: {}", r.stderr);
        let p = Polynomial::from_json(r.stdout.trim()).unwrap();
        assert_eq!(p.to_json(), r.stdout.trim());
    }
}

#[test]
fn forced_engines_agree_or_are_rejected() {
    let base = orderpoly(&["omega", "--shape", "432/21"]).stdout;
    for engine in ["kreweras", "bruteforce", "recursion"] {
        let r = orderpoly(&["omega", "--shape", "432/21", "--engine", engine]);
        assert_eq!(r.code, 0);
        assert_eq!(r.stdout, base, "{engine}");
    }
    let straight = orderpoly(&["omega", "--shape", "431"]).stdout;
    assert_eq!(orderpoly(&["omega", "--shape", "431", "--engine", "macdonald"]).stdout, straight);
    for (args, engine) in [
        (&["omega", "--shape", "432/21"][..], "macdonald"),
        (&["omega", "--shape", "432/21"], "gk"),
        (&["omega", "--shape", "442/2/2"], "kreweras"),
        (&["shifted", "--shape", "31"], "gk"),
    ] {
        let mut full = args.to_vec();
        full.extend(["--engine", engine]);
        let r = orderpoly(&full);
        assert_eq!(r.code, 2, "{full:?}");
        assert!(r.stdout.is_empty());
        assert!(r.stderr.starts_with("engine mismatch:"), "{}", r.stderr);
    }
}

#[test]
fn exit_codes_and_prefixes() {
    let cases: &[(&[&str], &str)] = &[
        (&["frobnicate"], "unknown subcommand:"),
        (&["omega", "--shape", "23"], "malformed shape:"),
        (&["omega", "--poset", "lattice:3"], "unknown poset:"),
        (&["shard", "--arc", "3,1;;"], "malformed arc:"),
        (&["schubert", "--perm", "1134"], "malformed permutation:"),
        (&["scan", "--family", "trees", "--max-size", "3"], "unknown family:"),
        (&["omega"], "usage error:"),
    ];
    for (args, prefix) in cases {
        let r = orderpoly(args);
        assert_eq!(r.code, 2, "{args:?}");
        assert!(r.stdout.is_empty(), "{args:?}");
        assert!(r.stderr.starts_with(prefix), "{args:?}: {}", r.stderr);
    }
}

#[test]
fn identical_invocations_are_bit_identical() {
    for args in [
        &["omega", "--shape", "6533/21", "--format", "latex"][..],
        &["scan", "--family", "skew", "--max-size", "5", "--format", "json"],
        &["hstar", "--shape", "332", "--format", "json"],
    ] {
        let a = orderpoly(args);
        let b = orderpoly(args);
        assert_eq!(a.code, 0);
        assert_eq!(a.stdout, b.stdout, "{args:?}");
    }
}

#[test]
fn shifted_scan_with_store_resumes() {
    let dir = tempfile::tempdir().unwrap();
    let store = dir.path().join("out.jsonl");
    let store = store.to_str().unwrap();
    let first = orderpoly(&["scan", "--family", "shifted", "--max-size", "7", "--store", store, "--format", "json"]);
    assert_eq!(first.code, 0, "{}", first.stderr);
    let summary: Value = serde_json::from_str(&first.stdout).unwrap();
    assert_eq!(summary["counterexamples"], Value::Array(vec![]));
    assert_eq!(summary["skipped"], 0);
    let members = summary["members"].as_u64().unwrap();
    assert!(members > 0);
    assert_eq!(summary["new_records"].as_u64(), Some(members));
    assert!(summary.get("elapsed_ms").is_none());

    let again = orderpoly(&["scan", "--store", store, "--resume", "--format", "json"]);
    assert_eq!(again.code, 0, "{}", again.stderr);
    let summary: Value = serde_json::from_str(&again.stdout).unwrap();
    assert_eq!(summary["members"].as_u64(), Some(members));
    assert_eq!(summary["new_records"], 0);

    let clash = orderpoly(&["scan", "--family", "ribbon", "--max-size", "7", "--store", store]);
    assert_eq!(clash.code, 2);
    assert!(clash.stderr.starts_with("store error:"), "{}", clash.stderr);
}

#[test]
fn timing_is_opt_in() {
    let r = orderpoly(&["scan", "--family", "ribbon", "--max-size", "4", "--timing", "--format", "json"]);
    assert_eq!(r.code, 0);
    let v: Value = serde_json::from_str(&r.stdout).unwrap();
    assert!(v.get("elapsed_ms").is_some());
}
