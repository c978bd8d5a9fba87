use proptest::prelude::*;
use serde_json::Value;
use std::process::{Command, Output};

const E3: &str = r#"{"catalog":{"name":"extraspecial","p":3,"exp":3}}"#;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fgct")).args(args).output().expect("binary runs")
}

fn report(args: &[&str]) -> Value {
    let out = run(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["schema"], "fgct/1");
    assert_eq!(v["ok"], true);
    v
}

fn degrees(v: &Value) -> Vec<i64> {
    v["result"]["degrees"].as_array().unwrap().iter().map(|d| d.as_i64().unwrap()).collect()
}

#[test]
fn quaternion_table() {
    let v = report(&["table", "--group", r#"{"catalog":{"name":"quaternion8"}}"#]);
    assert_eq!(degrees(&v), vec![1, 1, 1, 1, 2]);
    assert_eq!(v["verification"]["orthogonality"], true);
    assert_eq!(v["command"]["name"], "table");
}

#[test]
fn group_spec_formats() {
    let c6 = report(&["table", "--group", r#"{"catalog":{"name":"cyclic","n":6}}"#]);
    assert_eq!(degrees(&c6), vec![1; 6]);
    let s3 = report(&["table", "--group", r#"{"permutations":["(0 1)","(0 1 2)"],"degree":3}"#]);
    assert_eq!(s3["result"]["order"], 6);
    assert_eq!(degrees(&s3), vec![1, 1, 2]);
    let s3 = report(&["table", "--group", r#"{"permutations":[[1,0,2],[1,2,0]]}"#]);
    assert_eq!(s3["result"]["order"], 6);
    let c2 = report(&["table", "--group", r#"{"cayley":[[0,1],[1,0]]}"#]);
    assert_eq!(degrees(&c2), vec![1, 1]);
}

#[test]
fn tsv_table() {
    let out = run(&["table", "--group", "sym3", "--format", "tsv"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let rows: Vec<&str> = text.lines().collect();
    assert_eq!(rows.len(), 6);
    let sizes: Vec<&str> = rows[1].split('\t').collect();
    let last: Vec<&str> = rows[5].split('\t').collect();
    assert_eq!((sizes[0], last[0], last[1]), ("size", "X2", "2"));
    // the degree-2 character is 0 on transpositions and -1 on 3-cycles
    for (s, x) in sizes[2..].iter().zip(&last[2..]) {
        assert_eq!(*x, if *s == "3" { "0" } else { "-1" });
    }
}

#[test]
fn isaacs_extraspecial_by_inversion() {
    let v = report(&["isaacs", "--n", E3, "--a", "cyclic2", "--action", "inversion-mod-center"]);
    let pairs = v["result"]["pairs"].as_array().unwrap();
    assert_eq!(pairs.len(), 3);
    let mut seen = Vec::new();
    for p in pairs {
        let (d, e) = (p["chi"]["degree"].as_i64().unwrap(), p["image"]["degree"].as_i64().unwrap());
        assert_eq!(p["chi"]["field"], p["image"]["field"]);
        match d {
            1 => assert_eq!(p["image"]["index"], 0),
            3 => assert_eq!(e, 1),
            _ => panic!("unexpected degree {d}"),
        }
        seen.push(p["image"]["index"].as_i64().unwrap());
    }
    seen.sort();
    assert_eq!(seen, vec![0, 1, 2]);
    for check in v["verification"].as_object().unwrap().values() {
        assert_eq!(*check, true);
    }
}

#[test]
fn five_and_above() {
    let v = report(&[
        "five", "--n", E3, "--a", "cyclic2", "--action", "inversion-mod-center", "--k", "N", "--l", "center(N)", "--phi",
        "faithful,first", "--control", "G",
    ]);
    let psi = &v["result"]["psi"];
    assert_eq!(psi["degree"], 3);
    assert_eq!(psi["rule"], "canonical");
    assert_eq!(v["result"]["magic_solutions"].as_array().unwrap().len(), 2);

    let v = report(&["above", "--n", E3, "--a", "cyclic2", "--action", "inversion-mod-center", "--chi", "degree=3,first"]);
    let c = &v["result"]["correspondences"][0];
    assert_eq!(c["ratio"], 3);
    assert_eq!(c["over_chi"], 2);
    assert_eq!(c["pairs"].as_array().unwrap().len(), 4);
}

#[test]
fn form_and_good() {
    let v = report(&["form", "--group", "quaternion8", "--l", "center", "--phi", "faithful"]);
    let grid = v["result"]["grid"].as_array().unwrap();
    assert_eq!(grid.len(), 4);
    let v = report(&["good", "--group", "quaternion8", "--l", "center", "--phi", "faithful"]);
    assert_eq!(v["result"]["good_classes"], 1);
    assert_eq!(v["result"]["irr_over_phi"], 1);
    let v = report(&["good", "--group", "cyclic6", "--l", "sylow(3)", "--phi", "faithful,first"]);
    assert_eq!(v["result"]["good_classes"], 2);
    let v = report(&["ramified", "--group", "quaternion8"]);
    assert_eq!(v["result"]["fully_ramified"], 1);
}

#[test]
fn exit_codes() {
    // usage
    for args in [
        &["table", "--group", "{not json"][..],
        &["table", "--group", "nosuchgroup"],
        &["table"],
        &["frobnicate"],
        &["good", "--group", "cyclic6", "--l", "sylow(3)", "--phi", "faithful"],
        &["isaacs", "--group", "cyclic3"],
        &["ramified", "--group", "cyclic4", "--format", "tsv"],
    ] {
        let out = run(args);
        assert_eq!(out.status.code(), Some(1), "{args:?}");
        assert!(!out.stderr.is_empty());
    }
    // hypothesis
    let out = run(&["isaacs", "--n", "quaternion8", "--a", "cyclic3", "--action", "auto-order:3"]);
    assert_eq!(out.status.code(), Some(2));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["error"]["class"], "hypothesis");
    let out = run(&["isaacs", "--n", "cyclic3", "--a", "cyclic6"]);
    assert_eq!(out.status.code(), Some(2));
    let out = run(&["form", "--group", "sym3", "--l", "sylow(3)", "--phi", "faithful,first"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn order_cap() {
    assert_eq!(run(&["table", "--group", "sym4", "--order-cap", "10"]).status.code(), Some(1));
    let out = Command::new(env!("CARGO_BIN_EXE_fgct"))
        .args(["table", "--group", "sym4"])
        .env("FGCT_ORDER_CAP", "10")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    assert!(run(&["table", "--group", "sym4"]).status.success());
}

#[test]
fn repeated_runs_agree() {
    let strip = |o: Output| {
        let mut v: Value = serde_json::from_slice(&o.stdout).unwrap();
        v.as_object_mut().unwrap().remove("timing_ms");
        v
    };
    let args = ["isaacs", "--n", E3, "--a", "cyclic4", "--action", "symplectic:0,-1,1,0", "--verbose"];
    assert_eq!(strip(run(&args)), strip(run(&args)));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn cyclic_tables(n in 1usize..=12) {
        let v = report(&["table", "--group", &format!("cyclic{n}"), "--compact"]);
        prop_assert_eq!(degrees(&v), vec![1; n]);
    }

    #[test]
    fn permutation_groups_satisfy_degree_sum(
        gens in prop::collection::vec(Just((0..5u32).collect::<Vec<_>>()).prop_shuffle(), 1..3)
    ) {
        let spec = serde_json::json!({"permutations": gens}).to_string();
        let v = report(&["table", "--group", &spec, "--compact"]);
        let sum: i64 = degrees(&v).iter().map(|d| d * d).sum();
        prop_assert_eq!(sum, v["result"]["order"].as_i64().unwrap());
        prop_assert_eq!(&v["verification"]["degree_sum"], &Value::Bool(true));
    }
}
