//! End-to-end runs of the `modpoly` binary.

use std::fs;
use std::process::{Command, Output};

use clap::Parser;
use modpoly::args::{AtlasJob, Cli, Command as Sub};
use modpoly::atlas;
use modpoly_core::cgroup::{reflection_pipeline, PipelineOptions};
use modpoly_core::{ortho, parse_symbol};
use serde_json::Value;

fn modpoly(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_modpoly")).args(args).output().expect("spawn modpoly")
}

fn lines(out: &Output) -> Vec<Value> {
    String::from_utf8_lossy(&out.stdout).lines().map(|l| serde_json::from_str(l).unwrap()).collect()
}

#[test]
fn reduce_examples() {
    let out = modpoly(&["reduce", "--group", "[3,5,3]", "--mod", "2"]);
    assert!(out.status.success());
    let v = &lines(&out)[0];
    assert_eq!(v["order"], 8160);
    assert_eq!(v["group_label"]["name"], "O(4,4,-1)");
    assert_eq!(v["budget"], 5_000_000);
    assert_eq!(v["modulus"], "2");

    let v = &lines(&modpoly(&["reduce", "--group", "[6,3,6]", "--mod", "5"]))[0];
    assert_eq!(v["is_cgroup"], false);

    let v = &lines(&modpoly(&["reduce", "--group", "[3,oo]", "--mod", "7"]))[0];
    assert_eq!(v["order"], 336);
    assert_eq!(v["schlafli"], serde_json::json!([3, 7]));
}

#[test]
fn reports_are_library_output() {
    let out = modpoly(&["reduce", "--group", "[3,3,oo]", "--mod", "3", "--mod", "5"]);
    let text = String::from_utf8(out.stdout).unwrap();
    let d = parse_symbol("[3,3,oo]").unwrap();
    let want: String = ["3", "5"]
        .iter()
        .map(|m| serde_json::to_string(&reflection_pipeline(&d, m, PipelineOptions::default()).unwrap()).unwrap() + "\n")
        .collect();
    assert_eq!(text, want);
}

#[test]
fn exit_codes() {
    assert_eq!(modpoly(&["reduce", "--group", "[3,x]", "--mod", "7"]).status.code(), Some(2));
    assert_eq!(modpoly(&["reduce", "--group", "[3,5,3]", "--mod", "seven"]).status.code(), Some(2));
    assert_eq!(modpoly(&["mobius", "--ideal", "principal:2,4"]).status.code(), Some(2));
    assert_eq!(modpoly(&["reduce", "--group", "[3,5,3]", "--mod", "3", "--budget", "500"]).status.code(), Some(3));
    assert_eq!(modpoly(&["verify", "--group", "[6,3,6]", "--mod", "5"]).status.code(), Some(4));
    assert_eq!(modpoly(&["verify", "--group", "[6,3,6]", "--mod", "3"]).status.code(), Some(0));
    assert_eq!(modpoly(&["hemi", "--group", "[3,5,3]", "--mod", "3"]).status.code(), Some(1));
}

#[test]
fn deterministic_output_and_fixtures() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.jsonl");
    let b = dir.path().join("b.jsonl");
    for p in [&a, &b] {
        let out = modpoly(&["reduce", "--group", "[3,5,3]", "--mod", "2", "--mod", "sqrt5", "--out", p.to_str().unwrap()]);
        assert!(out.status.success());
        assert!(out.stdout.is_empty());
    }
    assert_eq!(fs::read(&a).unwrap(), fs::read(&b).unwrap());

    let ok = modpoly(&["verify", "--group", "[3,5,3]", "--mod", "2", "--mod", "sqrt5", "--fixture", a.to_str().unwrap()]);
    assert_eq!(ok.status.code(), Some(0));
    let tampered = fs::read_to_string(&a).unwrap().replace("8160", "8161");
    fs::write(&b, tampered).unwrap();
    let bad = modpoly(&["verify", "--group", "[3,5,3]", "--mod", "2", "--mod", "sqrt5", "--fixture", b.to_str().unwrap()]);
    assert_eq!(bad.status.code(), Some(4));
}

#[test]
fn element_dump_matches_order() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path().join("elems.hex");
    let out = modpoly(&["reduce", "--group", "[3,oo]", "--mod", "5", "--dump-elements", p.to_str().unwrap()]);
    assert!(out.status.success());
    let dump = fs::read_to_string(&p).unwrap();
    let rows: Vec<&str> = dump.lines().collect();
    assert_eq!(rows.len(), 120);
    assert!(rows.windows(2).all(|w| w[0] < w[1]));
}

#[test]
fn mobius_reports() {
    let out = modpoly(&["mobius", "--ideal", "full:3", "--ideal", "principal:1,4"]);
    assert!(out.status.success());
    let v = lines(&out);
    assert_eq!((v[0]["order"].as_u64(), v[0]["kind"].as_str()), (Some(360), Some("directly_regular")));
    assert_eq!(v[0]["facet"], serde_json::json!([3, 0]));
    assert_eq!((v[1]["order"].as_u64(), v[1]["kind"].as_str()), (Some(2448), Some("chiral")));
    let table = modpoly(&["mobius", "--ideal", "full:3", "--format", "table"]);
    assert!(String::from_utf8_lossy(&table.stdout).contains("directly_regular"));
}

fn atlas_job(line: &str) -> AtlasJob {
    match Cli::try_parse_from(line.split(' ')).unwrap().command {
        Sub::Atlas(j) => j,
        _ => unreachable!(),
    }
}

#[test]
fn atlas_inert_epsilons_follow_the_table() {
    let rows = atlas::run_atlas(&atlas_job("modpoly atlas --group [3,5,3] --primes 3..55 --splitting inert --no-closure")).unwrap();
    assert!(!rows.is_empty());
    for r in &rows {
        assert_eq!(r.prime, "inert");
        assert!(r.error.is_none(), "{r:?}");
        assert_eq!(r.eps_legendre, r.eps_table, "{}", r.modulus);
        assert_eq!(r.eps_form, r.eps_table, "{}", r.modulus);
    }
}

#[test]
fn atlas_split_pairs_multiply_to_the_symbol_mod_11() {
    let rows = atlas::run_atlas(&atlas_job("modpoly atlas --group [3,5,3] --primes 29..30 --no-closure")).unwrap();
    assert_eq!(rows.len(), 2);
    let want = ortho::epsilon_conjugate_product(29).unwrap();
    for r in &rows {
        assert_eq!(r.eps_pair_product, Some(want));
        assert_eq!(r.eps_legendre, r.eps_form);
    }
    assert_eq!(rows[0].eps_legendre.unwrap() * rows[1].eps_legendre.unwrap(), want);
}

#[test]
fn atlas_edge_cases_and_determinism() {
    let empty = modpoly(&["atlas", "--group", "[3,5,3]", "--primes", "24..29"]);
    assert!(empty.status.success());
    assert!(empty.stdout.is_empty());
    assert_eq!(modpoly(&["atlas", "--group", "[3,5,3]", "--primes", "abc"]).status.code(), Some(2));
    let args = ["atlas", "--group", "[3,oo]", "--primes", "2..40", "--budget", "100000"];
    let a = modpoly(&args);
    let b = modpoly(&args);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let rows = lines(&a);
    let moduli: Vec<u64> = rows.iter().map(|r| r["modulus"].as_str().unwrap().parse().unwrap()).collect();
    assert!(moduli.windows(2).all(|w| w[0] < w[1]));
    // [3,∞] mod p has order p(p² − 1) for p ≥ 5 when it is a C-group
    for r in &rows {
        let p: u64 = r["modulus"].as_str().unwrap().parse().unwrap();
        if p >= 5 && r["budget_status"] == "ok" {
            assert_eq!(r["order"].as_u64(), Some(p * (p * p - 1)), "p = {p}");
        }
    }
}

#[test]
fn job_specs_round_trip() {
    for line in [
        "modpoly reduce --group [3,5,3] --mod delta' --mod -7+5*t --budget 2000000",
        "modpoly atlas --group [5,3,5] --primes 2..100 --splitting split --format table",
        "modpoly mobius --ideal principal:4,7",
    ] {
        let cli = Cli::try_parse_from(line.split(' ')).unwrap();
        assert_eq!(Cli::try_parse_from(cli.to_args()).unwrap(), cli);
    }
}
