use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_modp-reduction")).args(args).env_remove("MODP_REDUCTION_JOBS").output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn classify_irreducible_example() {
    let o = run(&["classify", "--p", "7", "--k", "5", "--L", "0"]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["case"], "interval");
    assert_eq!(v["i"], 2);
    assert_eq!(v["r"], 3);
    assert_eq!(v["result"]["type"], "irreducible");
    assert_eq!(v["result"]["omega2_exponent"], 10);
}

#[test]
fn classify_reducible_example() {
    let o = run(&["classify", "--p", "5", "--k", "4", "--L", "1/2"]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["result"]["type"], "reducible");
    assert_eq!(v["result"]["lambda"]["coords"], serde_json::json!([2, 0]));
    assert_eq!(v["result"]["lambda"]["field"], "F_p");
    assert_eq!(v["result"]["omega_exponents"], serde_json::json!([2, 1]));
}

#[test]
fn classify_text_and_self_dual() {
    let o = run(&["classify", "--p", "7", "--k", "5", "--L", "0", "--format", "text"]);
    assert_eq!(stdout(&o), "p=7 k=5 L=0 nu=0 case=interval i=2 result=ind(omega2^10)\n");
    let o = run(&["classify", "--p", "7", "--k", "5", "--L", "5/2 + 3*sqrt(7)"]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["nu"], serde_json::json!({"num": 1, "den": 2}));
    assert_eq!(v["result"]["type"], "reducible_self_dual");
    let o = run(&["classify", "--p", "7", "--k", "5", "--L", "5/2"]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["nu"], serde_json::json!({"infinite": true}));
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["classify", "--p", "7", "--k", "5", "--L", "1/0"]).status.code(), Some(2));
    assert_eq!(run(&["classify", "--p", "7", "--k", "5", "--L", "1*sqrt(5)"]).status.code(), Some(2));
    assert_eq!(run(&["classify", "--p", "8", "--k", "5", "--L", "0"]).status.code(), Some(2));
    assert_eq!(run(&["classify", "--p", "7", "--k", "9", "--L", "0"]).status.code(), Some(2));
    assert_eq!(run(&["sweep", "--p", "7", "--k-max", "12"]).status.code(), Some(2));
    assert_eq!(run(&["verify-identities", "--id", "NOPE"]).status.code(), Some(2));
    assert_eq!(run(&["no-such-command"]).status.code(), Some(2));
    assert_eq!(run(&["--help"]).status.code(), Some(0));
}

#[test]
fn sweep_is_deterministic_across_jobs() {
    let one = Command::new(env!("CARGO_BIN_EXE_modp-reduction"))
        .args(["sweep", "--p", "7", "--format", "csv"])
        .env("MODP_REDUCTION_JOBS", "1")
        .output()
        .unwrap();
    let three = run(&["sweep", "--p", "7", "--format", "csv", "--jobs", "3"]);
    assert_eq!(one.status.code(), Some(0));
    assert_eq!(stdout(&one), stdout(&three));
    let text = stdout(&one);
    let mut lines = text.lines();
    assert!(lines.next().unwrap().starts_with("p,k,r,L,nu,case,i,type"));
    // k = 3..8, each with 2r + 5 grid values plus ν = ∞
    let expected: usize = (3..=8).map(|k| 2 * (k - 2) + 5 + 1).sum();
    assert_eq!(lines.count(), expected);
}

#[test]
fn sweep_explicit_l() {
    let o = run(&["sweep", "--p", "5", "--k-min", "4", "--k-max", "4", "--L", "1/2", "--L", "3/2"]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    let arr = v.as_array().unwrap();
    assert_eq!(arr.len(), 2);
    assert_eq!(arr[1]["result"]["omega2_exponent"], 7);
}

#[test]
fn verify_subcommands() {
    let o = run(&["verify-appendices", "--r-max", "12", "--appendix", "B11", "--format", "text"]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    assert!(s.starts_with("PASS B11 r=1\n"));
    assert!(s.ends_with("SUMMARY total=6 passed=6 failed=0\n"));

    let o = run(&["verify-identities", "--max", "6", "--id", "MAIN17", "--id", "WZ", "--wz-max", "5", "--format", "text"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("PASS WZ n<=5"));

    let o = run(&["bm-check", "--p", "7", "--samples", "5", "--format", "csv"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("status,id,param,detail\nPASS,BM_B,p=7 k=4 i=1,"));

    let o = run(&["hecke-check", "--p", "5", "--vectors", "4", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let last: Value = serde_json::from_str(stdout(&o).lines().last().unwrap()).unwrap();
    assert_eq!(last["summary"]["failed"], 0);
}
