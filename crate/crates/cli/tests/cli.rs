use std::process::{Command, Output};

use tropmon::representation::Representation;
use tropmon::TropMatrix;

fn tropmon(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tropmon"))
        .args(args)
        .env_remove("TROP_SEED")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

#[test]
fn classify_text_and_exit_codes() {
    let out = tropmon(&["classify", "a,b|ab=1"]);
    assert_eq!(code(&out), 0);
    assert!(
        stdout(&out).contains("UT: yes (rank 2), MT: yes (rank 2)"),
        "{}",
        stdout(&out)
    );

    let out = tropmon(&["classify", "a,b|a²ba=ab"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("monoid:   M7"));
    assert!(stdout(&out).contains("MT: unknown"));

    assert_eq!(code(&tropmon(&["classify", "a,b|aabb=1"])), 3);
    assert_eq!(code(&tropmon(&["classify", "a,b|ab=ba=b"])), 2);
    assert_eq!(code(&tropmon(&["classify", "a,b|ab=c"])), 2);
}

#[test]
fn classify_json() {
    let out = tropmon(&["--format", "json", "classify", "y,x|xyx=yx"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["monoid"], "M5");
    assert_eq!(v["ut_rank"], "<=4");
    assert_eq!(v["m_tropical"], "YES");
}

#[test]
fn verify_exit_codes() {
    let out = tropmon(&["verify", "bicyclic", "--max-len", "6"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("classes: 28"));
    assert_eq!(code(&tropmon(&["verify", "m6", "--k", "3", "--parallel"])), 0);
    assert_eq!(code(&tropmon(&["verify", "m4"])), 3);
    assert_eq!(code(&tropmon(&["verify", "m6", "--k", "0"])), 2);
    assert_eq!(code(&tropmon(&["verify", "nonsense"])), 2);
}

#[test]
fn identity_outcomes() {
    let out = tropmon(&["identity", "adian", "--trials", "500"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("NO_COUNTEREXAMPLE"));

    let out = tropmon(&["identity", "xy=yx", "--backend", "model:m2"]);
    assert_eq!(code(&out), 1);
    assert!(stdout(&out).contains("COUNTEREXAMPLE"));

    let out = tropmon(&["identity", "shneerson(7)", "--backend", "model:m7", "--pool-bound", "2"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("HOLDS_ON_POOL"));

    let out = tropmon(&[
        "identity",
        "(xyx)^2(yx)^2=(yx)^2(xyx)^2",
        "--backend",
        "search:m4",
        "--pool-bound",
        "1",
    ]);
    assert_ne!(code(&out), 1, "bounded search never refutes");

    assert_eq!(code(&tropmon(&["identity", "xy=yx", "--backend", "free"])), 1);
    assert_eq!(code(&tropmon(&["identity", "xy=yx", "--backend", "ut:x"])), 2);
    assert_eq!(code(&tropmon(&["identity", "nothing-known"])), 2);
}

#[test]
fn identity_is_reproducible_and_seeded() {
    let args = [
        "--format",
        "json",
        "identity",
        "comm",
        "--backend",
        "mt:3",
        "--trials",
        "50",
    ];
    let a = tropmon(&args);
    let b = tropmon(&args);
    assert_eq!(a.stdout, b.stdout);
    let v: serde_json::Value = serde_json::from_str(&stdout(&a)).unwrap();
    assert_eq!(v["status"], "COUNTEREXAMPLE");
    assert_eq!(v["seed"], 0xC0FFEE);

    let env = Command::new(env!("CARGO_BIN_EXE_tropmon"))
        .args(args)
        .env("TROP_SEED", "17")
        .output()
        .unwrap();
    let v: serde_json::Value = serde_json::from_slice(&env.stdout).unwrap();
    assert_eq!(v["seed"], 17);
    let flag = tropmon(&[&args[..], &["--seed", "0x11"]].concat());
    assert_eq!(flag.stdout, env.stdout);
}

#[test]
fn eval_outputs_matrix_json() {
    let out = tropmon(&["eval", "m3", "b^7a^8b"]);
    assert_eq!(stdout(&out).trim(), r#"[[-4,"-inf"],["-inf",12]]"#);

    let out = tropmon(&["--format", "json", "eval", "m3", "b⁷a⁸b"]);
    let m = TropMatrix::from_json(stdout(&out).trim()).unwrap();
    assert_eq!(m.to_json(), r#"{"n":2,"rows":[[-4,"-inf"],["-inf",12]]}"#);

    assert_eq!(code(&tropmon(&["eval", "m3", "abc"])), 2);
    assert_eq!(code(&tropmon(&["eval", "m7", "ab"])), 3);
}

#[test]
fn rep_round_trips_through_eval() {
    let out = tropmon(&["--format", "json", "rep", "m6", "--k", "2"]);
    let rep = Representation::from_json(stdout(&out).trim()).unwrap();
    assert!(!rep.is_unital());

    let path = std::env::temp_dir().join(format!("tropmon-rep-{}.json", std::process::id()));
    std::fs::write(&path, stdout(&out)).unwrap();
    let from_file = tropmon(&["eval", "m6", "aab", "--rep-file", path.to_str().unwrap()]);
    let from_catalog = tropmon(&["eval", "m6", "--k", "2", "bbb"]);
    std::fs::remove_file(&path).unwrap();
    assert_eq!(code(&from_file), 0);
    assert_eq!(from_file.stdout, from_catalog.stdout);
}

#[test]
fn normal_forms() {
    assert_eq!(stdout(&tropmon(&["nf", "m6", "--k", "2", "aab"])).trim(), "bbb");
    assert_eq!(stdout(&tropmon(&["nf", "bicyclic", "abbaab"])).trim(), "ba");
    assert_eq!(stdout(&tropmon(&["nf", "m4", "ababa"])).trim(), "bba");
    assert_eq!(
        stdout(&tropmon(&["nf", "monogenic", "--k", "3", "--l", "1", "a^7"])).trim(),
        "a"
    );
    let out = tropmon(&["--format", "json", "nf", "m5", "abba"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["normal_form"], "baba");
    assert_eq!(v["element"]["monoid"], "M5");
}

#[test]
fn table_lists_every_row() {
    let out = tropmon(&["--format", "json", "table"]);
    let rows: Vec<serde_json::Value> = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(rows.len(), 14);
    let text = stdout(&tropmon(&["table"]));
    assert_eq!(text.lines().count(), 15);
    assert!(text.lines().any(|l| l.starts_with("M4") && l.contains("unknown")));
}

#[test]
fn clap_errors_exit_with_two() {
    assert_eq!(code(&tropmon(&["classify"])), 2);
    assert_eq!(code(&tropmon(&["frobnicate"])), 2);
}
