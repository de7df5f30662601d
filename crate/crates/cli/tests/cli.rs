use std::process::{Command, Output};

use serde_json::Value;

fn cgfib(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cgfib"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = cgfib(args);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn code(args: &[&str]) -> Option<i32> {
    cgfib(args).status.code()
}

#[test]
fn decompose_text() {
    assert_eq!(
        stdout(&["decompose", "424"]),
        "424 = 2·F2 + F4 + 2·F8 + F14\n"
    );
    assert_eq!(stdout(&["decompose", "0"]), "0 = (empty)\n");
    assert_eq!(
        stdout(&["decompose", "11", "--system", "zeck"]),
        "11 = F4 + F6\n"
    );
}

#[test]
fn decompose_json_schema() {
    let v: Value =
        serde_json::from_str(&stdout(&["decompose", "424", "--format", "json"])).unwrap();
    assert_eq!(v["n"], "424");
    assert_eq!(v["system"], "chung-graham");
    assert_eq!(v["coefficients"], serde_json::json!([2, 1, 0, 2, 0, 0, 1]));

    let v: Value = serde_json::from_str(&stdout(&[
        "decompose",
        "11",
        "--system",
        "zeck",
        "--format",
        "json",
    ]))
    .unwrap();
    assert_eq!(
        v,
        serde_json::json!({"n": "11", "system": "zeckendorf", "indices": [4, 6]})
    );

    let big = "98765432109876543210987654321098765432109876543210";
    let v: Value = serde_json::from_str(&stdout(&["decompose", big, "--format", "json"])).unwrap();
    assert_eq!(v["n"], big);
}

#[test]
fn decompose_csv_and_lines() {
    assert_eq!(
        stdout(&["decompose", "424", "--format", "csv"]),
        "index,coefficient\n2,2\n4,1\n8,2\n14,1\n"
    );
    assert_eq!(
        stdout(&["decompose", "424", "--format", "lines"]),
        "2·F2\nF4\n2·F8\nF14\n"
    );
}

#[test]
fn set_listings() {
    let b2 = stdout(&["set", "B", "2", "--limit", "30", "--format", "lines"]);
    assert_eq!(b2.lines().count(), 11);
    assert_eq!(b2, "3\n6\n8\n11\n14\n16\n19\n21\n24\n27\n29\n");
    let b4 = stdout(&["set", "B", "4", "--limit", "30", "--format", "lines"]);
    assert_eq!(b4.lines().count(), 13);
    assert!(b4.starts_with("1\n") && b4.ends_with("\n30\n"));
    assert_eq!(
        stdout(&["set", "A", "2", "--limit", "13", "--format", "lines"]),
        "1\n2\n4\n5\n7\n9\n10\n12\n13\n"
    );
    assert_eq!(
        stdout(&["set", "Z", "4", "--limit", "12"]),
        "Z(4) = {3, 4, 11, 12}\n"
    );
    assert_eq!(
        stdout(&["set", "A", "4", "--limit", "10", "--format", "csv"]),
        "index,value\n1,3\n2,6\n"
    );
    assert_eq!(
        stdout(&["set", "B", "2", "--count", "3", "--format", "json"]),
        "[\"3\",\"6\",\"8\"]\n"
    );
}

#[test]
fn set_usage_errors() {
    assert_eq!(code(&["set", "A", "3", "--limit", "10"]), Some(2));
    assert_eq!(code(&["set", "B", "0", "--limit", "10"]), Some(2));
    assert_eq!(code(&["set", "Q", "2", "--limit", "10"]), Some(2));
    assert_eq!(code(&["set", "B", "2"]), Some(2));
    assert_eq!(code(&["set", "B", "2", "--limit", "-5"]), Some(2));
}

#[test]
fn golden_queries() {
    assert_eq!(stdout(&["golden", "prefix", "8"]), "BABBABAB\n");
    assert_eq!(stdout(&["golden", "letter", "2"]), "A\n");
    assert_eq!(stdout(&["golden", "count", "8"]), "5\n");
    assert_eq!(stdout(&["golden", "letter", "21"]), "B\n");
    assert_eq!(code(&["golden", "letter", "0"]), Some(2));
    assert_eq!(code(&["golden", "letter", "abc"]), Some(2));
    let v: Value =
        serde_json::from_str(&stdout(&["golden", "count", "8", "--format", "json"])).unwrap();
    assert_eq!(v["count_b"], "5");
}

#[test]
fn table_rows() {
    let text = stdout(&["table", "--k", "1", "--rows", "13"]);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "q(1) = 1 = F2");
    assert_eq!(lines[4], "q(5) = 7 = F2 + 2·F4");
    assert_eq!(lines[12], "q(13) = 20 = F2 + F4 + 2·F6");
    assert_eq!(
        stdout(&["table", "--k", "2", "--rows", "3", "--format", "lines"]),
        "3\n6\n11\n"
    );
    assert_eq!(code(&["table", "--k", "0"]), Some(2));
}

#[test]
fn verify_exit_codes() {
    assert_eq!(
        code(&["verify", "cg_bijection", "--limit", "10000"]),
        Some(0)
    );
    assert_eq!(
        code(&["verify", "main_theorem", "--N", "2", "--limit", "100000"]),
        Some(0)
    );
    assert_eq!(code(&["verify", "unknown_check"]), Some(2));
    assert_eq!(
        code(&["verify", "cg_bijection", "--limit", "99999999"]),
        Some(2)
    );
    // counterexample found: the 4th golden letter is B
    assert_eq!(code(&["verify", "golden_marks", "--limit", "3"]), Some(1));
}

#[test]
fn verify_json_report() {
    let v: Value = serde_json::from_str(&stdout(&[
        "verify",
        "difference_law",
        "--k",
        "1",
        "--rows",
        "1000",
        "--format",
        "json",
    ]))
    .unwrap();
    assert_eq!(v["check"], "difference_law");
    assert_eq!(v["passed"], true);
    assert_eq!(v["counterexample"], Value::Null);
    assert!(v["range"].is_string());

    let out = cgfib(&["verify", "golden_marks", "--format", "json"]);
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["passed"], false);
    assert_eq!(v["counterexample"], "1");
}

#[test]
fn verify_list() {
    let listing = stdout(&["verify", "list"]);
    assert!(listing.lines().any(|l| l.starts_with("main_theorem")));
}

#[test]
fn bad_arguments_exit_two() {
    assert_eq!(code(&[]), Some(2));
    assert_eq!(code(&["decompose"]), Some(2));
    assert_eq!(code(&["decompose", "12", "--format", "xml"]), Some(2));
    assert_eq!(code(&["decompose", "1.5"]), Some(2));
    assert_eq!(code(&["--help"]), Some(0));
}
