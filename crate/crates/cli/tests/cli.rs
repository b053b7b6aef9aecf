use std::process::{Command, Output};

use serde_json::Value;

fn specht(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_specht"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = specht(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn json(args: &[&str]) -> Value {
    let mut full = vec!["--json"];
    full.extend_from_slice(args);
    serde_json::from_str(&stdout(&full)).unwrap()
}

#[test]
fn dim_specht() {
    assert_eq!(stdout(&["dim-specht", "[5,2]"]).trim(), "14");
    assert_eq!(json(&["dim-specht", "[2,1]"])["dimension"], "2");
}

#[test]
fn dim_poly() {
    let v = json(&["dim-poly", "[1,1]"]);
    assert_eq!(v["polynomial"], "1/2*n^2 - 3/2*n + 1");
    assert_eq!(v["threshold"], 3);
    assert!(stdout(&["dim-poly", "[]"]).contains("= 1"));
}

#[test]
fn a_set_and_decompositions() {
    assert_eq!(stdout(&["a-set", "[5,2]", "2"]).trim(), "[6,1] > [5,2]");
    assert_eq!(stdout(&["decompose-irr", "[5,2]", "1"]).trim(), "[D^(5,2)] = [S^(5,2)] - [S^(7)]");
    assert_eq!(stdout(&["decompose-std", "[5,2]", "2", "2"]).trim(), "[S^(5,2)] = [D^(5,2)] + [D^(6,1)]");
    let v = json(&["decompose-irr", "[5,2]", "2"]);
    assert_eq!(
        v,
        serde_json::json!([
            {"label": "S", "partition": [5, 2], "coeff": 1},
            {"label": "S", "partition": [6, 1], "coeff": -1}
        ])
    );
}

#[test]
fn dim_table_json() {
    let v = json(&["dim-table", "[2]", "--max-residue", "4"]);
    assert_eq!(v["default"], "1/2*n^2 - 3/2*n");
    let cases = v["cases"].as_array().unwrap();
    assert_eq!(cases.len(), 2);
    assert_eq!(cases[0]["residue"], 2);
    assert_eq!(cases[1]["polynomial"], "1/2*n^2 - 3/2*n - 1");
}

#[test]
fn gram_rank_and_dump() {
    assert_eq!(stdout(&["gram-rank", "[2,1]", "3"]).trim(), "1");
    let v = json(&["gram-rank", "[5,2]", "5"]);
    assert_eq!(v["rank"], 8);
    assert_eq!(v["p_regular"], true);

    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("gram.txt");
    stdout(&["gram-rank", "[2,1]", "3", "--dump", path.to_str().unwrap()]);
    assert_eq!(std::fs::read_to_string(path).unwrap(), "2 3\n2 1\n1 2\n");
}

#[test]
fn prime_seq() {
    assert_eq!(stdout(&["prime-seq", "1,0,1", "3"]).trim(), "(2,5) (4,17) (6,37)");
    assert_eq!(stdout(&["prime-seq", "-3,1", "3", "--p-min", "3"]).trim(), "(8,5) (10,7) (14,11)");
    let v = json(&["prime-seq", "-2,0,1", "2", "--p-min", "5"]);
    assert_eq!(v, serde_json::json!([{"t": 3, "p": 7}, {"t": 5, "p": 23}]));
}

#[test]
fn census() {
    let v = json(&["census", "1,0,1", "7"]);
    assert_eq!(v["primes"], serde_json::json!([2, 5, 13, 17, 37]));
}

#[test]
fn verify_json_and_exit_code() {
    let out = specht(&["--json", "verify", "--mu", "[2]", "--p", "5", "--n-min", "6", "--n-max", "12"]);
    assert_eq!(out.status.code(), Some(0));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    let grid = v["grid"].as_array().unwrap();
    assert_eq!(grid.len(), 7);
    let n12 = grid.iter().find(|r| r["n"] == 12).unwrap();
    assert_eq!(n12["formula_dim"], 43);
    assert_eq!(n12["oracle_dim"], 43);
    assert_eq!(n12["match"], true);
    assert_eq!(v["summary"]["hypothesis_mismatches"], 0);
}

#[test]
fn output_is_deterministic() {
    let args = ["--json", "verify", "--mu", "[1]", "--mu", "[2]", "--p", "5,7", "--n-min", "6", "--n-max", "10"];
    assert_eq!(specht(&args).stdout, specht(&args).stdout);
    let mut seq = args.to_vec();
    seq.insert(0, "--sequential");
    assert_eq!(specht(&args).stdout, specht(&seq).stdout);
}

#[test]
fn exit_codes() {
    // invalid input
    assert_eq!(specht(&["dim-specht", "[1,2]"]).status.code(), Some(2));
    assert_eq!(specht(&["gram-rank", "[2,1]", "4"]).status.code(), Some(2));
    assert_eq!(specht(&["a-set", "[5,2]", "9"]).status.code(), Some(2));
    assert_eq!(specht(&["prime-seq", "5", "3"]).status.code(), Some(2));
    assert_eq!(specht(&["no-such-command"]).status.code(), Some(2));
    // limits
    assert_eq!(specht(&["gram-rank", "[17]", "5"]).status.code(), Some(3));
    assert_eq!(specht(&["--size-cap", "6", "gram-rank", "[5,2]", "5"]).status.code(), Some(3));
    assert_eq!(specht(&["prime-seq", "1,0,1", "50", "--ceiling", "10"]).status.code(), Some(3));
    let out = specht(&["a-set", "[4,3]", "1"]);
    if !out.status.success() {
        assert_eq!(out.status.code(), Some(3));
    }
    let err = String::from_utf8(specht(&["gram-rank", "[2,1]", "4"]).stderr).unwrap();
    assert!(err.contains("4 is not prime"), "{err}");
}

#[test]
fn size_cap_from_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_specht"))
        .env("SPECHT_SIZE_CAP", "5")
        .args(["gram-rank", "[5,2]", "5"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));
}
