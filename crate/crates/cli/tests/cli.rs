use std::path::Path;
use std::process::{Command, Output};

fn finring(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_finring")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exited normally")
}

#[test]
fn describe_lists_the_distinguished_sets() {
    let o = finring(&["--no-cache", "describe", "Z(9)"]);
    assert_eq!(code(&o), 0);
    let text = stdout(&o);
    assert!(text.contains("U      |6| = {1,2,4,5,7,8}"), "{text}");
    assert!(text.contains("J      |3| = {0,3,6}"));
    assert!(text.contains("sqrtJ  |3| = {0,3,6}"));

    let m = stdout(&finring(&["--no-cache", "--json", "describe", "M(2,Z(2))"]));
    let v: serde_json::Value = serde_json::from_str(&m).unwrap();
    assert_eq!(v["order"], 16);
    assert_eq!(v["commutative"], false);

    let z = stdout(&finring(&["--no-cache", "describe", "Z(1)"]));
    assert!(z.contains("zero ring"));
}

#[test]
fn classify_prints_the_record() {
    let o = finring(&["--no-cache", "classify", "Z(3)"]);
    assert_eq!(code(&o), 0);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["w_sqrt_ju"], true);
    assert_eq!(v["sqrt_ju"], false);
    assert_eq!(v["characteristic"], 3);

    let one = |name: &str| stdout(&finring(&["--no-cache", "classify", "Z(3)", "--verdict", name])).trim().to_string();
    assert_eq!(one("w_sqrt_ju"), "true");
    assert_eq!(one("weakly-semi-boolean"), one("weakly_j_clean"));
    assert_eq!(code(&finring(&["--no-cache", "classify", "Z(3)", "--verdict", "nonsense"])), 2);
}

#[test]
fn exit_codes_follow_the_error_kind() {
    assert_eq!(code(&finring(&["--no-cache", "verify", "--claims", "BOGUS"])), 2);
    assert_eq!(code(&finring(&["--no-cache", "describe", "M(2,Z(2)"])), 2);
    assert_eq!(code(&finring(&["--no-cache", "describe", "Z(0)"])), 3);
    assert_eq!(code(&finring(&["--no-cache", "--max-order", "8", "describe", "M(2,Z(2))"])), 3);
    assert_eq!(code(&finring(&["--no-cache", "load", "/nonexistent/ring.json"])), 2);
}

#[test]
fn verify_one_claim_over_the_catalog() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("report.json");
    let o = finring(&["--no-cache", "verify", "--claims", "P-matrix", "--out", out.to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("failures 0"));
    let report: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
    let claim = &report["claims"][0];
    assert_eq!(claim["id"], "P-matrix");
    assert_eq!(claim["fail"], 0);
    assert_eq!(claim["pass"], claim["subjects"]);
}

#[test]
fn verify_one_subject() {
    let o = finring(&["--no-cache", "--json", "verify", "--claims", "P-matrix", "--subject", "M(2,Z(3))"]);
    assert_eq!(code(&o), 0);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v[0]["status"], "pass");
    assert_eq!(v[0]["witness"]["elements"], serde_json::json!([67, 14]));
}

#[test]
fn census_rows_use_the_fixed_columns() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().join("cache");
    let args = ["--cache-dir", cache.to_str().unwrap(), "--max-order", "16", "census"];
    let first = finring(&args);
    assert_eq!(code(&first), 0);
    let text = stdout(&first);
    let mut lines = text.lines();
    let header: Vec<&str> = lines.next().unwrap().split(',').collect();
    assert_eq!(&header[..4], ["expression", "order", "characteristic", "abelian"]);
    let mut verdicts = header[3..].to_vec();
    verdicts.sort();
    assert_eq!(verdicts, header[3..]);
    let row = |name: &str| -> Vec<String> {
        let line = text.lines().find(|l| l.starts_with(&format!("{name},"))).unwrap();
        line.split(',').map(String::from).collect()
    };
    let col = |name: &str| header.iter().position(|h| *h == name).unwrap();
    let z6 = row("Z(6)");
    assert_eq!(z6[1], "6");
    assert_eq!(z6[col("w_sqrt_ju")], "true");
    assert_eq!(z6[col("uu")], "false");
    let d = row("TrivExt(Z(2))");
    assert_eq!(d[1], "4");
    assert_eq!(d[col("uu")], "true");
    assert_eq!(d[col("reduced")], "false");

    assert!(std::fs::read_dir(&cache).unwrap().count() > 0);
    let again = finring(&args);
    assert_eq!(stdout(&again), text);
}

#[test]
fn save_and_load_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("ring.json");
    let p = path.to_str().unwrap();
    assert_eq!(code(&finring(&["--no-cache", "save", "GR(Z(2),C(2))", p])), 0);
    let original = stdout(&finring(&["--no-cache", "describe", "GR(Z(2),C(2))"]));
    let loaded = finring(&["--no-cache", "load", p]);
    assert_eq!(code(&loaded), 0);
    let hash_line = |t: &str| t.lines().nth(1).unwrap().to_string();
    assert_eq!(hash_line(&stdout(&loaded)), hash_line(&original));

    tamper(&path);
    let o = finring(&["--no-cache", "load", p]);
    assert_eq!(code(&o), 3);
    assert!(String::from_utf8_lossy(&o.stderr).contains("error"));
}

/// Breaks associativity by rewriting one product.
fn tamper(path: &Path) {
    let mut v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap();
    let cell = &mut v["mul"][3][3];
    let old = cell.as_u64().unwrap();
    *cell = serde_json::json!((old + 1) % 4);
    std::fs::write(path, v.to_string()).unwrap();
}
