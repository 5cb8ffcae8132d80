use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

fn nilrep(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_nilrep"))
        .args(args)
        .env_remove("NILREP_MAX_DIM")
        .output()
        .unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout)
        .unwrap_or_else(|e| panic!("{e}: {}", String::from_utf8_lossy(&out.stdout)))
}

fn write(dir: &TempDir, name: &str, text: &str) -> PathBuf {
    let p = dir.path().join(name);
    std::fs::write(&p, text).unwrap();
    p
}

fn corpus_file(dir: &TempDir, family: &str, param: Option<&str>) -> PathBuf {
    let p = dir
        .path()
        .join(format!("{family}{}.json", param.unwrap_or("")));
    let mut args = vec!["corpus", family];
    args.extend(param);
    args.extend(["--out", p.to_str().unwrap()]);
    assert_eq!(nilrep(&args).status.code(), Some(0));
    p
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

const HEISENBERG: &str = r#"{
  "name": "h3",
  "dim": 3,
  "basis": ["e1", "e2", "e3"],
  "brackets": [{"i": 0, "j": 1, "coeffs": ["0", "0", "1"]}]
}"#;

#[test]
fn validate_examples() {
    let dir = TempDir::new().unwrap();
    let ok = write(&dir, "h.json", HEISENBERG);
    let out = nilrep(&["validate", s(&ok)]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["N"], 2);

    let so3 = write(
        &dir,
        "so3.json",
        r#"{"name":"so3","dim":3,"basis":["e1","e2","e3"],"brackets":[
            {"i":0,"j":1,"coeffs":["0","0","1"]},
            {"i":1,"j":2,"coeffs":["1","0","0"]},
            {"i":0,"j":2,"coeffs":["0","-1","0"]}]}"#,
    );
    let out = nilrep(&["validate", s(&so3)]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(json(&out)["error"], "NotNilpotent");

    let bad = write(&dir, "bad.json", &HEISENBERG.replace("\"1\"]", "\"1//2\"]"));
    let out = nilrep(&["validate", s(&bad)]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(json(&out)["error"], "ParseError");

    let jacobi = write(
        &dir,
        "jacobi.json",
        r#"{"name":"broken","dim":3,"basis":["a","b","c"],"brackets":[
            {"i":0,"j":1,"coeffs":["0","0","1"]},
            {"i":0,"j":2,"coeffs":["1","0","0"]}]}"#,
    );
    let out = nilrep(&["validate", s(&jacobi)]);
    assert_eq!(out.status.code(), Some(1));
    let v = json(&out);
    assert_eq!(v["error"], "JacobiViolation");
    assert_eq!(v["indices"].as_array().unwrap().len(), 3);
}

#[test]
fn analyze_examples() {
    let dir = TempDir::new().unwrap();
    let v = json(&nilrep(&["analyze", s(&write(&dir, "h.json", HEISENBERG))]));
    assert_eq!(v["lcs_dims"], serde_json::json!([3, 1, 0]));
    assert_eq!(v["N"], 2);
    assert_eq!(v["center"], serde_json::json!([["0", "0", "1"]]));

    let v = json(&nilrep(&[
        "analyze",
        s(&corpus_file(&dir, "abelian", Some("4"))),
    ]));
    assert_eq!(v["lcs_dims"], serde_json::json!([4, 0]));
    assert_eq!(v["N"], 1);

    let v = json(&nilrep(&[
        "analyze",
        s(&corpus_file(&dir, "filiform", Some("5"))),
    ]));
    assert_eq!(v["lcs_dims"], serde_json::json!([5, 3, 2, 1, 0]));
    assert_eq!(v["N"], 4);
}

#[test]
fn bch_examples() {
    let dir = TempDir::new().unwrap();
    let h = write(&dir, "h.json", HEISENBERG);
    let v = json(&nilrep(&["bch", s(&h), "--x", "1,0,0", "--y", "0,1,0"]));
    assert_eq!(v["product"], serde_json::json!(["1", "1", "1/2"]));

    let f = corpus_file(&dir, "filiform", Some("5"));
    let v = json(&nilrep(&[
        "bch",
        s(&f),
        "--x",
        "1,2/3,-1,0,5",
        "--y",
        "-1,-2/3,1,0,-5",
    ]));
    assert_eq!(v["product"], serde_json::json!(["0", "0", "0", "0", "0"]));

    let a = corpus_file(&dir, "abelian", Some("3"));
    let v = json(&nilrep(&["bch", s(&a), "--x", "1,2,3", "--y", "1/2,-2,0"]));
    assert_eq!(v["product"], serde_json::json!(["3/2", "0", "3"]));

    assert_eq!(
        nilrep(&["bch", s(&h), "--x", "1,0", "--y", "0,1,0"])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(
        nilrep(&["bch", s(&h), "--x", "1,zero,0", "--y", "0,1,0"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn represent_examples() {
    let dir = TempDir::new().unwrap();
    let cases = [
        (write(&dir, "h.json", HEISENBERG), 3, 2, 4, 5),
        (corpus_file(&dir, "abelian", Some("3")), 3, 1, 4, 2),
        (corpus_file(&dir, "strict_upper", Some("4")), 6, 3, 10, 13),
    ];
    for (path, dim_g, n, dim_fg, bound) in cases {
        let out = dir.path().join("dump.json");
        assert_eq!(
            nilrep(&["represent", s(&path), "--out", s(&out)])
                .status
                .code(),
            Some(0)
        );
        let v: Value = serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
        assert_eq!(
            (v["dim_g"].as_u64(), v["N"].as_u64()),
            (Some(dim_g), Some(n))
        );
        assert_eq!(
            (v["dim_FG"].as_u64(), v["bound"].as_u64()),
            (Some(dim_fg), Some(bound))
        );
        assert_eq!(v["basis"].as_array().unwrap().len(), dim_fg as usize);
        let gens = v["generators"].as_array().unwrap();
        assert_eq!(gens.len(), dim_g as usize);
        assert_eq!(gens[0]["matrix"].as_array().unwrap().len(), dim_fg as usize);
    }
}

#[test]
fn verify_examples() {
    let dir = TempDir::new().unwrap();
    let out = nilrep(&[
        "verify",
        s(&write(&dir, "h.json", HEISENBERG)),
        "--samples",
        "100",
        "--seed",
        "42",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["passed"], true);
    assert_eq!(
        (v["samples"].as_u64(), v["seed"].as_u64()),
        (Some(100), Some(42))
    );

    let out = nilrep(&[
        "verify",
        s(&corpus_file(&dir, "abelian", Some("2"))),
        "--samples",
        "10",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["measured_max_nilpotence_index"], 2);
    assert_eq!(v["bound"], 2);

    let broken = write(
        &dir,
        "broken.json",
        r#"{"name":"broken","dim":3,"basis":["a","b","c"],"brackets":[
            {"i":0,"j":1,"coeffs":["0","0","1"]},
            {"i":0,"j":2,"coeffs":["1","0","0"]}]}"#,
    );
    let out = nilrep(&["verify", s(&broken)]);
    assert_eq!(out.status.code(), Some(1));
    assert!(out.stdout.is_empty());
    assert!(String::from_utf8_lossy(&out.stderr).contains("JacobiViolation"));

    assert_eq!(
        nilrep(&["verify", s(&broken), "--samples", "0"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn corpus_examples() {
    let out = nilrep(&["corpus", "heisenberg", "3"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    let expected: Value = serde_json::from_str(HEISENBERG).unwrap();
    assert_eq!(v, expected);

    let v = json(&nilrep(&["corpus", "strict_upper", "4"]));
    assert_eq!(v["dim"], 6);

    let out = nilrep(&["corpus", "heisenberg", "4"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("BadParameter"));
}

#[test]
fn report_examples() {
    let dir = TempDir::new().unwrap();
    let h = write(&dir, "h.json", HEISENBERG);
    let a = corpus_file(&dir, "abelian", Some("1"));
    let json_out = dir.path().join("report.json");
    let out = nilrep(&[
        "report",
        s(&h),
        s(&a),
        "--samples",
        "10",
        "--out",
        s(&json_out),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    let rows: Vec<Vec<&str>> = text
        .lines()
        .skip(1)
        .map(|l| l.split_whitespace().collect())
        .collect();
    assert_eq!(rows[0][..4], ["h3", "3", "2", "4"]);
    assert_eq!(rows[0][5..], ["5", "pass"]);
    assert_eq!(rows[1], ["a1", "1", "1", "2", "2", "2", "pass"]);

    let v: Value = serde_json::from_str(&std::fs::read_to_string(&json_out).unwrap()).unwrap();
    let names: Vec<&str> = v["rows"]
        .as_array()
        .unwrap()
        .iter()
        .map(|r| r["name"].as_str().unwrap())
        .collect();
    assert_eq!(names, ["h3", "a1"]);
    // every number in the table is in the JSON
    assert_eq!(v["rows"][0]["measured"].to_string(), rows[0][4]);

    let out = nilrep(&["report", s(&a), s(&h), "--samples", "10", "--json"]);
    let v = json(&out);
    assert_eq!(v["rows"][0]["name"], "a1");
}

#[test]
fn dimension_cap() {
    let dir = TempDir::new().unwrap();
    let u4 = corpus_file(&dir, "strict_upper", Some("4"));
    let capped = Command::new(env!("CARGO_BIN_EXE_nilrep"))
        .args(["represent", s(&u4)])
        .env("NILREP_MAX_DIM", "5")
        .output()
        .unwrap();
    assert_eq!(capped.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&capped.stderr).contains("DimensionCap"));

    let garbage = Command::new(env!("CARGO_BIN_EXE_nilrep"))
        .args(["represent", s(&u4)])
        .env("NILREP_MAX_DIM", "lots")
        .output()
        .unwrap();
    assert_eq!(garbage.status.code(), Some(2));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(nilrep(&[]).status.code(), Some(2));
    assert_eq!(nilrep(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(
        nilrep(&["validate", "/definitely/not/here.json"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(nilrep(&["--version"]).status.code(), Some(0));
}
