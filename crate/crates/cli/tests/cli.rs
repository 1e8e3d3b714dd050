use std::process::{Command, Output};

fn dompoly(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_dompoly"))
        .args(args)
        .env_remove("DOMPOLY_THREADS")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn compute_family_text() {
    let o = dompoly(&["compute", "--family", "T", "--n", "2"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "x^5+5x^4+10x^3+8x^2+x\n");
}

#[test]
fn compute_from_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("k1.edges");
    std::fs::write(&path, "1 0\n").unwrap();
    let o = dompoly(&["compute", "--file", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "x\n");

    let o = dompoly(&["compute", "--file", path.to_str().unwrap(), "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert!(v["family"].is_null());
    assert!(v["n"].is_null());
    assert_eq!(v["coeffs"], serde_json::json!(["0", "1"]));
}

#[test]
fn methods_agree_byte_for_byte() {
    let reference = stdout(&dompoly(&["compute", "--family", "Q", "--n", "3", "--method", "oracle"]));
    for m in ["recurrence", "vertex", "edge", "product"] {
        let o = dompoly(&["compute", "--family", "Q", "--n", "3", "--method", m]);
        assert_eq!(o.status.code(), Some(0), "{m}");
        assert_eq!(stdout(&o), reference, "{m}");
    }
}

#[test]
fn compute_json_schema() {
    let o = dompoly(&["compute", "--family", "Q", "--n", "2", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["n"], 2);
    assert_eq!(v["family"], "Q");
    assert_eq!(v["coeffs"], serde_json::json!(["0", "0", "0", "15", "29", "21", "7", "1"]));
    assert_eq!(v["gamma"], 3);
    assert_eq!(v["count_at_1"], "73");
    let p: dompoly::DomPoly = serde_json::from_value(v["coeffs"].clone()).unwrap();
    assert_eq!(p.to_string(), "x^7+7x^6+21x^5+29x^4+15x^3");
}

#[test]
fn compute_range_csv() {
    let o = dompoly(&["compute", "--family", "T", "--n", "1..3", "--format", "csv"]);
    let text = stdout(&o);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "family,n,vertices,degree,gamma,count_at_1,polynomial");
    assert_eq!(lines.len(), 4);
    assert_eq!(lines[1], "T,1,3,3,1,7,x^3+3x^2+3x");
    assert!(lines[3].starts_with("T,3,7,7,"));
}

#[test]
fn output_flag_writes_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("out.txt");
    let o = dompoly(&["compute", "--family", "O", "--n", "1", "--output", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    assert_eq!(std::fs::read_to_string(path).unwrap(), "x^4+4x^3+6x^2\n");
}

#[test]
fn thread_count_does_not_change_output() {
    let a = dompoly(&["compute", "--family", "T", "--n", "9", "--method", "oracle", "--threads", "1"]);
    let b = Command::new(env!("CARGO_BIN_EXE_dompoly"))
        .args(["compute", "--family", "T", "--n", "9", "--method", "oracle"])
        .env("DOMPOLY_THREADS", "4")
        .output()
        .unwrap();
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(stdout(&a), stdout(&dompoly(&["compute", "--family", "T", "--n", "9"])));
}

#[test]
fn exit_codes() {
    assert_eq!(dompoly(&["--help"]).status.code(), Some(0));
    assert_eq!(dompoly(&["bogus"]).status.code(), Some(1));
    assert_eq!(dompoly(&["compute", "--family", "X", "--n", "1"]).status.code(), Some(1));
    assert_eq!(dompoly(&["compute", "--family", "T", "--n", "0"]).status.code(), Some(1));
    assert_eq!(dompoly(&["compute", "--family", "T", "--n", "1", "--cap", "31"]).status.code(), Some(1));

    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("g.edges");
    std::fs::write(&path, "2 1\n0 1\n").unwrap();
    let o = dompoly(&["compute", "--file", path.to_str().unwrap(), "--method", "recurrence"]);
    assert_eq!(o.status.code(), Some(1));

    std::fs::write(&path, "3 2\n0 1\n1 1\n").unwrap();
    let o = dompoly(&["compute", "--file", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 3"));

    let o = dompoly(&["compute", "--family", "T", "--n", "12", "--method", "oracle", "--cap", "20"]);
    assert_eq!(o.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&o.stderr).contains("T_12"));
}

#[test]
fn verify_all_match() {
    let o = dompoly(&["verify", "--max-n", "6"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("errata:"));

    let o = dompoly(&["verify", "--family", "T", "--max-n", "8", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let entries = v["entries"].as_array().unwrap();
    assert!(!entries.is_empty());
    assert!(entries.iter().all(|e| e["family"] == "T" && e["match"] == true));
}

#[test]
fn verify_literal_flags_q_primed() {
    let o = dompoly(&["verify", "--literal-paper", "--max-n", "4", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let er = v["errata"]
        .as_array()
        .unwrap()
        .iter()
        .find(|e| e["identity"] == "Q primed identity")
        .unwrap();
    let literal = er["evidence"].as_array().unwrap().iter().find(|e| e["form"] == "literal").unwrap();
    assert_eq!(literal["mismatched_n"], serde_json::json!([0, 1, 2, 3, 4]));
}

#[test]
fn sequences() {
    assert_eq!(stdout(&dompoly(&["sequence", "--family", "T", "--max-n", "4"])), "2, 7, 25, 89, 317\n");
    assert_eq!(stdout(&dompoly(&["sequence", "--family", "T", "--max-n", "1"])), "2, 7\n");
    assert_eq!(stdout(&dompoly(&["sequence", "--family", "Q", "--max-n", "2"])), "11, 73\n");
    let csv = stdout(&dompoly(&["sequence", "--family", "O", "--max-n", "3", "--format", "csv"]));
    assert_eq!(csv, "n,value\n1,11\n2,73\n3,471\n");
    let json = stdout(&dompoly(&["sequence", "--family", "T", "--max-n", "40", "--format", "json"]));
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(v["values"].as_array().unwrap().len(), 41);
}

#[test]
fn bench_rows() {
    let o = dompoly(&["bench", "--family", "T", "--n", "8", "--format", "csv", "--repeat", "1"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "family,n,vertices,method,status,seconds,subsets,speedup,note");
    assert!(lines[1].starts_with("T,8,17,oracle,ok,"));
    assert!(lines[2].starts_with("T,8,17,recurrence,ok,"));

    let o = dompoly(&["bench", "--family", "T", "--n", "200", "--format", "csv", "--repeat", "1"]);
    let text = stdout(&o);
    assert!(text.contains("T,200,401,oracle,skipped,"));
    assert!(text.contains("T,200,401,recurrence,ok,"));
    assert!(text.contains("degree 401"));
}
