use std::io::Write;
use std::process::{Command, Output, Stdio};

fn axial(args: &[&str], stdin: &str) -> Output {
    axial_env(args, stdin, &[])
}

fn axial_env(args: &[&str], stdin: &str, env: &[(&str, &str)]) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_axial"));
    cmd.args(args)
        .env_remove("AXIAL_CAP")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped());
    for (k, v) in env {
        cmd.env(k, v);
    }
    let mut child = cmd.spawn().expect("binary runs");
    child
        .stdin
        .take()
        .unwrap()
        .write_all(stdin.as_bytes())
        .unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn built(spec: &str) -> String {
    let o = axial(&["build", spec], "");
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    stdout(&o)
}

#[test]
fn norton_sakuma_verifies() {
    let o = axial(&["verify", "--law", "M:1/4,1/32"], &built("ns:2A"));
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("result PASS"));
}

#[test]
fn matsuo_s4_group_order() {
    let o = axial(&["miyamoto"], &built("matsuo:Sn:4:1/4"));
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("group order 24"));
    let o = axial(&["--json", "miyamoto"], &built("matsuo:Sn:4:1/4"));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["group_order"], 24);
}

#[test]
fn broken_product_fails_with_witness() {
    let mut v: serde_json::Value = serde_json::from_str(&built("matsuo:Sn:3:1/4")).unwrap();
    v["products"][1]["v"] = serde_json::json!({"0": "1/8", "1": "1/8"});
    let o = axial(&["verify"], &v.to_string());
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("violation"));
}

#[test]
fn malformed_input_exits_2() {
    let o = axial(&["verify"], "{not json");
    assert_eq!(o.status.code(), Some(2));
    assert!(!o.stderr.is_empty());
    assert!(o.stdout.is_empty());
    let o = axial(&["build", "ns:9Z"], "");
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn caps_exit_3() {
    let o = axial_env(&["miyamoto"], &built("matsuo:Sn:4:1/4"), &[("AXIAL_CAP", "3")]);
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn file_round_trip_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("a.json");
    let p = path.to_str().unwrap();
    let o = axial(&["build", "ns:4B", "-o", p], "");
    assert_eq!(o.status.code(), Some(0));
    let from_file = axial(&["--json", "verify", p], "");
    let from_stdin = axial(&["--json", "verify"], &built("ns:4B"));
    assert_eq!(from_file.stdout, from_stdin.stdout);
    let again = axial(&["--json", "verify", p], "");
    assert_eq!(again.stdout, from_file.stdout);
}

#[test]
fn frobenius_and_radical() {
    let o = axial(&["--json", "frobenius"], &built("ns:3A"));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["gram"][0][1], "13/256");
    assert_eq!(v["dim"], 1);
    let o = axial(&["--json", "radical"], &built("matsuo:Sn:3:-1"));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["dim"], 1);
}

#[test]
fn decompose_and_axet() {
    let o = axial(&["decompose"], &built("ns:2B"));
    let s = stdout(&o);
    assert!(s.contains("component {a0}") && s.contains("pairwise zero true"));
    let o = axial(&["--json", "axet", "--gens", "0,1"], &built("ns:5A"));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["shape"], "X(5)");
    assert_eq!(v["skew"], false);
}

#[test]
fn highwater_commands() {
    let o = axial(&["hw", "quotient", "3"], "");
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["basis"], serde_json::json!(["a0", "a1", "a2", "s1"]));
    assert_eq!(axial(&["hw", "check-tuple", "1,-2,1"], "").status.code(), Some(0));
    assert_eq!(axial(&["hw", "check-tuple", "1,-1,0"], "").status.code(), Some(1));
    let o = axial(
        &["hw", "member", "--tuple", "1,0,-1", "--element", r#"{"a":{"0":"1"}}"#],
        "",
    );
    assert!(stdout(&o).contains("member unknown"));
}

#[test]
fn spin_factors_from_gram_files() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("b.json");
    std::fs::write(&path, r#"{"gram": [[2, 0], [0, 2]]}"#).unwrap();
    let spec = format!("spin:{}", path.display());
    let o = axial(&["verify"], &built(&spec));
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    std::fs::write(&path, "[[1, 0], [0, 1]]").unwrap();
    let spec = format!("splitspin:{}:1/3", path.display());
    let o = axial(&["verify"], &built(&spec));
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let o = axial(&["verify", "--law", "M:-1,1/2"], &built(&format!("splitspin:{}:-1", path.display())));
    assert_eq!(o.status.code(), Some(0));
}
