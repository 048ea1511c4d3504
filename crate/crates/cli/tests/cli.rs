use std::io::Write;
use std::process::{Command, Output, Stdio};

fn tangle3(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tangle3")).args(args).output().expect("binary runs")
}

fn json(out: &Output) -> serde_json::Value {
    serde_json::from_slice(&out.stdout).expect("valid json")
}

#[test]
fn classify_exit_codes() {
    assert_eq!(tangle3(&["classify", "id", "id"]).status.code(), Some(0));
    assert_eq!(tangle3(&["classify", "s3", "id"]).status.code(), Some(0));
    assert_eq!(tangle3(&["classify", "s1", "id"]).status.code(), Some(1));
    assert_eq!(tangle3(&["classify", "s4", "id"]).status.code(), Some(2));
    assert_eq!(tangle3(&["classify", "s1^x", "id"]).status.code(), Some(2));
}

#[test]
fn classify_json_schema() {
    let out = tangle3(&["classify", "s2 s1", "s1 s2", "--json", "--with-oracle"]);
    let v = json(&out);
    for key in ["verdict", "phi_F", "phi_G", "subtangle_F", "subtangle_G", "oracle", "rule"] {
        assert!(v.get(key).is_some(), "missing {key}");
    }
    assert_eq!(v["subtangle_F"]["slope"].as_array().unwrap().len(), 2);
    let id = json(&tangle3(&["classify", "id", "id", "--json"]));
    assert_eq!(id["subtangle_F"]["slope"], serde_json::json!([1, 0]));
    assert!(id.get("oracle").is_none());
}

#[test]
fn disk_certificate_json() {
    let v = json(&tangle3(&["disk", "s1", "--certify", "--oracle", "--json"]));
    assert_eq!(v["oracle"], false);
    assert_eq!(v["certificate"]["verdict"], "DoesNotBound");
    assert_eq!(v["certificate"]["rules"][0]["name"], "necessary_xii");
    let v = json(&tangle3(&["disk", "s1", "--curve", "E3", "--certify", "--json"]));
    assert_eq!(v["certificate"]["verdict"], "Bounds");
}

#[test]
fn invariants_and_selftest() {
    let v = json(&tangle3(&["invariants", "s1 s2^-1", "--json"]));
    assert_eq!(v["curves"].as_array().unwrap().len(), 3);
    assert_eq!(v["permutation"].as_array().unwrap().len(), 6);
    let out = tangle3(&["selftest"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stdout));
}

#[test]
fn batch_preserves_order() {
    let pairs = ["s1\tid", "s3\tid", "s2 s3\ts3 s2", "s1 s1^-1\tid", "s2\ts2^3"];
    let input: String = (0..40).map(|i| format!("{}\n", pairs[i % pairs.len()])).collect();
    let mut child = Command::new(env!("CARGO_BIN_EXE_tangle3"))
        .args(["batch", "--json"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(input.as_bytes()).unwrap();
    let out = child.wait_with_output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    let verdicts: Vec<String> = String::from_utf8(out.stdout)
        .unwrap()
        .lines()
        .map(|l| serde_json::from_str::<serde_json::Value>(l).unwrap()["verdict"].as_str().unwrap().to_string())
        .collect();
    let expected = ["NotIsotopic", "Isotopic", "Isotopic", "Isotopic", "NotIsotopic"];
    assert_eq!(verdicts.len(), 40);
    for (i, v) in verdicts.iter().enumerate() {
        assert_eq!(v, expected[i % 5], "line {i}");
    }
}
