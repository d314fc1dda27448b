use std::process::{Command, Output};

use serde_json::Value;

fn hnk(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hnk")).args(args).env_remove("HNK_SIZE_CAP").output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn aut_agrees_at_5_3() {
    let o = hnk(&["aut", "--n", "5", "--k", "3", "--brute-force"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("predicted  23040"), "{out}");
    assert!(out.contains("oracle     23040"), "{out}");
    assert!(out.contains("AGREE"), "{out}");
}

#[test]
fn aut_json_shape() {
    let o = hnk(&["aut", "--n", "4", "--k", "1", "--brute-force", "--json"]);
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    for key in ["n", "k", "component", "oracle_order", "predicted_order", "agrees", "stabilizer_order", "elements_outside_known_group"] {
        assert!(v.get(key).is_some(), "missing {key}");
    }
    assert_eq!(v["oracle_order"], "384");
    assert_eq!(v["agrees"], true);
}

#[test]
fn open_disagreement_only_fails_when_strict() {
    assert_eq!(hnk(&["aut", "--n", "3", "--k", "2", "--brute-force"]).status.code(), Some(0));
    let o = hnk(&["aut", "--n", "3", "--k", "2", "--brute-force", "--strict"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("oracle     1152"));
}

#[test]
fn graph_json_for_the_cube() {
    let o = hnk(&["graph", "--n", "3", "--k", "1", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["vertices"].as_array().unwrap().len(), 8);
    assert_eq!(v["edges"].as_array().unwrap().len(), 12);
}

#[test]
fn graph_dot_for_a_component() {
    let o = hnk(&["graph", "--n", "4", "--k", "2", "--component", "even"]);
    let out = stdout(&o);
    assert!(out.starts_with("graph H_4_2_even {"));
    assert_eq!(out.matches(" -- ").count(), 24);
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        &["graph", "--n", "3", "--k", "1", "--component", "odd"][..],
        &["graph", "--n", "3", "--k", "4"],
        &["seq", "--family", "nope", "--k", "3"],
        &["seq", "--family", "u-general", "--k", "3"],
        &["frobnicate"],
        &["geodesic", "--n", "4", "--k", "1"],
    ] {
        assert_eq!(hnk(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn size_cap_can_only_be_lowered() {
    let o = Command::new(env!("CARGO_BIN_EXE_hnk"))
        .args(["aut", "--n", "5", "--k", "3", "--brute-force"])
        .env("HNK_SIZE_CAP", "16")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("cap of 16"));
    let o = Command::new(env!("CARGO_BIN_EXE_hnk"))
        .args(["aut", "--n", "9", "--k", "3", "--brute-force"])
        .env("HNK_SIZE_CAP", "100000")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("cap of 256"));
}

#[test]
fn geodesic_full_json() {
    let o = hnk(&["geodesic", "--n", "6", "--k", "3", "--full", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["s_max_transitive"], 1);
    assert_eq!(v["classification"], "not-2-geodesic-transitive");
    assert_eq!(v["agrees_with_claim"], true);
}

#[test]
fn geodesic_single_s() {
    let o = hnk(&["geodesic", "--n", "6", "--k", "3", "--s", "2"]);
    let out = stdout(&o);
    assert!(out.contains("2 orbits"), "{out}");
    assert!(out.contains("2-geodesic-transitive no"), "{out}");
}

#[test]
fn seq_table() {
    let o = hnk(&["seq", "--family", "u-2km1", "--k", "3"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "u-2km1 n=5 k=3\n1  6\n2  6\nshape holds over 1 checked steps\nmirror symmetry yes\n");
    let o = hnk(&["seq", "--family", "v-general", "--k", "5", "--n", "12", "--format", "json"]);
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["values"][0], "420");
    assert_eq!(v["index_start"], 0);
}

#[test]
fn verify_is_clean_and_byte_stable() {
    let a = hnk(&["verify", "--max-n", "5", "--samples", "200"]);
    assert_eq!(a.status.code(), Some(0), "{}", String::from_utf8_lossy(&a.stderr));
    let v: Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(v["summary"]["refuted"], 0);
    assert!(v["summary"]["verified"].as_u64().unwrap() > 100);
    let b = hnk(&["verify", "--max-n", "5", "--samples", "200"]);
    assert_eq!(a.stdout, b.stdout);
    let strict = hnk(&["verify", "--max-n", "3", "--samples", "20", "--strict"]);
    assert_eq!(strict.status.code(), Some(1));
}

#[test]
fn verify_writes_report_file() {
    let dir = std::env::temp_dir().join(format!("hnk-cli-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("report.json");
    let o = hnk(&["verify", "--max-n", "3", "--samples", "20", "--out", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("verified"));
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["max_n"], 3);
    std::fs::remove_dir_all(&dir).unwrap();
}
