use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn data(name: &str) -> String {
    let root = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../data");
    root.join(name).to_string_lossy().into_owned()
}

fn gradtilt(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gradtilt"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json_of(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn algebra_report_for_cubic_loop() {
    for file in ["cubic.json", "nakayama_cubic.json"] {
        let out = gradtilt(&["algebra", &data(file), "--json"]);
        assert_eq!(out.status.code(), Some(0));
        let v = json_of(&out);
        assert_eq!(v["dims"], serde_json::json!([1, 1, 1]));
        assert_eq!(v["selfinjective"], true);
        assert_eq!(v["symmetric"], true);
        assert_eq!(v["gorenstein"], 2);
        assert_eq!(v["gldim0"], 0);
    }
}

#[test]
fn algebra_report_for_trivial_extension() {
    let v = json_of(&gradtilt(&["algebra", &data("te_a2.json"), "--json"]));
    assert_eq!((v["dim"].as_u64(), v["gorenstein"].as_i64()), (Some(6), Some(1)));
}

#[test]
fn tilting_reports() {
    let v = json_of(&gradtilt(&["tilting", &data("cubic.json"), "--json"]));
    assert_eq!(v["gamma_dim"], 3);
    assert_eq!(v["beilinson"], "pass");
    assert_eq!(v["selfext"], "pass");

    let v = json_of(&gradtilt(&["tilting", &data("squares2.json"), "--json"]));
    assert_eq!(v["gamma_dim"], 4);
    assert_eq!(v["gamma_quiver"], serde_json::json!([[0, 0], [2, 0]]));

    let v = json_of(&gradtilt(&["tilting", &data("pi_a2.json"), "--json"]));
    assert_eq!(v["gamma_dim"], 1);

    assert_eq!(gradtilt(&["tilting", &data("ka2.json")]).status.code(), Some(2));
}

#[test]
fn verify_suites() {
    let out = gradtilt(&["verify", &data("cubic.json"), "--suite", "all"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json_of(&out);
    assert!(v["checks"].as_array().unwrap().iter().all(|c| c["status"] != "fail"));

    let out = gradtilt(&["verify", &data("ka2.json"), "--suite", "tilting"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json_of(&out);
    assert!(v["checks"].as_array().unwrap().iter().all(|c| c["status"] == "skipped"));

    let out = gradtilt(&["verify", &data("cubic.json"), "--suite", "nonsense"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn malformed_input_exits_2() {
    let dir = std::env::temp_dir().join(format!("gradtilt-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let broken = dir.join("broken.json");
    std::fs::write(&broken, "{\"quiver\": {\"vertices\": [\"1\"]").unwrap();
    let out = gradtilt(&["algebra", broken.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line"));

    let bad_rel = dir.join("bad_relation.json");
    std::fs::write(
        &bad_rel,
        r#"{"quiver": {"vertices": ["1"], "arrows": [{"name": "x", "from": "1", "to": "1", "degree": 1}]},
            "relations": [{"terms": [{"coeff": "1", "path": ["x", "z"]}]}]}"#,
    )
    .unwrap();
    let out = gradtilt(&["verify", bad_rel.to_str().unwrap(), "--suite", "all"]);
    assert_eq!(out.status.code(), Some(2));
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn arquiver_matches_golden_dot() {
    let out = gradtilt(&["arquiver", &data("cubic.json"), "--window", "-1..3"]);
    assert_eq!(out.status.code(), Some(0));
    let golden = include_str!("golden/cubic_window_m1_3.dot");
    assert_eq!(String::from_utf8(out.stdout).unwrap(), golden);
}

#[test]
fn arquiver_edge_cases() {
    let out = gradtilt(&["arquiver", &data("semisimple.json"), "--window", "0..2"]);
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "digraph AR {\n}\n");

    let out = gradtilt(&["arquiver", &data("cubic.json"), "--window", "0..0", "--json"]);
    let v = json_of(&out);
    assert!(v["vertices"].as_array().unwrap().iter().all(|x| x["boundary"] == true));

    assert_eq!(gradtilt(&["arquiver", &data("ka2.json"), "--window", "0..1"]).status.code(), Some(2));
    assert_eq!(gradtilt(&["arquiver", &data("cubic.json"), "--window", "3..1"]).status.code(), Some(2));
}

#[test]
fn arquiver_writes_out_file() {
    let path = std::env::temp_dir().join(format!("gradtilt-ar-{}.dot", std::process::id()));
    let out = gradtilt(&["arquiver", &data("cubic.json"), "--window", "-1..3", "--out", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let written = std::fs::read_to_string(&path).unwrap();
    assert_eq!(written, include_str!("golden/cubic_window_m1_3.dot"));
    std::fs::remove_file(&path).ok();
}

#[test]
fn output_is_deterministic() {
    for args in [
        vec!["verify", "squares2.json", "--suite", "all", "--seed", "7"],
        vec!["arquiver", "te_a2.json", "--window", "0..2", "--json"],
    ] {
        let args: Vec<String> = args
            .iter()
            .map(|a| if a.ends_with(".json") { data(a) } else { a.to_string() })
            .collect();
        let args: Vec<&str> = args.iter().map(String::as_str).collect();
        let first = gradtilt(&args);
        let second = gradtilt(&args);
        assert_eq!(first.status.code(), Some(0));
        assert_eq!(first.stdout, second.stdout);
    }
}

#[test]
fn field_override() {
    let v = json_of(&gradtilt(&["algebra", &data("cubic.json"), "--field", "p=3", "--json"]));
    assert_eq!(v["gorenstein"], 2);
    assert_eq!(gradtilt(&["algebra", &data("cubic.json"), "--field", "p=4"]).status.code(), Some(2));
}
