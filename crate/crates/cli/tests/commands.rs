mod common;

use common::{code, json, pecomb, stdout};
use serde_json::json;

#[test]
fn act_examples() {
    assert_eq!(
        json(&["act", "--rep", "xi", "--word", "0,1,0", "--partition", ""]),
        json!([{"partition": [1], "coeff": 1}])
    );
    assert_eq!(
        json(&["act", "--rep", "xi", "--word", "4,4", "--partition", "3,1"]),
        json!([])
    );
    assert_eq!(
        json(&[
            "act",
            "--rep",
            "xi-prime",
            "--word",
            "2",
            "--partition",
            "2,1"
        ]),
        json!([{"partition": [1, 1], "coeff": 1}, {"partition": [3, 1], "coeff": 1}])
    );
    assert_eq!(
        json(&["act", "--rep", "xi", "--word", "", "--partition", "2"]),
        json!([{"partition": [2], "coeff": 1}])
    );
}

#[test]
fn act_takes_negative_words_and_vectors() {
    let v = r#"[{"partition":[1],"coeff":2},{"partition":[2],"coeff":-1}]"#;
    assert_eq!(
        json(&["act", "--rep", "xi", "--word", "1", "--vector", v]),
        json!([{"partition": [2], "coeff": 2}])
    );
    assert_eq!(
        json(&["act", "--rep", "xi", "--word", "-1", "--partition", "1"]),
        json!([{"partition": [1, 1], "coeff": 1}])
    );
}

#[test]
fn key_order_is_canonical() {
    let out = stdout(&pecomb(&[
        "act",
        "--rep",
        "xi",
        "--word",
        "0",
        "--partition",
        "",
    ]));
    assert_eq!(out, "[{\"partition\":[1],\"coeff\":1}]\n");
    let out = stdout(&pecomb(&["cell", "--partition", "2"]));
    assert_eq!(out, "{\"partition\":[2],\"cell\":1,\"block\":0,\"ideals\":{\"0\":true,\"1\":true,\"2\":false}}\n");
}

#[test]
fn tensor_rows() {
    assert_eq!(
        json(&["tensor", "--partition", ""]),
        json!([{"q": 0, "partition": [1]}])
    );
    assert_eq!(
        json(&["tensor", "--partition", "1"]),
        json!([{"q": 1, "partition": [2]}, {"q": -1, "partition": [1, 1]}])
    );
    let rows = json(&["tensor", "--partition", "3,3"]);
    assert!(rows
        .as_array()
        .unwrap()
        .contains(&json!({"q": -1, "partition": [2, 1]})));
}

#[test]
fn weights() {
    assert_eq!(
        json(&["weight", "--partition", "2,2,1,1"]),
        json!({"n": 2, "omega": [-2, -4]})
    );
    assert_eq!(
        json(&["weight", "--d-set", "-4,-1"]),
        json!({"partition": [2, 2, 1, 1], "weight": {"n": 2, "omega": [-2, -4]}})
    );
    let detail = json(&["weight", "--partition", "2,2,1,1", "--detail"]);
    assert_eq!(
        detail["marking"],
        json!({"boxes": [[4, 1], [2, 2]], "dTilde": [-3, 0], "d": [-4, -1]})
    );
    assert_eq!(detail["closedFormula"], json!({"n": 2, "omega": [-2, -4]}));
    assert_eq!(
        json(&["weight", "--d-set", ""]),
        json!({"partition": [], "weight": {"n": 0, "omega": []}})
    );
}

#[test]
fn summands_and_normal_forms() {
    let rows = json(&["summands", "--n", "1", "--r", "3"]);
    assert_eq!(
        rows[1],
        json!({"partition": [2, 1], "appears": false, "projective": false})
    );
    assert_eq!(json(&["normalize", "--word", "0,1,0"]), json!([[0, 0]]));
    assert_eq!(json(&["normalize", "--word", "1,1"]), json!(null));
    assert_eq!(
        json(&["normalize", "--word", "-2,0"]),
        json!([[0, 0], [-2, -2]])
    );
}

#[test]
fn witnesses() {
    let out = json(&["witness", "--word", "1,2,3,0,1"]);
    assert!(!out["image"].as_array().unwrap().is_empty());
    let x = r#"[{"word":[[0,0]],"coeff":1},{"word":[[1,1]],"coeff":-1}]"#;
    let out = json(&["witness", "--element", x]);
    assert!(!out["image"].as_array().unwrap().is_empty());
}

#[test]
fn exit_codes() {
    assert_eq!(
        code(&["act", "--rep", "xi", "--word", "a", "--partition", "1"]),
        2
    );
    assert_eq!(
        code(&["act", "--rep", "xi", "--word", "1", "--partition", "1,2"]),
        2
    );
    assert_eq!(code(&["verify", "--suite", "nope"]), 2);
    assert_eq!(code(&["witness", "--word", "1,1"]), 3);
    assert_eq!(code(&["witness", "--element", "[]"]), 3);
    assert_eq!(code(&["weight", "--d-set", "1,1"]), 3);
    assert_eq!(code(&["normalize", "--word", "0,1,2,3,4,5,6,7,8,9,10"]), 3);
    assert_eq!(code(&["verify", "--suite", "marking", "--window", "7"]), 3);
    assert_eq!(
        code(&["verify", "--suite", "marking", "--max-size", "6"]),
        0
    );
}

#[test]
fn verify_reports_to_stdout_and_timing_to_stderr() {
    let out = pecomb(&["verify", "--suite", "ideals", "--max-size", "6"]);
    assert!(out.status.success());
    let report: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(report["suite"], "ideals");
    assert_eq!(report["failures"], json!([]));
    assert!(String::from_utf8_lossy(&out.stderr).contains("checks"));
}

#[test]
fn cache_round_trip() {
    let dir = std::env::temp_dir().join(format!("pecomb-cache-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("rows.json");
    let p = path.to_str().unwrap();
    let first = json(&["tensor", "--partition", "3,3", "--cache", p]);
    let text = std::fs::read_to_string(&path).unwrap();
    assert!(text.starts_with("{\"version\":\"pecomb-cache/1\""));
    assert!(text.contains("tensor:3,3"));
    let second = json(&["tensor", "--partition", "3,3", "--cache", p]);
    assert_eq!(first, second);

    // a corrupted entry is caught by the debug-build recomputation
    std::fs::write(&path, text.replace("\"q\":-1", "\"q\":-7")).unwrap();
    if cfg!(debug_assertions) {
        assert_eq!(code(&["tensor", "--partition", "3,3", "--cache", p]), 3);
    }

    // files from another version are ignored
    std::fs::write(&path, r#"{"version":"old","entries":{}}"#).unwrap();
    assert_eq!(
        json(&["tensor", "--partition", "1", "--cache", p]),
        json!([{"q": 1, "partition": [2]}, {"q": -1, "partition": [1, 1]}])
    );
    std::fs::remove_dir_all(&dir).unwrap();
}
