use std::process::{Command, Output};

fn mckay(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_mckay")).args(args).output().expect("binary runs")
}

fn json(out: &Output) -> serde_json::Value {
    serde_json::from_slice(&out.stdout).expect("json output")
}

#[test]
fn info_reports_root_data() {
    let v = json(&mckay(&["info", "A2"]));
    assert_eq!(v["delta"], serde_json::json!([1, 1, 1]));
    assert_eq!(v["positive_roots"], 3);
    assert_eq!(v["group_order"], 3);
    assert_eq!(json(&mckay(&["info", "E8"]))["positive_roots"], 120);
    assert_eq!(mckay(&["info", "A0"]).status.code(), Some(2));
}

#[test]
fn chambers_and_guard() {
    let v = json(&mckay(&["chambers", "A1", "2"]));
    assert_eq!(v["hyperplanes"].as_array().unwrap().len(), 4);
    assert_eq!((v["chambers"].clone(), v["weyl_order"].clone(), v["chambers_in_F"].clone()), (8.into(), 4.into(), 2.into()));
    assert_eq!(v["walls"]["delta"], "divisorial");
    let one = json(&mckay(&["chambers", "A1", "1"]));
    assert_eq!(one["hyperplanes"].as_array().unwrap().len(), 2);
    assert!(one["note"].is_string());
    let guard = mckay(&["chambers", "E8", "3"]);
    assert_eq!(guard.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&guard.stderr).contains("guard"));
}

#[test]
fn tau_examples() {
    let v = json(&mckay(&["tau", "A2", "2", "x^6,y"]));
    assert_eq!(v["tau"], "u^2, v, w");
    assert_eq!(v["colength"], 2);
    assert_eq!(v["support"], serde_json::json!([{"point": ["0", "0", "0"], "multiplicity": 2}]));
    let v = json(&mckay(&["tau", "A1", "1", "x*y - 1, x^2 - 1, y^2 - 1"]));
    assert_eq!(v["support"][0]["point"], serde_json::json!(["1", "1", "1"]));
    assert_eq!(mckay(&["tau", "A2", "2", "x+y"]).status.code(), Some(2));
    assert_eq!(mckay(&["tau", "A2", "1", "x^6,y"]).status.code(), Some(2));
}

#[test]
fn stability_from_files() {
    let dir = std::env::temp_dir().join(format!("mckay-cli-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let orbit = mckay(&["rep", "A1", "1", "x*y - 1, x^2 - 1, y^2 - 1"]);
    assert!(orbit.status.success());
    let orbit_path = dir.join("orbit.json");
    std::fs::write(&orbit_path, &orbit.stdout).unwrap();
    let p = orbit_path.to_str().unwrap();
    let v = json(&mckay(&["stability", p, "--theta", "C+"]));
    assert_eq!((v["verdict"].as_str(), v["moment_map_zero"].as_bool()), (Some("stable"), Some(true)));
    assert_eq!(mckay(&["stability", p, "--theta", "theta:1,-1"]).status.code(), Some(2));

    let zero_path = dir.join("zero.json");
    std::fs::write(&zero_path, r#"{"type":"A1","n":1,"field":"F2","dims":[1,1,1],"mats":{}}"#).unwrap();
    let z = zero_path.to_str().unwrap();
    assert_eq!(json(&mckay(&["stability", z, "--theta", "theta0"]))["verdict"], "unsemistable");
    for path in [p, z] {
        assert_eq!(json(&mckay(&["stability", path, "--theta", "zero"]))["verdict"], "semistable");
    }
    assert_eq!(json(&mckay(&["stability", z, "--theta", "thetaI:0,1"]))["verdict"], "unsemistable");
    assert_eq!(mckay(&["stability", z, "--theta", "nonsense"]).status.code(), Some(2));
    std::fs::write(&zero_path, "{not json").unwrap();
    assert_eq!(mckay(&["stability", z]).status.code(), Some(2));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn shriek_examples() {
    let v = json(&mckay(&["shriek", "A1", "u - 1, v - 1, w - 1"]));
    assert_eq!(v["result"]["dims"], serde_json::json!([1, 1, 1]));
    assert_eq!((v["result"]["certified"].as_bool(), v["report"]["theta0_semistable"].as_bool()), (Some(true), Some(true)));
    let v = json(&mckay(&["shriek", "A2", "u^2, v, w"]));
    assert_eq!(v["result"]["dims"][1], 2);
    assert_eq!(v["passed"], true);
    let partial = mckay(&["shriek", "A2", "u^2, v, w", "--max-degree", "3"]);
    assert_eq!(partial.status.code(), Some(4));
    assert_eq!(json(&partial)["result"]["certified"], false);
    assert_eq!(mckay(&["shriek", "D4", "u"]).status.code(), Some(2));
}

#[test]
fn table_output_is_line_oriented() {
    let out = mckay(&["info", "A1", "--format", "table"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.lines().any(|l| l.starts_with("group_order") && l.ends_with('2')));
}

#[test]
fn output_is_byte_identical_across_runs() {
    for args in [&["chambers", "A2", "2"][..], &["tau", "A2", "2", "x^6,y"], &["shriek", "A2", "u^2,v,w"]] {
        assert_eq!(mckay(args).stdout, mckay(args).stdout);
    }
}
