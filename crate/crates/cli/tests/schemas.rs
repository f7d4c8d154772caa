//! Top-level keys of every shipped schema agree with what the code emits.

use std::path::PathBuf;
use std::process::Command;

use serde_json::Value;

fn schema(name: &str) -> Value {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../schemas").join(format!("{name}.schema.json"));
    serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap()
}

fn conforms(name: &str, v: &Value) {
    let s = schema(name);
    let props = s["properties"].as_object().unwrap();
    let obj = v.as_object().unwrap_or_else(|| panic!("{name}: not an object"));
    for key in s["required"].as_array().unwrap() {
        assert!(obj.contains_key(key.as_str().unwrap()), "{name}: missing {key}");
    }
    for key in obj.keys() {
        assert!(props.contains_key(key), "{name}: unexpected key {key}");
    }
}

fn mckay(args: &[&str]) -> Value {
    let out = Command::new(env!("CARGO_BIN_EXE_mckay")).args(args).output().unwrap();
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn command_outputs_match_schemas() {
    conforms("info_report", &mckay(&["info", "E6"]));
    conforms("chambers_report", &mckay(&["chambers", "A1", "1"]));
    conforms("tau_report", &mckay(&["tau", "A1", "2", "x^4, y"]));
    let rep = mckay(&["rep", "A2", "1", "x^3, y"]);
    conforms("framed_rep", &rep);
    let shriek = mckay(&["shriek", "A2", "u^2, v, w"]);
    conforms("shriek_report", &shriek);
    conforms("shriek_result", &shriek["result"]);
    conforms("a0_module", &shriek["input"]);
    conforms("framed_rep", &shriek["result"]["module"]);
    conforms("shriek_report", &mckay(&["shriek", "A2", "u^2, v, w", "--max-degree", "2"]));
}

#[test]
fn library_values_match_schemas() {
    let q = mckay_reps::framed_quiver("D4".parse().unwrap());
    conforms("quiver", &serde_json::to_value(&q).unwrap());
    conforms("a0_element", &serde_json::to_value(mckay_quiver::a0_identity()).unwrap());
    let outcomes = [mckay_cli::acceptance::criterion_9()];
    conforms("selftest_report", &mckay_cli::acceptance::report(0, &outcomes));
}
