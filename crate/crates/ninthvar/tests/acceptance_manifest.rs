use std::process::Command;

use serde_json::Value;

#[test]
fn acceptance_manifest_passes() {
    let manifest = concat!(env!("CARGO_MANIFEST_DIR"), "/manifests/acceptance.json");
    let out = Command::new(env!("CARGO_BIN_EXE_ninthvar")).args(["batch", manifest]).output().unwrap();
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    for r in v["reports"].as_array().unwrap() {
        assert_eq!(r["verdict"], "holds", "{r}");
    }
    assert_eq!(v["summary"]["passed"], v["summary"]["total"]);
    assert_eq!(out.status.code(), Some(0));
}
