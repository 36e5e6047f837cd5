use std::path::Path;
use std::process::Command;

use ninthvar::cli::execute;
use ninthvar::json::poly_from_json;
use ninthvar::text::parse_poly;
use ninthvar_core::ring::{Poly, VarId};
use serde_json::Value;

const BIN: &str = env!("CARGO_BIN_EXE_ninthvar");

struct Run {
    code: i32,
    stdout: String,
    stderr: String,
}

fn bin(args: &[&str]) -> Run {
    let out = Command::new(BIN).args(args).output().expect("binary runs");
    Run {
        code: out.status.code().expect("exit code"),
        stdout: String::from_utf8(out.stdout).unwrap(),
        stderr: String::from_utf8(out.stderr).unwrap(),
    }
}

fn json(s: &str) -> Value {
    serde_json::from_str(s).unwrap_or_else(|e| panic!("not JSON ({e}): {s}"))
}

fn run(args: &[&str]) -> ninthvar::cli::Outcome {
    execute(std::iter::once("ninthvar").chain(args.iter().copied()))
}

#[test]
fn compute_type_c_one_box() {
    let r = bin(&["compute", "--family", "c", "--lambda", "1", "--n", "1", "--sequence", "factorial", "--c", "symbolic"]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    let v = json(&r.stdout);
    assert_eq!(v["family"], "c");
    assert_eq!(v["n"], 1);
    assert_eq!(v["sequence"]["kind"], "factorial");
    let x = VarId::x(1);
    let expected = &(&Poly::var(x) + &Poly::var_pow(x, -1)) - &Poly::var(VarId::c(0));
    assert_eq!(poly_from_json(&v["value"]).unwrap(), expected);
}

#[test]
fn check_cauchy_holds() {
    let r = bin(&["check", "cauchy", "--n", "1", "--truncate", "3", "--sequence", "factorial"]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    let v = json(&r.stdout);
    assert_eq!(v["identity_id"], "cauchy");
    assert_eq!(v["verdict"], "holds");
    assert_eq!(v["difference"], Value::Array(vec![]));
    assert!(v.get("elapsed_ms").is_none());
}

#[test]
fn failing_check_exits_one_with_witness() {
    let r = bin(&["check", "jt-c-no-half", "--lambda", "2,1", "--n", "2", "--format", "text"]);
    assert_eq!(r.code, 1);
    assert!(r.stdout.contains("fails"), "{}", r.stdout);
    assert!(r.stdout.contains("difference"), "{}", r.stdout);
}

#[test]
fn list_identities_is_the_catalogue() {
    let r = bin(&["list-identities"]);
    assert_eq!(r.code, 0);
    let ids: Vec<String> = json(&r.stdout).as_array().unwrap().iter().map(|e| e["id"].as_str().unwrap().to_string()).collect();
    assert_eq!(ids, ninthvar_core::registry::ids());
    assert_eq!(bin(&["list-identities"]).stdout, r.stdout);
}

#[test]
fn repeated_runs_are_byte_identical() {
    let cases: [&[&str]; 4] = [
        &["compute", "--family", "b", "--lambda", "2,1", "--n", "2"],
        &["compute", "--family", "a", "--lambda", "1,0,-1", "--format", "text"],
        &["check", "littlewood", "--family", "c", "--n", "1", "--truncate", "3"],
        &["gt", "--lambda", "2,0,-1"],
    ];
    for args in cases {
        let a = bin(args);
        let b = bin(args);
        assert_eq!(a.code, 0, "{args:?}: {}", a.stderr);
        assert_eq!(a.stdout, b.stdout, "{args:?}");
    }
}

#[test]
fn text_and_json_encode_the_same_value() {
    for family in ["a", "c", "b", "d"] {
        let base = ["compute", "--family", family, "--lambda", "2,1", "--n", "2"];
        let j = run(&base);
        let t = run(&[&base[..], &["--format", "text"]].concat());
        assert_eq!((j.code, t.code), (0, 0));
        let from_json = poly_from_json(&json(&j.stdout)["value"]).unwrap();
        assert_eq!(parse_poly(t.stdout.trim()).unwrap(), from_json, "{family}");
    }
}

#[test]
fn ninth_commands() {
    let r = bin(&["ninth", "sp", "--lambda", "2,1", "--n", "2", "--emit", "json"]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    let v = json(&r.stdout);
    assert_eq!(v["character"], "sp");
    let sp = poly_from_json(&v["value"]).unwrap();
    assert_eq!(sp, ninthvar_core::ninth::sp(&ninthvar_core::partition::Partition::new(&[2, 1]).unwrap(), 2, None).unwrap());
    assert!(!sp.is_zero());
    let nk = bin(&["ninth", "check-nk", "--family", "c", "--lambda", "2,1", "--n", "2", "--m", "2"]);
    assert_eq!(nk.code, 0, "{}", nk.stderr);
    assert_eq!(json(&nk.stdout)["verdict"], "holds");
    let inv = run(&["ninth", "check-inverse", "--n", "2", "--m", "3"]);
    assert_eq!(inv.code, 0, "{}", inv.stderr);
    let skew = run(&["ninth", "s", "--lambda", "2,1", "--mu", "1", "--n", "2", "--format", "text"]);
    assert_eq!(skew.code, 0, "{}", skew.stderr);
    assert!(parse_poly(skew.stdout.trim()).is_ok());
}

#[test]
fn usage_errors_exit_two_with_a_remedy() {
    let r = bin(&["check", "no-such-identity"]);
    assert_eq!(r.code, 2);
    for id in ninthvar_core::registry::ids() {
        assert!(r.stderr.contains(&id), "{id} missing from {}", r.stderr);
    }
    assert!(r.stderr.contains("hint:"));
    assert!(r.stdout.is_empty());

    let cases: [&[&str]; 7] = [
        &["compute", "--lambda", "1"],
        &["compute", "--family", "z", "--lambda", "1"],
        &["compute", "--family", "c", "--lambda", "1,-1"],
        &["compute", "--family", "c", "--lambda", "1", "--sequence", "bogus"],
        &["check", "jt", "--family", "c", "--n", "2"],
        &["check", "littlewood", "--family", "a", "--n", "1"],
        &["frobnicate"],
    ];
    for args in cases {
        let o = run(args);
        assert_eq!(o.code, 2, "{args:?}");
        assert!(!o.stderr.is_empty(), "{args:?}");
        assert!(o.stdout.is_empty(), "{args:?}");
    }
}

#[test]
fn sequence_and_c_files() {
    let dir = tempfile::tempdir().unwrap();
    let c_path = dir.path().join("c.json");
    std::fs::write(&c_path, r#"{"kind": "explicit", "values": {"0": "1", "1": "2"}}"#).unwrap();
    let c_arg = format!("file:{}", c_path.display());
    let r = run(&["compute", "--family", "a", "--lambda", "1", "--c", &c_arg, "--format", "text"]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    assert_eq!(parse_poly(r.stdout.trim()).unwrap(), &Poly::var(VarId::x(1)) - &Poly::int(1));

    let seq_path = dir.path().join("f.json");
    std::fs::write(&seq_path, r#"{"kind": "factorial", "c": {"kind": "zeros"}}"#).unwrap();
    let seq_arg = format!("file:{}", seq_path.display());
    let r = run(&["compute", "--family", "a", "--lambda", "2", "--sequence", &seq_arg, "--format", "text"]);
    assert_eq!(r.stdout.trim(), "x1^2");
    let both = run(&["compute", "--family", "a", "--lambda", "2", "--sequence", &seq_arg, "--c", "zeros"]);
    assert_eq!(both.code, 2);

    let custom = dir.path().join("custom.json");
    std::fs::write(&custom, r#"{"kind": "custom", "coeffs": {"0": ["1"], "1": ["1", "1"], "2": ["0", "0", "1"], "3": ["2", "0", "-1/2", "1"]}}"#).unwrap();
    let custom_arg = format!("file:{}", custom.display());
    let r = run(&["compute", "--family", "a", "--lambda", "1", "--n", "1", "--sequence", &custom_arg, "--format", "text"]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    assert_eq!(parse_poly(r.stdout.trim()).unwrap(), &Poly::var(VarId::x(1)) + &Poly::int(1));
    let check = run(&["check", "cauchy", "--n", "1", "--truncate", "2", "--sequence", &custom_arg]);
    assert_eq!(check.code, 0, "{}", check.stdout);

    let missing = run(&["compute", "--family", "a", "--lambda", "1", "--c", "file:/definitely/not/here.json"]);
    assert_eq!(missing.code, 2);
}

fn write_manifest(dir: &Path, body: &str) -> String {
    let p = dir.join("manifest.json");
    std::fs::write(&p, body).unwrap();
    p.display().to_string()
}

#[test]
fn empty_batch() {
    let dir = tempfile::tempdir().unwrap();
    let m = write_manifest(dir.path(), "[]");
    let r = bin(&["batch", &m]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    let v = json(&r.stdout);
    assert_eq!(v["summary"]["passed"], 0);
    assert_eq!(v["summary"]["total"], 0);
    assert_eq!(run(&["batch", &m, "--format", "text"]).stdout, "0/0 passed\n");
}

#[test]
fn batch_with_a_failing_item() {
    let dir = tempfile::tempdir().unwrap();
    let m = write_manifest(
        dir.path(),
        r#"[{"identity": "cauchy", "n": 1, "truncate": 3},
            {"identity": "jt-c-no-half", "lambda": [1], "n": 1},
            {"identity": "jt", "family": "c", "lambda": [2, 1], "n": 2, "c": "zeros"}]"#,
    );
    let r = bin(&["batch", &m, "--workers", "2"]);
    assert_eq!(r.code, 1);
    let v = json(&r.stdout);
    let reports = v["reports"].as_array().unwrap();
    let ids: Vec<&str> = reports.iter().map(|r| r["identity_id"].as_str().unwrap()).collect();
    assert_eq!(ids, ["cauchy", "jt-c-no-half", "jt"]);
    assert_eq!(reports[1]["verdict"], "fails");
    assert!(reports[1]["term_count"].as_u64().unwrap() > 0);
    assert!(!reports[1]["difference"].as_array().unwrap().is_empty());
    assert_eq!(v["summary"]["passed"], 2);
    assert_eq!(v["summary"]["total"], 3);
    // the pool size does not change the output
    assert_eq!(bin(&["batch", &m, "--workers", "1"]).stdout, r.stdout);
}

#[test]
fn batch_item_errors_do_not_stop_the_batch() {
    let dir = tempfile::tempdir().unwrap();
    let m = write_manifest(
        dir.path(),
        r#"[{"identity": "nonsense"},
            {"identity": "jt", "family": "c", "n": 2},
            {"identity": "dual-cauchy", "family": "a", "n": 1, "m": 1}]"#,
    );
    let r = run(&["batch", &m]);
    assert_eq!(r.code, 2);
    let v = json(&r.stdout);
    let reports = v["reports"].as_array().unwrap();
    assert!(reports[0]["error"].as_str().unwrap().contains("known identities"));
    assert!(reports[1]["error"].as_str().unwrap().contains("--lambda"));
    assert_eq!(reports[2]["verdict"], "holds");
    assert_eq!(v["summary"]["errors"], 2);

    let bad = write_manifest(dir.path(), r#"{"identity": "cauchy"}"#);
    assert_eq!(run(&["batch", &bad]).code, 2);
    let unknown_field = write_manifest(dir.path(), r#"[{"identity": "cauchy", "n": 1, "colour": "red"}]"#);
    assert_eq!(run(&["batch", &unknown_field]).code, 2);
    assert_eq!(run(&["batch", &m, "--workers", "0"]).code, 2);
}

#[test]
fn dual_prints_the_closed_form() {
    let r = run(&["dual", "--truncate", "3", "--c", "zeros", "--format", "text"]);
    assert_eq!(r.stdout, "f̂_0 = 1\nf̂_1 = u1\nf̂_2 = u1^2\nf̂_3 = u1^3\n");
    let d = run(&["dual", "--truncate", "2", "--double"]);
    assert_eq!(d.code, 0);
    assert_eq!(json(&d.stdout)["double_dual"].as_array().unwrap().len(), 3);
}

#[test]
fn help_and_version_exit_zero() {
    assert_eq!(run(&["--help"]).code, 0);
    assert_eq!(run(&["--version"]).code, 0);
    assert!(run(&["help", "check"]).stdout.contains("--truncate"));
}
