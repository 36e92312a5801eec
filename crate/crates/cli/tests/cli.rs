use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output, Stdio};

use serde_json::{json, Value};

fn kwc(args: &[&str], stdin: Option<&str>) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_kwc"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("spawn kwc");
    if let Some(s) = stdin {
        child.stdin.take().unwrap().write_all(s.as_bytes()).unwrap();
    }
    drop(child.stdin.take());
    child.wait_with_output().unwrap()
}

fn run_json(args: &[&str], stdin: Option<&str>) -> (bool, Value) {
    let out = kwc(args, stdin);
    let v: Value = serde_json::from_slice(&out.stdout).unwrap_or_else(|e| {
        panic!("{e}: {}", String::from_utf8_lossy(&out.stdout));
    });
    assert_eq!(v["schema_version"], 1);
    assert_eq!(out.status.success(), v["status"] == "ok");
    (out.status.success(), v)
}

fn stdout(args: &[&str]) -> String {
    String::from_utf8(kwc(args, None).stdout).unwrap()
}

fn temp_file(name: &str, contents: &Value) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("kwc-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let p = dir.join(name);
    std::fs::write(&p, contents.to_string()).unwrap();
    p
}

#[test]
fn rp2_pipeline_reports_z2() {
    let built = stdout(&["construct", "rp2"]);
    let (ok, v) = run_json(&["invariants", "-"], Some(&built));
    assert!(ok);
    assert_eq!(v["payload"]["h1"]["display"], "Z/2");
    assert_eq!(v["payload"]["euler_characteristic"], 1);
    assert_eq!(v["payload"]["freeness"], "non_free");
    assert_eq!(v["payload"]["presentation"]["simplified"], "< a1 | a1 a1 >");
}

#[test]
fn genus2_pipeline_validates() {
    let built = stdout(&["construct", "genus2"]);
    let (ok, v) = run_json(&["validate", "-"], Some(&built));
    assert!(ok);
    assert_eq!(v["payload"]["f_vector"], json!([10, 36, 24]));
    assert_eq!(v["payload"]["surface"]["genus"], 2);
}

#[test]
fn cyclic_four_bounds() {
    let (ok, v) = run_json(&["bounds", "cyclic:4"], None);
    assert!(ok);
    assert_eq!(v["payload"]["upper"], 12);
    let extras = v["payload"]["report"]["extras"].as_array().unwrap();
    let direct = extras.iter().find(|e| e["name"] == "direct_disk_upper").unwrap();
    assert_eq!(direct["value"]["integer"], 11);
}

#[test]
fn bounds_grammar() {
    for (spec, lower, upper) in [
        ("free:1", 3, 3),
        ("free-abelian:2", 4, 7),
        ("surface:+2", 9, 9),
        ("surface:-2", 8, 8),
        ("z2sum:2", 4, 13),
    ] {
        let (ok, v) = run_json(&["bounds", spec], None);
        assert!(ok, "{spec}");
        assert_eq!(v["payload"]["lower"], lower, "{spec}");
        assert_eq!(v["payload"]["upper"], upper, "{spec}");
    }
    let (ok, v) = run_json(&["bounds", "abelian:2,3"], None);
    assert!(!ok);
    assert!(!v["diagnostics"].as_array().unwrap().is_empty());
    let (ok, _) = run_json(&["bounds", "surface:2"], None);
    assert!(!ok);
}

#[test]
fn matrix_files() {
    let square = temp_file("square.json", &json!({"n": 4, "m": [[1, 2, 2], [2, 3, 2], [3, 4, 2], [1, 4, 2]]}));
    let arg = format!("raag:{}", square.display());
    let (ok, v) = run_json(&["construct", &arg], None);
    assert!(ok);
    assert_eq!(v["payload"]["metadata"]["f_vector"][0], 2 * 4 + 2 * 4 + 1);
    let (ok, v) = run_json(&["bounds", &format!("racg:{}", square.display())], None);
    assert!(ok);
    assert_eq!(v["payload"]["upper"], 5 * 4 + 2 * 4 + 1);
    let large = temp_file("large.json", &json!({"n": 3, "m": [[1, 2, 3], [2, 3, 0]]}));
    let (ok, v) = run_json(&["construct", &format!("artin-large:{}", large.display())], None);
    assert!(ok, "{v}");
    let built = v.to_string();
    let (ok, _) = run_json(&["validate", "-"], Some(&built));
    assert!(ok);
}

#[test]
fn one_relator_file() {
    let f = temp_file(
        "rel.json",
        &json!({"generators": 2, "relations": [{"w": "a1 a2", "v": "a2 a1", "m": 2}]}),
    );
    let built = stdout(&["construct", &format!("one-relator:{}", f.display())]);
    let (ok, v) = run_json(&["invariants", "-"], Some(&built));
    assert!(ok);
    assert_eq!(v["payload"]["h1"]["display"], "Z^2");
}

#[test]
fn glue_shifted_and_aligned() {
    let torus: Value = serde_json::from_str(&stdout(&["construct", "punctured-torus"])).unwrap();
    let x = temp_file("pt.json", &torus["payload"]["complex"]);
    let x = x.to_str().unwrap();
    let shifted = temp_file("shift.json", &json!({"z_vertices": 4, "into_x": [0, 1, 4, 3], "into_y": [1, 4, 3, 0]}));
    let (ok, v) = run_json(&["glue", x, x, shifted.to_str().unwrap()], None);
    assert!(ok, "{v}");
    assert_eq!(v["payload"]["f_vector"], json!([10, 36, 24]));
    let cycle = json!({"vertices": 4, "edges": [[0, 1], [0, 3], [1, 2], [2, 3]], "triangles": []});
    let aligned = temp_file(
        "aligned.json",
        &json!({"z_vertices": 4, "into_x": [0, 1, 4, 3], "into_y": [0, 1, 4, 3], "z": cycle}),
    );
    let (ok, v) = run_json(&["glue", x, x, aligned.to_str().unwrap()], None);
    assert!(!ok);
    assert_eq!(v["payload"]["kind"], "duplicate_edge");
}

#[test]
fn nerve_of_torus_is_torus() {
    let built = stdout(&["construct", "torus"]);
    let (ok, v) = run_json(&["nerve", "-"], Some(&built));
    assert!(ok);
    assert_eq!(v["payload"]["isomorphic_to_input"], true);
}

#[test]
fn search_is_deterministic_without_timing() {
    let args = ["search", "--property", "torsion", "--max-vertices", "6", "--no-timing"];
    let a = stdout(&args);
    let b = stdout(&[&args[..], &["--serial"]].concat());
    assert_eq!(a, b);
    let v: Value = serde_json::from_str(&a).unwrap();
    assert_eq!(v["payload"]["result"]["minimal_vertex_count"], 6);
    assert!(v["payload"].get("elapsed_ms").is_none());
    let (_, timed) = run_json(&["search", "--property", "b2>=1", "--max-vertices", "4"], None);
    assert!(timed["payload"]["elapsed_ms"].is_u64());
}

#[test]
fn search_cap_and_progress() {
    let (ok, v) = run_json(&["search", "--property", "torsion", "--max-vertices", "9"], None);
    assert!(!ok);
    assert!(v["diagnostics"][0].as_str().unwrap().contains("cap"));
    let out = kwc(
        &["search", "--property", "surface:chi=0,orientable", "--max-vertices", "7", "--report-every", "1", "--threads", "2"],
        None,
    );
    assert!(out.status.success());
    assert_eq!(String::from_utf8_lossy(&out.stderr).lines().count(), 7);
}

#[test]
fn emitted_complexes_round_trip() {
    for target in ["torus", "rp2", "moebius", "genus2", "bouquet:3", "cyclic:5", "telescope:2"] {
        let v: Value = serde_json::from_str(&stdout(&["construct", target])).unwrap();
        let text = v["payload"]["complex"].to_string();
        let k = kwcomplex::Complex2::from_json(&text).unwrap();
        assert_eq!(k.to_json(), text, "{target}");
    }
}

#[test]
fn usage_errors() {
    let out = kwc(&["frobnicate"], None);
    assert!(!out.status.success());
    assert!(String::from_utf8_lossy(&out.stderr).contains("Usage"));
    let (ok, v) = run_json(&["construct", "klein"], None);
    assert!(!ok);
    assert!(v["diagnostics"][0].as_str().unwrap().contains("klein"));
    let (ok, _) = run_json(&["validate", "-"], Some("{\"vertices\": 3, \"edges\": [], \"triangles\": [[0,1,2]]}"));
    assert!(!ok);
}
