//! End-to-end tests of the `knotepi` binary: output shapes, exit codes, and
//! the shipped atlas schema.

use std::io::Write as _;
use std::process::{Command, Output};

use serde_json::Value;

fn knotepi(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_knotepi"))
        .args(args)
        .output()
        .expect("the binary runs")
}

fn stdout_of(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8 stdout")
}

fn stderr_of(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).expect("utf-8 stderr")
}

fn exit_code(out: &Output) -> i32 {
    out.status.code().expect("no signal")
}

fn json_of(out: &Output) -> Value {
    serde_json::from_str(&stdout_of(out)).expect("stdout is JSON")
}

#[test]
fn invariants_json_example() {
    let out = knotepi(&["invariants", "tb:9,4", "--format", "json"]);
    assert_eq!(exit_code(&out), 0);
    let v = json_of(&out);
    assert_eq!(v["knot"], "tb:9,5");
    assert_eq!(v["kind"], "two_bridge");
    assert_eq!(v["determinant"], 9);
    assert_eq!(v["genus"], 1);
    assert_eq!(v["alexander"], "2 - 5*t + 2*t^2");
    assert_eq!(v["riley_degree"], 4);
    assert!(v.get("riley_polynomial").is_none());
    assert!(v.get("torus_alias").is_none());
}

#[test]
fn invariants_text_and_overlap() {
    let out = knotepi(&["invariants", "torus:3,5"]);
    assert_eq!(exit_code(&out), 0);
    let text = stdout_of(&out);
    assert!(text.contains("kind: torus"));
    assert!(text.contains("determinant: 1"));
    assert!(text.contains("genus: 4"));
    assert!(text.contains("crossing_number: 10"));
    assert!(!text.contains("riley_degree"));

    // the (2,3) torus knot is also tb:3,1; both literals agree on the alias
    let out = knotepi(&["invariants", "tb:3,1"]);
    let text = stdout_of(&out);
    assert!(text.contains("kind: both"));
    assert!(text.contains("torus_alias: torus:2,3"));
    assert!(text.contains("crossing_number: 3"));
    let out = knotepi(&["invariants", "torus:2,3", "--format", "json"]);
    let v = json_of(&out);
    assert_eq!(v["kind"], "both");
    assert_eq!(v["torus_alias"], "tb:3,1");
    assert_eq!(v["riley_degree"], 1);
}

#[test]
fn invariants_riley_flag() {
    let out = knotepi(&["invariants", "tb:7,3", "--riley", "--format", "json"]);
    let v = json_of(&out);
    assert_eq!(v["riley_polynomial"], "1 + 2*w + w^2 + w^3");
    // without the flag the polynomial is not computed
    let out = knotepi(&["invariants", "tb:7,3", "--format", "json"]);
    assert!(json_of(&out).get("riley_polynomial").is_none());
}

#[test]
fn order_torus_pairs() {
    let out = knotepi(&["order", "torus:2,15", "torus:3,5"]);
    assert_eq!(stdout_of(&out), "false\n");
    assert_eq!(exit_code(&out), 1);

    let out = knotepi(&["order", "torus:4,15", "torus:2,5"]);
    assert_eq!(stdout_of(&out), "true\n");
    assert_eq!(exit_code(&out), 0);

    let out = knotepi(&["order", "torus:3,5", "torus:3,5", "--format", "json"]);
    assert_eq!(exit_code(&out), 0);
    let v = json_of(&out);
    assert_eq!(v["result"], "true");
    assert_eq!(v["method"], "identical");
}

#[test]
fn order_two_bridge_pairs() {
    // bundled literature settles the big example
    let out = knotepi(&["order", "tb:175,81", "tb:7,3", "--format", "json"]);
    assert_eq!(exit_code(&out), 0);
    let v = json_of(&out);
    assert_eq!(v["result"], "true");
    assert_eq!(v["method"], "literature");
    assert_eq!(v["filters"]["determinant"], "pass");
    assert_eq!(v["filters"]["alexander"], "pass");

    // without it the same pair is honestly undetermined
    let dir = tempfile::tempdir().unwrap();
    let empty = dir.path().join("empty.txt");
    std::fs::write(&empty, "# nothing\n").unwrap();
    let out = knotepi(&[
        "order",
        "tb:175,81",
        "tb:7,3",
        "--known",
        empty.to_str().unwrap(),
    ]);
    assert_eq!(stdout_of(&out), "undetermined\n");
    assert_eq!(exit_code(&out), 0);

    // refuted by the alexander filter
    let out = knotepi(&["order", "tb:9,5", "tb:3,1", "--format", "json"]);
    assert_eq!(exit_code(&out), 1);
    let v = json_of(&out);
    assert_eq!(v["result"], "false");
    assert_eq!(v["filters"]["alexander"], "fail");

    // orbit members of the same knot
    let out = knotepi(&["order", "tb:7,5", "tb:7,3"]);
    assert_eq!(stdout_of(&out), "true\n");
    assert_eq!(exit_code(&out), 0);

    // a pure torus source over a non-torus 2-bridge target is out of scope
    let out = knotepi(&["order", "torus:3,5", "tb:5,3", "--format", "json"]);
    assert_eq!(exit_code(&out), 0);
    let v = json_of(&out);
    assert_eq!(v["result"], "undetermined");
    assert_eq!(v["method"], "out_of_scope");
}

#[test]
fn order_with_riley_advisory() {
    let out = knotepi(&["order", "tb:175,81", "tb:7,3", "--riley", "--format", "json"]);
    let v = json_of(&out);
    assert_eq!(v["filters"]["riley_advisory"], "consistent");
    let out = knotepi(&["order", "tb:175,81", "tb:7,3", "--format", "json"]);
    assert_eq!(json_of(&out)["filters"]["riley_advisory"], "skipped");
}

#[test]
fn certificate_verb() {
    let out = knotepi(&["certificate", "torus:4,15", "torus:2,5", "--format", "json"]);
    assert_eq!(exit_code(&out), 0);
    let v = json_of(&out);
    assert_eq!(v["matching"], "straight");
    assert_eq!(v["n1"], 2);
    assert_eq!(v["n2"], 3);
    assert_eq!(v["img_u"], "a^3");
    assert_eq!(v["img_v"], "b^2");
    let transcript = v["transcript"].as_array().unwrap();
    assert_eq!(transcript.len(), 4);
    assert!(transcript.iter().all(|c| c["pass"] == true));

    // 2-bridge aliases resolve to the torus pair
    let out = knotepi(&["certificate", "tb:15,1", "tb:3,1", "--format", "json"]);
    assert_eq!(exit_code(&out), 0);
    assert_eq!(json_of(&out)["source"], "torus:2,15");

    // incomparable pair: a negative mathematical answer
    let out = knotepi(&["certificate", "torus:2,15", "torus:3,5"]);
    assert_eq!(exit_code(&out), 1);
    assert!(stdout_of(&out).contains("no epimorphism"));

    // non-torus input: a usage error
    let out = knotepi(&["certificate", "tb:9,5", "torus:3,5"]);
    assert_eq!(exit_code(&out), 2);
    assert!(stderr_of(&out).contains("torus"));
}

#[test]
fn candidates_verb() {
    let out = knotepi(&["candidates", "tb:175,81"]);
    assert_eq!(exit_code(&out), 0);
    let text = stdout_of(&out);
    assert_eq!(text.lines().count(), 17);
    assert!(text.contains("tb:175,81 -> tb:7,3: determinant pass, alexander pass, riley skipped => candidate"));

    let out = knotepi(&["candidates", "tb:175,81", "--format", "json"]);
    let v = json_of(&out);
    assert_eq!(v.as_array().unwrap().len(), 17);

    // prime determinant: nothing below
    let out = knotepi(&["candidates", "tb:7,3"]);
    assert_eq!(exit_code(&out), 0);
    assert!(stdout_of(&out).contains("no proper-divisor targets"));

    // a (2, n) torus literal is enumerated through its 2-bridge form
    let out = knotepi(&["candidates", "torus:2,15", "--format", "json"]);
    assert_eq!(exit_code(&out), 0);
    let v = json_of(&out);
    assert_eq!(v[0]["source"], "tb:15,1");

    // a pure torus knot has no 2-bridge enumeration
    let out = knotepi(&["candidates", "torus:3,4"]);
    assert_eq!(exit_code(&out), 2);
}

#[test]
fn minimal_verb() {
    let out = knotepi(&["minimal", "tb:7,3"]);
    assert_eq!(stdout_of(&out), "p-minimal (prime determinant)\n");
    assert_eq!(exit_code(&out), 0);

    let out = knotepi(&["minimal", "tb:9,4"]);
    assert_eq!(stdout_of(&out), "p-minimal (genus one)\n");
    assert_eq!(exit_code(&out), 0);

    let out = knotepi(&["minimal", "tb:175,81", "--format", "json"]);
    assert_eq!(exit_code(&out), 1);
    let v = json_of(&out);
    assert_eq!(v["verdict"], "not_p_minimal");
    assert_eq!(v["reason"], "witness_target");
    assert_eq!(v["witness"], "tb:7,3");

    // the same knot without the bundled literature file
    let dir = tempfile::tempdir().unwrap();
    let empty = dir.path().join("empty.txt");
    std::fs::write(&empty, "").unwrap();
    let out = knotepi(&["minimal", "tb:175,81", "--known", empty.to_str().unwrap()]);
    assert_eq!(stdout_of(&out), "undetermined (surviving candidates)\n");
    assert_eq!(exit_code(&out), 0);

    let out = knotepi(&["minimal", "torus:3,4"]);
    assert_eq!(stdout_of(&out), "not p-minimal (witness torus:2,3)\n");
    assert_eq!(exit_code(&out), 1);

    let out = knotepi(&["minimal", "torus:3,5"]);
    assert_eq!(stdout_of(&out), "p-minimal (prime torus parameters)\n");
    assert_eq!(exit_code(&out), 0);
}

#[test]
fn known_file_errors_are_usage_errors() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.txt");
    let mut f = std::fs::File::create(&bad).unwrap();
    writeln!(f, "# fine").unwrap();
    writeln!(f, "tb:9,5 tb:3,1").unwrap();
    drop(f);
    let out = knotepi(&["minimal", "tb:175,81", "--known", bad.to_str().unwrap()]);
    assert_eq!(exit_code(&out), 2);
    assert!(stderr_of(&out).contains("line 2"));

    let out = knotepi(&["minimal", "tb:175,81", "--known", "/nonexistent/file.txt"]);
    assert_eq!(exit_code(&out), 2);
}

#[test]
fn atlas_verb_and_schema() {
    let dir = tempfile::tempdir().unwrap();
    let dot_path = dir.path().join("atlas.dot");

    let out = knotepi(&[
        "atlas",
        "--max-det",
        "9",
        "--max-torus",
        "15",
        "--format",
        "json",
        "--out",
        dot_path.to_str().unwrap(),
    ]);
    assert_eq!(exit_code(&out), 0);
    let v = json_of(&out);
    assert_eq!(v["nodes"].as_array().unwrap().len(), 9);
    assert_eq!(v["edges"].as_array().unwrap().len(), 3);

    // the emitted document validates against the shipped schema
    let schema: Value =
        serde_json::from_str(include_str!("../schemas/atlas.schema.json")).unwrap();
    let validator = jsonschema::validator_for(&schema).expect("schema compiles");
    let errors: Vec<String> = validator.iter_errors(&v).map(|e| e.to_string()).collect();
    assert!(errors.is_empty(), "schema violations: {errors:?}");

    // a larger atlas with a literature edge also validates
    let out = knotepi(&[
        "atlas", "--max-det", "175", "--max-torus", "6", "--format", "json",
    ]);
    let v = json_of(&out);
    assert!(validator.is_valid(&v));
    assert!(v["edges"]
        .as_array()
        .unwrap()
        .iter()
        .any(|e| e["status"] == "known_literature"));

    // the DOT file was written alongside
    let dot = std::fs::read_to_string(&dot_path).unwrap();
    assert!(dot.starts_with("digraph"));
    assert!(dot.contains("\"tb:9,1\" -> \"tb:3,1\";"));
    assert!(!dot.contains("\"tb:9,5\" ->"));

    // text format prints the summary and the dot path
    let out = knotepi(&[
        "atlas",
        "--max-det",
        "9",
        "--max-torus",
        "15",
        "--out",
        dot_path.to_str().unwrap(),
    ]);
    let text = stdout_of(&out);
    assert!(text.starts_with("atlas: 9 nodes, 3 edges"));
    assert!(text.contains("dot: "));
}

#[test]
fn atlas_rejects_bad_bounds() {
    let out = knotepi(&["atlas", "--max-det", "1", "--max-torus", "15"]);
    assert_eq!(exit_code(&out), 2);
    assert!(stderr_of(&out).contains("invalid atlas bounds"));
}

#[test]
fn usage_errors_exit_2() {
    // malformed knot literal
    let out = knotepi(&["invariants", "tb:9"]);
    assert_eq!(exit_code(&out), 2);
    // invalid parameters
    let out = knotepi(&["invariants", "tb:8,3"]);
    assert_eq!(exit_code(&out), 2);
    // unknown verb
    let out = knotepi(&["frobnicate"]);
    assert_eq!(exit_code(&out), 2);
    // unknown format value
    let out = knotepi(&["invariants", "tb:7,3", "--format", "yaml"]);
    assert_eq!(exit_code(&out), 2);
    // missing required atlas bounds
    let out = knotepi(&["atlas", "--max-det", "9"]);
    assert_eq!(exit_code(&out), 2);
}
