use std::fs;
use std::io::Write;
use std::process::{Command, Output, Stdio};

use oddcycle::extremal_graph;
use oddcycle::graph::is_isomorphic;
use serde_json::Value;

fn oddcycle(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_oddcycle"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = oddcycle(args);
    assert!(
        out.status.success(),
        "{args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn json(args: &[&str]) -> Value {
    let mut full = vec!["--format", "json"];
    full.extend_from_slice(args);
    serde_json::from_str(&stdout(&full)).unwrap()
}

fn strip_timing(v: &mut Value) {
    match v {
        Value::Object(map) => {
            map.remove("elapsed_ms");
            map.values_mut().for_each(strip_timing);
        }
        Value::Array(items) => items.iter_mut().for_each(strip_timing),
        _ => {}
    }
}

#[test]
fn poly_examples() {
    for (g, expected) in [("Bw", "x^3 - 3x"), ("F 5 6", "x^5 - 6x^3 + 5x"), ("@", "x")] {
        let v = json(&["poly", g]);
        assert_eq!(v["schema"], 1);
        assert_eq!(v["results"][0]["polynomial"], expected, "{g}");
        assert!(stdout(&["poly", g]).contains(expected));
    }
    let v = json(&["poly", "F 5 6"]);
    assert_eq!(v["results"][0]["profile"], serde_json::json!(["1", "6", "5"]));
}

#[test]
fn poly_reads_edge_list_files_and_unions() {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    writeln!(f, "# triangle\nn 3\n0 1\n1 2\n0 2").unwrap();
    let arg = format!("@{}", f.path().display());
    assert_eq!(json(&["poly", &arg])["results"][0]["polynomial"], "x^3 - 3x");
    assert_eq!(json(&["poly", "K1 2 + E 1"])["results"][0]["polynomial"], "x^4 - 2x^2");
}

#[test]
fn batch_mode_reads_graph6_lines_from_stdin() {
    let mut child = Command::new(env!("CARGO_BIN_EXE_oddcycle"))
        .args(["--format", "json", "poly"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(b"Bw\n\nA_\n@\n").unwrap();
    let out = child.wait_with_output().unwrap();
    assert!(out.status.success());
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    let polys: Vec<&str> = v["results"]
        .as_array()
        .unwrap()
        .iter()
        .map(|r| r["polynomial"].as_str().unwrap())
        .collect();
    assert_eq!(polys, ["x^3 - 3x", "x^2 - 1", "x"]);
}

#[test]
fn maxroot_examples() {
    assert!(stdout(&["maxroot", "K 2"]).contains("1.000000"));
    assert_eq!(json(&["maxroot", "K 2"])["results"][0]["value"], "1.000000");
    let v = json(&["--digits", "7", "maxroot", "F 5 6", "K1 2"]);
    assert_eq!(v["results"][0]["value"], "2.2360680");
    assert_eq!(v["results"][1]["value"], "1.4142136");
    assert!(v["results"][0]["root"]["lo"].is_string());
}

#[test]
fn skew_examples() {
    let tri = json(&["skew", "Bw", "--all"]);
    let rows = tri["orientations"].as_array().unwrap();
    assert_eq!(rows.len(), 8);
    assert!(rows
        .iter()
        .all(|r| r["polynomial"] == "x^3 + 3x" && r["identity"] == true));
    assert_eq!(tri["distinct_polynomials"], 1);

    let c4 = json(&["skew", "C 4", "--all"]);
    assert!(c4["distinct_polynomials"].as_u64().unwrap() >= 2);
    assert_eq!(c4["identity_holds_for_all"], false);
    assert_eq!(c4["max_radius"], "2.000000");

    let k2 = json(&["skew", "A_", "--mask", "0"]);
    assert_eq!(k2["orientations"][0]["polynomial"], "x^2 + 1");
}

fn isomorphic_to(graph6: &Value, expected: oddcycle::Graph) -> bool {
    let g = oddcycle::Graph::from_graph6(graph6.as_str().unwrap()).unwrap();
    is_isomorphic(&g, &expected).unwrap()
}

#[test]
fn reduce_examples() {
    let c5 = json(&["reduce", "C 5"]);
    assert!(!c5["trace"]["steps"].as_array().unwrap().is_empty());
    assert!(isomorphic_to(&c5["trace"]["final"], extremal_graph(5, 5).unwrap()));

    let f67 = json(&["reduce", "F 6 7"]);
    assert!(f67["trace"]["steps"].as_array().unwrap().is_empty());

    let p5 = json(&["reduce", "P 5"]);
    assert!(isomorphic_to(&p5["trace"]["final"], oddcycle::Graph::star(4).unwrap()));
}

#[test]
fn verify_examples_pass() {
    for args in [
        ["verify", "4.2", "--max-n", "6"],
        ["verify", "1.5", "--max-n", "5"],
        ["verify", "identity", "--max-n", "5"],
    ] {
        let out = oddcycle(&args);
        assert_eq!(out.status.code(), Some(0), "{args:?}");
        assert!(String::from_utf8_lossy(&out.stdout).starts_with("PASS"), "{args:?}");
    }
    let v = json(&["verify", "identity", "--max-n", "5"]);
    let notes = v["reports"][0]["notes"].to_string();
    assert!(notes.contains("graphs with an even cycle: 486"), "{notes}");
}

#[test]
fn dominance_examples() {
    let v = json(&["dominance", "K1 3", "K1 2 + E 1"]);
    assert_eq!(v["verdict"], "StrictlyDominates");
    assert_eq!(v["difference"], "x^2");
    assert_eq!(json(&["dominance", "D{c", "D{c"])["verdict"], "EqualPolynomials");
    assert_eq!(json(&["dominance", "K 3 + E 1", "K1 3"])["verdict"], "EqualPolynomials");
}

#[test]
fn out_flag_writes_the_report() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let p = path.to_str().unwrap();
    assert!(stdout(&["--format", "json", "--out", p, "poly", "Bw"]).is_empty());
    let v: Value = serde_json::from_str(&fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["command"], "poly");
}

#[test]
fn json_is_deterministic_and_thread_count_independent() {
    let run = |threads: &str| {
        let mut v = json(&["--threads", threads, "verify", "all", "--max-n", "5"]);
        strip_timing(&mut v);
        v
    };
    let one = run("1");
    assert_eq!(one["passed"], true);
    assert_eq!(one, run("1"));
    assert_eq!(one, run("3"));
}

#[test]
fn exit_code_two_on_usage_and_parse_errors() {
    for args in [
        vec!["poly", "not graph6 !"],
        vec!["poly", "C 2"],
        vec!["poly", "@/nonexistent/file"],
        vec!["verify", "9.9"],
        vec!["skew", "Bw"],
        vec!["skew", "Bw", "--mask", "zz"],
        vec!["--threads", "0", "poly", "Bw"],
        vec!["frobnicate"],
    ] {
        assert_eq!(oddcycle(&args).status.code(), Some(2), "{args:?}");
    }
}
