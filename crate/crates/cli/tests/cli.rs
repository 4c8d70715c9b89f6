//! End-to-end runs of the `itdom` binary.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use itdom_core::graph::{encode_graph6, named_graph, NamedFamily};
use serde_json::Value;

fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("tests/fixtures")
        .join(name)
}

struct Run {
    cache: tempfile::TempDir,
}

impl Run {
    fn new() -> Self {
        Run {
            cache: tempfile::tempdir().unwrap(),
        }
    }

    fn exec(&self, args: &[&str]) -> Output {
        Command::new(env!("CARGO_BIN_EXE_itdom"))
            .args(args)
            .env("ITDOM_CACHE_DIR", self.cache.path())
            .output()
            .unwrap()
    }

    fn json(&self, args: &[&str]) -> (i32, Value) {
        let out = self.exec(args);
        let code = out.status.code().unwrap();
        let text = String::from_utf8(out.stdout).unwrap();
        let v = serde_json::from_str(&text)
            .unwrap_or_else(|e| panic!("{e}: {text} {}", String::from_utf8_lossy(&out.stderr)));
        (code, v)
    }
}

fn code(out: &Output) -> i32 {
    out.status.code().unwrap()
}

#[test]
fn invariants_of_small_graphs() {
    let r = Run::new();
    let (c, v) = r.json(&[
        "invariants",
        "--corpus",
        fixture("c4.edges").to_str().unwrap(),
    ]);
    assert_eq!(c, 0);
    let inv = &v["entries"][0]["invariants"];
    assert_eq!(
        (&inv["alpha"], &inv["beta"], &inv["gamma"], &inv["gamma_it"]),
        (
            &Value::from(2),
            &Value::from(2),
            &Value::from(2),
            &Value::from(2)
        )
    );

    let (_, v) = r.json(&["invariants", "--graph", "@"]);
    assert!(v["entries"][0]["invariants"]["gamma_t"].is_null());

    let petersen = encode_graph6(&named_graph(NamedFamily::Petersen).unwrap()).unwrap();
    let (_, v) = r.json(&["invariants", "--graph", &petersen]);
    let inv = &v["entries"][0]["invariants"];
    assert_eq!(inv["alpha"], 4);
    assert_eq!(inv["matching"], 5);
    assert_eq!(inv["gamma"], 3);
}

#[test]
fn report_shape_and_ordering() {
    let r = Run::new();
    let (_, v) = r.json(&["invariants", "--order", "4"]);
    let keys: Vec<&str> = v.as_object().unwrap().keys().map(|k| k.as_str()).collect();
    for k in ["version", "command", "entries", "summary", "elapsed_ms"] {
        assert!(keys.contains(&k), "{k}");
    }
    let codes: Vec<&str> = v["entries"]
        .as_array()
        .unwrap()
        .iter()
        .map(|e| e["graph6"].as_str().unwrap())
        .collect();
    assert_eq!(codes.len(), 6);
    assert!(codes.windows(2).all(|w| w[0] <= w[1]));
    assert_eq!(v["summary"]["graphs"], 6);
}

#[test]
fn verify_catalog_six_is_clean() {
    let r = Run::new();
    let (c, v) = r.json(&["verify", "--theorems", "all", "--order", "6"]);
    assert_eq!(c, 0);
    assert_eq!(v["summary"]["proven_violations"], 0);
    assert_eq!(v["summary"]["graphs"], 112);
    let s = &v["summary"]["status"];
    let total = s["holds"].as_u64().unwrap()
        + s["not_applicable"].as_u64().unwrap()
        + s["violated"].as_u64().unwrap();
    assert_eq!(total, v["summary"]["verdicts"].as_u64().unwrap());
}

#[test]
fn refutable_violations_do_not_fail() {
    let r = Run::new();
    let pc = fixture("petersen_complement.g6");
    let (c, v) = r.json(&[
        "verify",
        "--theorems",
        "CONJ1",
        "--corpus",
        pc.to_str().unwrap(),
    ]);
    assert_eq!(c, 0);
    assert_eq!(v["summary"]["refutable_violations"], 1);
    assert_eq!(v["entries"][0]["verdicts"][0]["status"], "Violated");

    let f1 = fixture("figure1.g6");
    let (c, v) = r.json(&[
        "verify",
        "--theorems",
        "T3.1-ORIG",
        "--corpus",
        f1.to_str().unwrap(),
    ]);
    assert_eq!(c, 0);
    assert_eq!(v["summary"]["refutable_violations"], 1);
}

#[test]
fn proven_violation_exits_one() {
    // P3 breaks the half-order bound as stated.
    let r = Run::new();
    let (c, v) = r.json(&["verify", "--theorems", "T1.2", "--order", "3"]);
    assert_eq!(c, 1);
    assert_eq!(v["summary"]["proven_violations"], 1);
}

#[test]
fn generate_lines() {
    let r = Run::new();
    let lines = |n: &str| {
        let out = r.exec(&["generate", "--order", n]);
        assert_eq!(code(&out), 0);
        String::from_utf8(out.stdout).unwrap().lines().count()
    };
    assert_eq!(lines("4"), 6);
    assert_eq!(lines("3"), 2);
    let out = r.exec(&["generate", "--order", "1"]);
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "@\n");
    assert_eq!(code(&r.exec(&["generate", "--order", "8"])), 2);
    assert_eq!(code(&r.exec(&["generate", "--order", "0"])), 2);
    let out = r.exec(&["generate", "--order", "5", "--all"]);
    assert_eq!(String::from_utf8(out.stdout).unwrap().lines().count(), 34);
}

#[test]
fn counterexamples_report() {
    let r = Run::new();
    let (c, v) = r.json(&["counterexamples", "--no-timing"]);
    assert_eq!(c, 0);
    let entries = v["entries"].as_array().unwrap();
    let by_name = |name: &str| entries.iter().find(|e| e["name"] == name).unwrap().clone();
    let pc = by_name("complement_of_petersen");
    let git = pc["chain"]["gamma_it"].as_u64().unwrap();
    assert!(git >= 6 && git > pc["chain"]["ceil_half_n"].as_u64().unwrap());
    assert_eq!(pc["chain"]["tau_i"], 6);
    assert_eq!(pc["chain"]["beta_complement"], 6);
    let f1 = by_name("two_pendant_counterexample");
    assert_eq!(f1["invariants"]["gamma"], 2);
    assert_eq!(f1["invariants"]["gamma_it"], 3);
}

#[test]
fn output_is_byte_identical() {
    let r = Run::new();
    let a = r.exec(&["counterexamples", "--no-timing"]);
    let b = r.exec(&["counterexamples", "--no-timing"]);
    assert_eq!(a.stdout, b.stdout);
    // With timing on, only elapsed_ms may differ.
    let strip = |o: Output| {
        let mut v: Value = serde_json::from_slice(&o.stdout).unwrap();
        v.as_object_mut().unwrap().remove("elapsed_ms");
        v
    };
    let c = r.exec(&["counterexamples"]);
    let d = r.exec(&["counterexamples"]);
    assert_eq!(strip(c), strip(d));
}

#[test]
fn worker_count_does_not_change_results() {
    let r = Run::new();
    let run = |jobs: &str| {
        let (_, mut v) = r.json(&["verify", "--up-to", "6", "--jobs", jobs]);
        let o = v.as_object_mut().unwrap();
        o.remove("elapsed_ms");
        o.remove("command");
        v
    };
    assert_eq!(run("1"), run("4"));
    let search = |jobs: &str| {
        let out = r.exec(&[
            "search",
            "--mode",
            "max_tau_i",
            "--order",
            "6",
            "--jobs",
            jobs,
            "--format",
            "csv",
        ]);
        out.stdout
    };
    assert_eq!(search("1"), search("3"));
}

#[test]
fn searches() {
    let r = Run::new();
    let (c, v) = r.json(&["search", "--mode", "max_tau_i", "--order", "5"]);
    assert_eq!(c, 0);
    assert_eq!(v["summary"]["max_tau_i"], 5);
    let k5 = encode_graph6(&named_graph(NamedFamily::Complete(5)).unwrap()).unwrap();
    assert!(v["entries"]
        .as_array()
        .unwrap()
        .iter()
        .any(|e| e["graph6"] == k5.as_str() && e["tau_i"] == 5));

    let (_, v) = r.json(&["search", "--mode", "bipartite_half_gammait", "--order", "6"]);
    let hits = v["entries"].as_array().unwrap();
    assert!(!hits.is_empty());
    for h in hits {
        assert_eq!(h["gamma_it"], 3);
        let g = h["gamma"].as_u64().unwrap();
        assert!(g == 2 || g == 3);
    }

    let (_, v) = r.json(&["search", "--mode", "bipartite_half_gammait", "--order", "2"]);
    assert!(v["entries"].as_array().unwrap().is_empty());
}

#[test]
fn exit_code_contract() {
    let r = Run::new();
    // Parse error.
    assert_eq!(code(&r.exec(&["invariants", "--graph", "C!"])), 2);
    // Unknown theorem id.
    assert_eq!(
        code(&r.exec(&["verify", "--theorems", "T9.9", "--order", "3"])),
        2
    );
    // Unknown flag and unknown search mode.
    assert_eq!(code(&r.exec(&["invariants", "--bogus"])), 2);
    assert_eq!(code(&r.exec(&["search", "--mode", "x", "--order", "4"])), 2);
    // No input.
    assert_eq!(code(&r.exec(&["invariants"])), 2);
    // Missing corpus file.
    assert_eq!(
        code(&r.exec(&["invariants", "--corpus", "/nonexistent/file"])),
        2
    );
    // Order above the solver guard.
    let big = encode_graph6(&itdom_core::Graph::empty(21).unwrap()).unwrap();
    let out = r.exec(&["invariants", "--graph", &big]);
    assert_eq!(code(&out), 3);
    // Too many maximum independent sets for the cap.
    assert_eq!(
        code(&r.exec(&["invariants", "--graph", "Cr", "--omega-cap", "1"])),
        3
    );
}

#[test]
fn csv_format() {
    let r = Run::new();
    let out = r.exec(&["invariants", "--order", "3", "--format", "csv"]);
    let text = String::from_utf8(out.stdout).unwrap();
    let mut lines = text.lines();
    assert!(lines
        .next()
        .unwrap()
        .starts_with("graph6,order,size,min_degree,alpha"));
    assert_eq!(lines.count(), 2);
}

#[test]
fn catalog_cache_on_disk() {
    let r = Run::new();
    assert_eq!(
        code(&r.exec(&["generate", "--order", "5", "--no-cache"])),
        0
    );
    assert_eq!(
        std::fs::read_dir(r.cache.path())
            .map(|d| d.count())
            .unwrap_or(0),
        0
    );
    let first = r.exec(&["generate", "--order", "5"]);
    let files: Vec<_> = std::fs::read_dir(r.cache.path()).unwrap().collect();
    assert_eq!(files.len(), 1);
    let second = r.exec(&["generate", "--order", "5"]);
    assert_eq!(first.stdout, second.stdout);
}

#[test]
fn stdin_corpus() {
    use std::io::Write;
    use std::process::Stdio;
    let cache = tempfile::tempdir().unwrap();
    let mut child = Command::new(env!("CARGO_BIN_EXE_itdom"))
        .args(["invariants", "--corpus", "-", "--format", "csv"])
        .env("ITDOM_CACHE_DIR", cache.path())
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(b"Bw\nC~\n").unwrap();
    let out = child.wait_with_output().unwrap();
    assert_eq!(code(&out), 0);
    assert_eq!(String::from_utf8(out.stdout).unwrap().lines().count(), 3);
}
