//! The `socx` binary: exit-code contract, file round trips, and outputs.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use socx::gamma::{gamma_table, render_table};
use socx::socx::build_yn;
use socx::socx::json::SocxDocument;

fn socx(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_socx")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("socx-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

fn build(n: u32) -> PathBuf {
    let path = scratch(&format!("y{n}.json"));
    let o = socx(&["build-yn", &n.to_string(), "-o", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    path
}

fn p(path: &Path) -> &str {
    path.to_str().unwrap()
}

#[test]
fn build_yn_documents() {
    let doc: SocxDocument = serde_json::from_str(&std::fs::read_to_string(build(1)).unwrap()).unwrap();
    assert_eq!(doc.generators.len(), 2);
    assert_eq!(doc.d.len() + doc.u.len() + doc.d1.len() + doc.d2.len(), 3);
    assert_eq!((doc.d1.len(), doc.u.len()), (1, 2));
    let doc2: SocxDocument = serde_json::from_str(&std::fs::read_to_string(build(2)).unwrap()).unwrap();
    assert_eq!(doc2.generators.len(), 12);
    assert_eq!(socx(&["build-yn", "0"]).status.code(), Some(2));
}

#[test]
fn build_yn_is_deterministic() {
    let a = socx(&["build-yn", "3"]);
    let b = socx(&["build-yn", "3"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn validate_exit_codes() {
    let y3 = build(3);
    assert_eq!(socx(&["validate", p(&y3)]).status.code(), Some(0));

    // Y_2 has d² = 0 for trivial reasons; in Y_3 flipping a d-entry that
    // feeds into a further d breaks it.
    let text = std::fs::read_to_string(&y3).unwrap();
    let corrupt = |k: usize| {
        let mut doc: SocxDocument = serde_json::from_str(&text).unwrap();
        doc.d[k].terms = -&doc.d[k].terms;
        doc
    };
    let n_d = corrupt(0).d.len();
    let k = (0..n_d)
        .find(|&k| {
            let s = corrupt(k).into_complex().unwrap();
            s.validation().failed_axioms().contains(&"d²=0")
        })
        .expect("some sign flip breaks d²=0");
    let doc = corrupt(k);
    let bad = scratch("corrupt.json");
    std::fs::write(&bad, serde_json::to_string(&doc).unwrap()).unwrap();
    let o = socx(&["validate", p(&bad)]);
    assert_eq!(o.status.code(), Some(1));
    let out = stdout(&o);
    assert!(out.contains("[d²=0]"), "{out}");
    assert!(out.contains("composite entry"), "{out}");
    assert!(out.contains("failed identities: "), "{out}");

    let junk = scratch("junk.json");
    std::fs::write(&junk, "{ not json").unwrap();
    assert_eq!(socx(&["validate", p(&junk)]).status.code(), Some(2));
    assert_eq!(socx(&["validate", "/nonexistent/socx.json"]).status.code(), Some(3));
}

#[test]
fn validate_json_report() {
    let o = socx(&["--json", "validate", p(&build(1))]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["report"]["ok"], true);
    assert_eq!(v["rank"], 2);
}

#[test]
fn gamma_tables() {
    let y1 = build(1);
    let o = socx(&["--quiet", "gamma", p(&y1), "--range", "-1..3"]);
    assert_eq!(o.status.code(), Some(0));
    let values: Vec<String> =
        stdout(&o).lines().skip(2).map(|l| l.split_whitespace().nth(1).unwrap().to_string()).collect();
    assert_eq!(values, ["0", "0", "1/120", "49/120", "inf"]);

    let y2 = build(2);
    let o = socx(&["--quiet", "gamma", p(&y2), "--i", "4", "--oracle"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("4  49/60"), "{out}");
    assert!(out.contains("(agrees)"), "{out}");

    let o = socx(&["--json", "gamma", p(&y2), "--i", "5"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["rows"][0]["value"], "inf");

    assert_eq!(socx(&["gamma", p(&y2), "--range", "3..1"]).status.code(), Some(2));
    assert_eq!(socx(&["gamma", p(&y2)]).status.code(), Some(2));
}

#[test]
fn round_trip_tables_match_in_memory() {
    for n in 1..=4u32 {
        let path = build(n);
        let imax = 2 * n as i64 + 2;
        let range = format!("-2..{imax}");
        let o = socx(&["--quiet", "gamma", p(&path), "--range", &range]);
        assert_eq!(o.status.code(), Some(0));
        let table = gamma_table(&build_yn(n).unwrap(), -2, imax).unwrap();
        assert_eq!(stdout(&o), render_table(&table), "n = {n}");
    }
}

#[test]
fn banner_is_the_only_difference() {
    let y1 = build(1);
    let loud = stdout(&socx(&["gamma", p(&y1), "--i", "2"]));
    let quiet = stdout(&socx(&["--quiet", "gamma", p(&y1), "--i", "2"]));
    assert_eq!(loud, format!("# socx {}\n{quiet}", env!("CARGO_PKG_VERSION")));
}

#[test]
fn tensor_command() {
    let (y1, y2) = (build(1), build(2));
    let out = scratch("y1y1.json");
    let o = socx(&["tensor", p(&y1), p(&y1), "-o", p(&out)]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("2·12+1 = 25"));
    assert_eq!(socx(&["validate", p(&out)]).status.code(), Some(0));

    let o = socx(&["tensor", p(&y1), p(&y2), "-o", p(&scratch("y1y2.json"))]);
    assert!(stdout(&o).contains("2·62+1"));

    let o = socx(&["tensor", p(&y2), p(&y1)]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("d ≠ 0"));
}

#[test]
fn charvar_and_certify() {
    let o = socx(&["--json", "--verbose", "charvar", "2"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["census"]["total"], 9);
    assert_eq!(v["census"]["components"].as_array().unwrap().len(), 9);
    assert_eq!(v["extension"][0]["sigma"], "(β,β)");

    let o = socx(&["--quiet", "certify", "4"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("Γ_Y4(8) = 49/30"));

    let o = socx(&["--quiet", "certify", "12"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("[skipped] gamma"), "{out}");
    assert!(out.contains("result: certified"));

    assert_eq!(socx(&["certify", "13"]).status.code(), Some(2));
    assert_eq!(socx(&["charvar", "0"]).status.code(), Some(2));
}
