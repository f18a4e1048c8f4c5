//! Runs the `cdcodes` binary end to end.

use std::path::Path;
use std::process::{Command, Output};

use consta_dihedral::code::format::read_code;

fn cdcodes(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cdcodes")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn code_of(path: &Path) -> consta_dihedral::code::LinearCode {
    read_code(&std::fs::read_to_string(path).unwrap()).unwrap()
}

#[test]
fn decompose_reports_blocks() {
    let o = cdcodes(&["decompose", "--q", "7", "--n", "3", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["sum_4k"], 4);
    let kinds: Vec<&str> = v["components"].as_array().unwrap().iter().map(|c| c["kind"].as_str().unwrap()).collect();
    assert_eq!(kinds, ["trivial-field", "paired"]);

    let o = cdcodes(&["decompose", "--q", "3", "--n", "5", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["components"][1]["kind"], "self-conj");
    assert_eq!(v["components"][1]["k"], 2);
}

#[test]
fn construct_round_trips_through_files() {
    let dir = tempfile::tempdir().unwrap();
    for (format, ext) in [("text", "txt"), ("json", "json")] {
        let path = dir.path().join(format!("code.{ext}"));
        let o = cdcodes(&[
            "construct", "--q", "5", "--n", "3", "--family", "self-dual", "--beta", "random:42", "--format", format, "--out",
            path.to_str().unwrap(),
        ]);
        assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
        let code = code_of(&path);
        assert_eq!((code.n_len(), code.k_dim()), (6, 3));
        assert!(code.is_self_dual());

        let o = cdcodes(&["analyze", "--code", path.to_str().unwrap(), "--check", "hull", "--format", "json"]);
        assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
        assert!(stdout(&o).contains("\"hull_dim\": 3"), "{}", stdout(&o));
    }
    let text = code_of(&dir.path().join("code.txt"));
    let json = code_of(&dir.path().join("code.json"));
    assert_eq!(text.gen(), json.gen());
}

#[test]
fn lcd_construction_reports_hull() {
    let o = cdcodes(&["construct", "--q", "3", "--n", "7", "--family", "lcd"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("# family lcd dim 6 hull 6"), "{}", stdout(&o));
    let o = cdcodes(&["construct", "--q", "3", "--n", "7", "--family", "lcd", "--with-a0"]);
    assert!(stdout(&o).contains("dim 8 hull 6"));
}

#[test]
fn seeded_output_is_reproducible() {
    let a = cdcodes(&["construct", "--q", "4", "--n", "7", "--family", "self-dual", "--beta", "random", "--seed", "9"]);
    let b = cdcodes(&["construct", "--q", "4", "--n", "7", "--family", "self-dual", "--beta", "random", "--seed", "9"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);

    let census = |jobs: &str| {
        cdcodes(&["analyze", "--q", "3", "--n", "5", "--check", "census", "--delta", "0.1,0.3", "--format", "csv", "--jobs", jobs])
    };
    let (one, two) = (census("1"), census("2"));
    assert_eq!(one.status.code(), Some(0), "{}", String::from_utf8_lossy(&one.stderr));
    assert_eq!(one.stdout, two.stdout);
    assert!(stdout(&one).starts_with("index,beta,min_weight,relative_distance"));
}

#[test]
fn census_csv_writes_a_summary() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("census.csv");
    let o = cdcodes(&[
        "analyze", "--q", "3", "--n", "5", "--check", "census", "--delta", "0.1,0.3", "--format", "csv", "--out",
        out.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let mut reader = csv::Reader::from_path(&out).unwrap();
    assert_eq!(reader.records().count(), 80);
    let summary: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(dir.path().join("census.csv.summary.json")).unwrap()).unwrap();
    assert_eq!(summary["k_star"], 80);
    assert_eq!(summary["deltas"].as_array().unwrap().len(), 2);
}

#[test]
fn exhaustive_construct_lists_every_beta() {
    let o = cdcodes(&["construct", "--q", "5", "--n", "3", "--family", "self-dual", "--beta", "exhaustive", "--format", "csv"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    let rows: Vec<&str> = out.lines().filter(|l| !l.starts_with('#')).collect();
    assert_eq!(rows[0], "index,beta,dim,hull_dim,verdict");
    assert_eq!(rows.len(), 1 + 24);
    assert!(rows[1..].iter().all(|r| r.ends_with(",3,3,self-dual")), "{out}");
}

#[test]
fn exit_codes() {
    assert_eq!(cdcodes(&["construct", "--q", "7", "--n", "3", "--family", "self-dual"]).status.code(), Some(3));
    assert_eq!(cdcodes(&["decompose", "--q", "6", "--n", "3"]).status.code(), Some(2));
    assert_eq!(cdcodes(&["decompose", "--q", "5", "--n", "5"]).status.code(), Some(2));
    assert_eq!(
        cdcodes(&["construct", "--q", "4", "--n", "7", "--family", "self-dual", "--beta", "exhaustive", "--budget", "10"])
            .status
            .code(),
        Some(4)
    );
    assert_eq!(cdcodes(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(cdcodes(&["analyze", "--code", "/nonexistent/code.txt"]).status.code(), Some(2));
}

#[test]
fn verify_paper_on_a_passing_grid() {
    let o = cdcodes(&["verify-paper", "--q-grid", "5,2"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).contains("all checks passed"));
    let o = cdcodes(&["verify-paper", "--q-grid", "5,2", "--tamper-sign"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn verify_paper_reports_the_failing_block() {
    let o = cdcodes(&["verify-paper", "--q-grid", "3"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("n=7 q=3"), "{}", stdout(&o));
}
