use std::io::Write;
use std::process::{Command, Stdio};

use degdev_core::bounds::BoundReport;
use degdev_core::verify::CorpusSummary;

struct Output {
    code: i32,
    stdout: String,
    stderr: String,
}

fn degdev(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_degdev"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    let out = child.wait_with_output().unwrap();
    Output {
        code: out.status.code().unwrap_or(-1),
        stdout: String::from_utf8(out.stdout).unwrap(),
        stderr: String::from_utf8(out.stderr).unwrap(),
    }
}

#[test]
fn analyze_star_json_round_trips() {
    let out = degdev(&["analyze", "--gen", "star:5", "--output", "json"], "");
    assert_eq!(out.code, 0, "{}", out.stderr);
    let line = out.stdout.trim_end();
    let report = BoundReport::from_json(line).unwrap();
    assert_eq!(report.s.to_string(), "24/5");
    assert!(line.contains(r#""s":"24/5""#) && line.contains(r#""avg_degree":"8/5""#));
    assert!(line.contains(r#""verdict_theorem1":"pass""#));
    assert_eq!(report.to_json(), line);
}

#[test]
fn graph6_lines_keep_their_order() {
    let input = "DQc\nB_\n\nC~\n";
    let out = degdev(&["analyze", "-"], input);
    assert_eq!(out.code, 0, "{}", out.stderr);
    let ns: Vec<usize> = out.stdout.lines().map(|l| BoundReport::from_json(l).unwrap().n).collect();
    assert_eq!(ns, vec![5, 3, 4]);
}

#[test]
fn csv_and_human_outputs() {
    let out = degdev(&["analyze", "--gen", "path:3", "--output", "csv"], "");
    let mut lines = out.stdout.lines();
    assert!(lines.next().unwrap().starts_with("n,m,avg_degree,s,"));
    assert!(lines.next().unwrap().starts_with("3,2,4/3,4/3,"));

    let out = degdev(&["star-sweep", "--n", "5,10", "--output", "human"], "");
    assert_eq!(out.code, 0);
    assert!(out.stdout.contains("0.182574"), "{}", out.stdout);
}

#[test]
fn input_errors_exit_2() {
    let looped = degdev(&["analyze", "--format", "edgelist", "-"], "3 2\n0 1\n2 2\n");
    assert_eq!(looped.code, 2);
    assert!(looped.stderr.contains("loop"), "{}", looped.stderr);

    let bad = degdev(&["analyze", "--graph6", "D Q"], "");
    assert_eq!(bad.code, 2);
    assert!(bad.stderr.contains("`D Q`"), "{}", bad.stderr);

    let missing = degdev(&["analyze", "/no/such/file.g6"], "");
    assert_eq!(missing.code, 2);
    assert!(missing.stderr.contains("/no/such/file.g6"));

    let family = degdev(&["analyze", "--gen", "wheel:5"], "");
    assert_eq!(family.code, 2);
    assert!(family.stderr.contains("wheel"));

    assert_eq!(degdev(&["analyze", "--gen", "star:5", "--tol", "0"], "").code, 2);
    assert_eq!(degdev(&["analyze", "x.g6", "--gen", "star:5"], "").code, 2);
    assert_eq!(degdev(&["analyze"], "").code, 2);
    assert_eq!(degdev(&["enumerate", "--n-max", "8"], "").code, 2);
    assert_eq!(degdev(&["verify", "--families", "star", "--sizes", "5", "--count", "0"], "").code, 2);
}

#[test]
fn enumerate_small() {
    let out = degdev(&["enumerate", "--n-max", "4"], "");
    assert_eq!(out.code, 0);
    let summary: CorpusSummary = serde_json::from_str(out.stdout.trim_end()).unwrap();
    assert_eq!(summary.graphs_checked, 64);
    assert!(summary.violations.is_empty());
}

#[test]
fn ratio_threshold_is_a_violation() {
    let out = degdev(&["enumerate", "--n-max", "4", "--max-ratio", "0.3"], "");
    assert_eq!(out.code, 1);
    assert!(out.stderr.contains("C_"));
    assert_eq!(degdev(&["enumerate", "--n-max", "4", "--max-ratio", "0.5"], "").code, 0);
    assert_eq!(degdev(&["analyze", "--gen", "star:50", "--max-ratio", "0.5"], "").code, 1);
}

#[test]
fn random_verify_is_reproducible() {
    let args = ["verify", "--families", "gnp:0.2,circulant", "--sizes", "6..=12", "--count", "40", "--seed", "5"];
    let a: CorpusSummary = serde_json::from_str(degdev(&args, "").stdout.trim_end()).unwrap();
    let b: CorpusSummary = serde_json::from_str(degdev(&[&args[..], &["--sequential"]].concat(), "").stdout.trim_end()).unwrap();
    assert!(a.same_result(&b));
    assert_eq!(a.graphs_checked, 40);
}

#[test]
fn files_and_rows() {
    let dir = tempfile::tempdir().unwrap();
    let graphs = dir.path().join("in.g6");
    std::fs::write(&graphs, "DQc\nEQjO\n").unwrap();
    let rows = dir.path().join("rows.csv");
    let summary = dir.path().join("summary.json");
    let out = degdev(
        &[
            "verify",
            graphs.to_str().unwrap(),
            "--rows",
            rows.to_str().unwrap(),
            "--out",
            summary.to_str().unwrap(),
        ],
        "",
    );
    assert_eq!(out.code, 0, "{}", out.stderr);
    assert!(out.stdout.is_empty());
    let summary: CorpusSummary = serde_json::from_str(&std::fs::read_to_string(&summary).unwrap()).unwrap();
    assert_eq!(summary.graphs_checked, 2);
    assert!(summary.corpus_id.starts_with("file:"));
    assert_eq!(std::fs::read_to_string(&rows).unwrap().lines().count(), 3);
}

#[test]
fn blowup_table() {
    let out = degdev(&["blowup", "--gen", "path:3", "-t", "1,2,3"], "");
    assert_eq!(out.code, 0, "{}", out.stderr);
    let rows: Vec<serde_json::Value> = out.stdout.lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(rows.len(), 3);
    assert_eq!(rows[1]["s"], "16/3");
    assert_eq!(rows[2]["n"], 9);
    assert_eq!(degdev(&["blowup", "--gen", "path:3", "-t", "0"], "").code, 2);
}
