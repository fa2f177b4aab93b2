use std::process::{Command, Output};

use fitting::corpus::{find_builtin, to_grp};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fitting"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).expect("utf-8 output")
}

fn corpus_dir(names: &[&str]) -> tempfile::TempDir {
    let dir = tempfile::tempdir().unwrap();
    for (i, name) in names.iter().enumerate() {
        let e = find_builtin(name).unwrap();
        std::fs::write(dir.path().join(format!("{i:02}.grp")), to_grp(&e.spec)).unwrap();
    }
    dir
}

#[test]
fn verify_output_is_identical_across_worker_counts() {
    let one = run(&["verify", "--format", "lines", "--jobs", "1"]);
    let four = run(&["verify", "--format", "lines", "--jobs", "4"]);
    assert_eq!(
        one.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&one.stderr)
    );
    assert_eq!(four.status.code(), Some(0));
    assert_eq!(one.stdout, four.stdout);
    let text = stdout(&one);
    assert!(text.lines().count() > 35 * 30);
    assert!(!text.contains('\r'));
}

#[test]
fn table_rows_for_s3_and_q8() {
    let dir = corpus_dir(&["S3", "Q8"]);
    let out = run(&["verify", "--corpus", dir.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let row = |name: &str| -> Vec<String> {
        let line = text.lines().find(|l| l.starts_with(name)).unwrap();
        line.split_whitespace().take(8).map(String::from).collect()
    };
    assert_eq!(row("S3"), ["S3", "6", "1", "3", "3", "3", "3", "1"]);
    assert_eq!(row("Q8"), ["Q8", "8", "2", "8", "8", "8", "8", "0"]);
}

#[test]
fn line_records_have_fixed_field_order() {
    let dir = corpus_dir(&["S3"]);
    let out = run(&[
        "verify",
        "--corpus",
        dir.path().to_str().unwrap(),
        "--checks",
        "radical-chain,fstar-centralizer",
        "--format",
        "lines",
    ]);
    let text = stdout(&out);
    assert_eq!(text.lines().count(), 2);
    for line in text.lines() {
        let v: serde_json::Value = serde_json::from_str(line).unwrap();
        let keys: Vec<&String> = v.as_object().unwrap().keys().collect();
        assert_eq!(keys.len(), 11);
        let order = [
            "group",
            "order",
            "check_id",
            "status",
            "witness",
            "phi",
            "fit",
            "fstar",
            "ftilde",
            "ftilde_inf",
            "stab_index",
        ];
        let positions: Vec<usize> = order
            .iter()
            .map(|k| line.find(&format!("\"{k}\":")).unwrap())
            .collect();
        assert!(positions.windows(2).all(|w| w[0] < w[1]), "{line}");
    }
}

#[test]
fn tiny_budget_skips_and_still_succeeds() {
    let dir = corpus_dir(&["S4"]);
    let out = run(&[
        "verify",
        "--corpus",
        dir.path().to_str().unwrap(),
        "--max-pairs",
        "1",
        "--max-subgroups",
        "5",
        "--format",
        "lines",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("\"status\":\"skipped\""));
}

#[test]
fn usage_errors_exit_with_two() {
    assert_eq!(
        run(&["verify", "--checks", "no-such-check"]).status.code(),
        Some(2)
    );
    assert_eq!(run(&["verify", "--no-such-flag"]).status.code(), Some(2));
    assert_eq!(
        run(&["verify", "--corpus", "/nonexistent/corpus.grp"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(run(&["verify", "--max-pairs", "0"]).status.code(), Some(2));
    assert_eq!(run(&["info", "NoSuchGroup"]).status.code(), Some(2));
    assert_eq!(run(&[]).status.code(), Some(2));
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.grp");
    std::fs::write(&bad, "name X\ndegree 3\ngen (0 1\n").unwrap();
    let out = run(&["verify", "--corpus", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 3"));
}

#[test]
fn info_reports_radicals() {
    let out = run(&["info", "S3xS4"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("order        144"));
    assert!(text
        .lines()
        .any(|l| l.split_whitespace().collect::<Vec<_>>() == ["F~", "12"]));
}

#[test]
fn counterexample_certifies_every_property() {
    let out = run(&["counterexample"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert_eq!(text.lines().filter(|l| l.starts_with("ok")).count(), 5);
    assert!(!text.contains("FAIL"));
}

#[test]
fn probe_problems_summarizes() {
    let out = run(&["probe", "problems", "--jobs", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let summary: serde_json::Value = serde_json::from_str(text.lines().last().unwrap()).unwrap();
    assert!(summary["groups"].as_u64().unwrap() >= 35);
    assert!(summary["max_index"].as_u64().unwrap() <= 1);
}
