use std::path::PathBuf;
use std::process::{Command, Output};

fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/data").join(name)
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bimatroid"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn k4() -> String {
    data("k4.mat").display().to_string()
}

#[test]
fn rank_of_matroid_and_subset() {
    let o = run(&["rank", &k4()]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "3\n");
    // d = a + b, so a, b, d form a triangle
    let o = run(&["rank", &k4(), "--set", "a,b,d"]);
    assert_eq!(stdout(&o), "2\n");
    let o = run(&["rank", &k4(), "--set", "a,b,c"]);
    assert_eq!(stdout(&o), "3\n");
    let tri = data("triangle.mat").display().to_string();
    assert_eq!(stdout(&run(&["rank", &tri, "--set", "a,b,c"])), "2\n");
}

#[test]
fn circuits_cocircuits_components() {
    let tri = data("triangle.mat").display().to_string();
    assert_eq!(stdout(&run(&["circuits", &tri])), "{a,b,c}\n");
    assert_eq!(stdout(&run(&["cocircuits", &tri])), "{a,b}\n{a,c}\n{b,c}\n");
    let c4 = data("c4.mat").display().to_string();
    assert_eq!(
        stdout(&run(&["components", &c4])),
        "{e1,e2,e3,e4}\n"
    );
    let circuits = stdout(&run(&["circuits", &k4()]));
    assert_eq!(circuits.lines().count(), 7);
    let cocircuits = stdout(&run(&["cocircuits", &k4()]));
    assert_eq!(cocircuits.lines().count(), 7);
}

#[test]
fn connectivity_of_k4() {
    let o = run(&["connectivity", &k4()]);
    assert_eq!(
        stdout(&o),
        "connected: true\nconnectivity: 3\nvertical-connectivity: infinite\n"
    );
}

#[test]
fn split_writes_the_appended_row() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("split.mat");
    let o = run(&["split", &k4(), "-x", "a,f", "-o", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        std::fs::read_to_string(&out).unwrap(),
        "matroid 4 6\nlabels a b c d e f\n100110\n010101\n001011\n100001\n"
    );
    let pair = run(&["split", &k4(), "--x", "a", "--y", "f"]);
    assert_eq!(
        stdout(&pair),
        std::fs::read_to_string(&out).unwrap(),
        "pair and set forms agree"
    );
    let back = run(&["rank", out.to_str().unwrap()]);
    assert_eq!(stdout(&back), "4\n");
}

#[test]
fn graph_split_detaches_both_edges() {
    let g = data("k4-parallel.graph").display().to_string();
    let o = run(&["graph-split", &g, "--x", "x", "--y", "y"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.starts_with("graph\nx 1' 2\ny 1' 2\n"), "{text}");
}

#[test]
fn check_matches_golden_output() {
    let o = run(&["check", "thm-1.11", &k4(), "--set", "a,f", "--n", "2"]);
    assert_eq!(o.status.code(), Some(0));
    let golden = std::fs::read_to_string(data("k4-af-thm-1.11.expected")).unwrap();
    assert_eq!(stdout(&o), golden);
}

#[test]
fn exit_codes_follow_verdicts() {
    let tri = data("triangle.mat").display().to_string();
    let pass = run(&["check", "lemma-1.3", &k4(), "--x", "a", "--y", "b"]);
    assert_eq!(pass.status.code(), Some(0));
    let fail = run(&["check", "lemma-2.3-converse", &tri, "--x", "a", "--y", "b"]);
    assert_eq!(fail.status.code(), Some(1));
    assert!(stdout(&fail).contains("FAILS"));
    // adjacent edges of K4 leave a pendant edge behind
    let unmet = run(&["check", "lemma-2.3", &k4(), "--x", "a", "--y", "b"]);
    assert_eq!(unmet.status.code(), Some(3));
    let unknown = run(&["check", "lemma-9.9", &k4()]);
    assert_eq!(unknown.status.code(), Some(2));
    assert!(stderr(&unknown).contains("unknown statement"));
    let usage = run(&["rank"]);
    assert_eq!(usage.status.code(), Some(2));
}

#[test]
fn non_adjacent_k4_pair_passes_deletion_lemma() {
    let o = run(&["check", "lemma-2.3", &k4(), "--x", "a", "--y", "f"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
}

#[test]
fn json_report_is_one_line() {
    let o = run(&["check", "lemma-1.3", &k4(), "--x", "a", "--y", "b", "--json"]);
    let text = stdout(&o);
    assert_eq!(text.lines().count(), 1);
    assert!(text.starts_with("{\"statement_id\":\"lemma-1.3\""));
    assert!(text.contains("\"verdict\":\"pass\""));
}

#[test]
fn parse_errors_name_file_line_and_column() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.mat");
    std::fs::write(&bad, "matroid 2 3\n101\n01\n").unwrap();
    let o = run(&["rank", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    let msg = stderr(&o);
    assert!(
        msg.contains("bad.mat: line 3, column 3: length mismatch"),
        "{msg}"
    );
}

#[test]
fn connectivity_guard_is_reported() {
    let dir = tempfile::tempdir().unwrap();
    let big = dir.path().join("big.mat");
    std::fs::write(&big, format!("matroid 1 21\n{}\n", "1".repeat(21))).unwrap();
    let o = run(&["connectivity", big.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stdout(&o).is_empty());
    assert!(stderr(&o).contains("partition guard of 20"), "{}", stderr(&o));
}

#[test]
fn enum_counts_all_matroids_on_four_elements() {
    let o = run(&["enum", "--n", "4"]);
    assert_eq!(stdout(&o), "67 matroids scanned\n");
}

#[test]
fn scans_are_deterministic_and_write_reports() {
    let dir = tempfile::tempdir().unwrap();
    let report = dir.path().join("r.jsonl");
    let args = [
        "enum",
        "--n",
        "4",
        "--check",
        "lemma-1.3",
        "--report",
        report.to_str().unwrap(),
    ];
    let first = run(&args);
    assert_eq!(first.status.code(), Some(0));
    let lines = std::fs::read_to_string(&report).unwrap();
    let second = run(&args);
    assert_eq!(stdout(&first), stdout(&second));
    assert_eq!(lines, std::fs::read_to_string(&report).unwrap());
    assert!(stdout(&first).starts_with("lemma-1.3 instances=67 "));
    assert!(stdout(&first).contains(" fail=0 "));
    assert_eq!(
        lines.lines().count(),
        stdout(&first)
            .split_whitespace()
            .find_map(|w| w.strip_prefix("checks="))
            .unwrap()
            .parse::<usize>()
            .unwrap()
    );
}

#[test]
fn search_prints_only_failures() {
    let o = run(&["search", "lemma-2.3-converse", "--n", "4"]);
    assert_eq!(o.status.code(), Some(1));
    let text = stdout(&o);
    assert!(!text.is_empty());
    assert!(text.lines().all(|l| l.contains("\"verdict\":\"fail\"")));
    let clean = run(&["search", "lemma-1.4", "--n", "4"]);
    assert_eq!(clean.status.code(), Some(0));
    assert!(stdout(&clean).is_empty());
}

#[test]
fn figures_need_no_input() {
    for fig in ["figure-1", "figure-2"] {
        let o = run(&["check", fig]);
        assert_eq!(o.status.code(), Some(0), "{fig}: {}", stdout(&o));
    }
}
